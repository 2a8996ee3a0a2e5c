"""Exact planar primitives: orientation, proper crossing, general position.

All predicates run on arbitrary-precision rationals (plain ``int`` or
``fractions.Fraction``); there is no floating-point path, so results are
exact for inputs of any size. Crossing structure is combinatorially fragile
and the replication construction relies on arbitrarily small spacings, which
rules out approximate arithmetic.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import lcm
from typing import Iterable, Iterator, Union

from .errors import InvalidSegmentError, NotGeneralPositionError

Coord = Union[int, Fraction]

_EXACT_TYPES = (int, Fraction)


class Orientation(enum.IntEnum):
    CLOCKWISE = -1
    COLLINEAR = 0
    COUNTERCLOCKWISE = 1


@dataclass(frozen=True)
class Point:
    """A point with exact rational coordinates."""

    x: Coord
    y: Coord

    def __post_init__(self):
        for v in (self.x, self.y):
            # Floats would silently poison every predicate downstream.
            if not isinstance(v, _EXACT_TYPES):
                raise TypeError(f"exact coordinate required, got {type(v).__name__}")


@dataclass(frozen=True)
class PointSet:
    """An ordered, immutable sequence of points; indices 0..n-1 are the labels."""

    points: tuple[Point, ...]

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(self.points))

    @classmethod
    def from_coords(cls, coords: Iterable[tuple[Coord, Coord]]) -> "PointSet":
        return cls(tuple(Point(x, y) for x, y in coords))

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self) -> Iterator[Point]:
        return iter(self.points)

    def __getitem__(self, i: int) -> Point:
        return self.points[i]


@dataclass(frozen=True, order=True)
class Segment:
    """An unordered pair of point indices, stored with ``a < b``."""

    a: int
    b: int

    def __post_init__(self):
        if self.a == self.b:
            raise ValueError(f"degenerate segment ({self.a}, {self.b})")
        if self.a > self.b:
            a, b = self.b, self.a
            object.__setattr__(self, "a", a)
            object.__setattr__(self, "b", b)

    def touches(self, index: int) -> bool:
        return index == self.a or index == self.b

    def shares_endpoint(self, other: "Segment") -> bool:
        return other.touches(self.a) or other.touches(self.b)


def orientation(p: Point, q: Point, r: Point) -> Orientation:
    """Exact sign of the cross product (q - p) x (r - p)."""
    d = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)
    if d > 0:
        return Orientation.COUNTERCLOCKWISE
    if d < 0:
        return Orientation.CLOCKWISE
    return Orientation.COLLINEAR


def segments_cross(S: PointSet, s1: Segment, s2: Segment) -> bool:
    """True iff the two segments intersect in their relative interiors.

    Segments sharing an endpoint never cross. Collinear triples (possible
    only outside general position) count as non-crossing, since an interior
    crossing requires strictly opposite orientations on both sides.
    """
    n = len(S)
    for idx in (s1.a, s1.b, s2.a, s2.b):
        if not 0 <= idx < n:
            raise InvalidSegmentError(f"point index {idx} out of range for {n} points")
    if s1.shares_endpoint(s2):
        return False
    p, q = S[s1.a], S[s1.b]
    r, t = S[s2.a], S[s2.b]
    o1 = orientation(p, q, r)
    o2 = orientation(p, q, t)
    if o1 == Orientation.COLLINEAR or o2 == Orientation.COLLINEAR or o1 == o2:
        return False
    o3 = orientation(r, t, p)
    o4 = orientation(r, t, q)
    if o3 == Orientation.COLLINEAR or o4 == Orientation.COLLINEAR:
        return False
    return o3 != o4


def is_general_position(S: PointSet) -> bool:
    """True iff no three points are collinear (vacuously true for n < 3)."""
    coords = integer_coordinates(S)
    return _collinear_triple(coords) is None


def _collinear_triple(coords: list[tuple[int, int]]) -> tuple[int, int, int] | None:
    """First collinear index triple of an integer coordinate list, else None."""
    n = len(coords)
    for a in range(n - 2):
        ax, ay = coords[a]
        for b in range(a + 1, n - 1):
            ux = coords[b][0] - ax
            uy = coords[b][1] - ay
            for c in range(b + 1, n):
                if ux * (coords[c][1] - ay) == uy * (coords[c][0] - ax):
                    return (a, b, c)
    return None


def _cross_int(coords, a: int, b: int, c: int, d: int) -> bool:
    """Proper-crossing test on an integer coordinate list (indices distinct)."""
    ax, ay = coords[a]
    bx, by = coords[b]
    cx, cy = coords[c]
    dx, dy = coords[d]
    o1 = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)
    o2 = (bx - ax) * (dy - ay) - (by - ay) * (dx - ax)
    if o1 == 0 or o2 == 0 or (o1 > 0) == (o2 > 0):
        return False
    o3 = (dx - cx) * (ay - cy) - (dy - cy) * (ax - cx)
    o4 = (dx - cx) * (by - cy) - (dy - cy) * (bx - cx)
    if o3 == 0 or o4 == 0:
        return False
    return (o3 > 0) != (o4 > 0)


def has_distinct_coordinates(S: PointSet) -> bool:
    """True iff all x-coordinates are pairwise distinct and likewise all y."""
    n = len(S)
    return len({p.x for p in S}) == n and len({p.y for p in S}) == n


def integer_coordinates(S: PointSet) -> list[tuple[int, int]]:
    """Integer coordinates with the same order type as ``S``.

    Each axis is scaled by the least common denominator of that axis, a
    positive diagonal map, so every triple orientation and every crossing
    is preserved exactly. Heavy predicate loops run on the result.
    """
    lx = lcm(*(p.x.denominator for p in S)) if len(S) else 1
    ly = lcm(*(p.y.denominator for p in S)) if len(S) else 1
    out = []
    for p in S:
        x = p.x * lx
        y = p.y * ly
        out.append((int(x), int(y)))
    return out


def to_integer_coordinates(S: PointSet) -> PointSet:
    """Order-type-preserving copy of ``S`` with plain integer coordinates."""
    return PointSet.from_coords(integer_coordinates(S))


def normalize_coordinates(S: PointSet) -> PointSet:
    """Make all x- and all y-coordinates pairwise distinct, preserving the order type.

    Applies the shear (x, y) -> (x + t*y, y + t*x) with rational t found by
    halving from 1. Each coordinate collision between a pair of points rules
    out at most one value of t, so a valid t exists and the loop terminates;
    t < 1 keeps the determinant 1 - t^2 positive, hence every triple
    orientation is unchanged. Returns ``S`` itself when already distinct.
    """
    if len({(p.x, p.y) for p in S}) != len(S):
        raise NotGeneralPositionError("duplicate points cannot be sheared apart")
    if has_distinct_coordinates(S):
        return S
    t = Fraction(1)
    n = len(S)
    for _ in range(2 * n * n + 8):
        t = t / 2
        mapped = PointSet(tuple(Point(p.x + t * p.y, p.y + t * p.x) for p in S))
        if has_distinct_coordinates(mapped):
            return mapped
    raise NotGeneralPositionError("no shear parameter found; input is degenerate")


def convex_position_points(n: int) -> PointSet:
    """n integer points in convex position, labeled left to right.

    Points sit on the parabola (i, i^2), so no three are collinear and the
    hull order coincides with the index order.
    """
    if n < 0:
        raise ValueError("point count must be non-negative")
    return PointSet.from_coords((i, i * i) for i in range(n))


def all_segments(n: int) -> tuple[Segment, ...]:
    """All C(n, 2) segments over point labels 0..n-1, in lexicographic order."""
    return tuple(Segment(a, b) for a, b in combinations(range(n), 2))
