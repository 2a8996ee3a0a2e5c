"""Point replication along parabolic arcs and the piecewise upper-bound calculator.

Replacing every point (x, y) of a set S by m copies (x + i*eps, y + (i*eps)^2)
for i = 0..m-1 multiplies the point count by m while, for sufficiently small
eps, multiplying the maximum crossing-family size by at most m. Two exact,
exhaustive checks certify a spacing:

* cluster isolation -- a segment between two copies of the same source point
  is crossed only by segments that touch a copy of that same source point;
* copy order -- if source p lies above source q, every line through two
  copies of p passes strictly above every copy of q (and symmetrically below).

``choose_epsilon`` halves a spacing until both checks pass, so emitted sets
carry a machine-verified certificate rather than an asymptotic argument.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional, Sequence

from .errors import (
    DegenerateEpsilonError,
    EpsilonSearchError,
    NotGeneralPositionError,
    SameSourceSegmentError,
)
from .geometry import (
    Coord,
    Point,
    PointSet,
    Segment,
    _collinear_triple,
    _cross_int,
    has_distinct_coordinates,
    integer_coordinates,
    is_general_position,
)


@dataclass(frozen=True)
class CopyMap:
    """Maps each replicated index to (source index, copy number)."""

    entries: tuple[tuple[int, int], ...]
    source_n: int

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))

    def __len__(self) -> int:
        return len(self.entries)

    def source_of(self, index: int) -> int:
        return self.entries[index][0]

    def copy_number_of(self, index: int) -> int:
        return self.entries[index][1]

    def copies_of(self, source: int) -> tuple[int, ...]:
        return tuple(i for i, (src, _) in enumerate(self.entries) if src == source)


@dataclass(frozen=True)
class ReplicationCertificate:
    """Record of a replication run: spacing, copy count, and verifier outcomes."""

    epsilon: Coord
    m: int
    source_n: int
    cluster_isolation_ok: bool
    copy_order_ok: bool

    @property
    def certified(self) -> bool:
        return self.cluster_isolation_ok and self.copy_order_ok


def _check_replication_input(S: PointSet) -> None:
    if not is_general_position(S):
        raise NotGeneralPositionError("source set must be in general position")
    if not has_distinct_coordinates(S):
        raise ValueError(
            "source coordinates must be pairwise distinct; apply normalize_coordinates first"
        )


def _copy_counts(n: int, m: int, total: Optional[int]) -> list[int]:
    """Copies kept per source point when only ``total`` points are wanted.

    The excess is removed by repeatedly dropping the highest remaining copy
    number from the highest-index source point among those with the most
    copies left, which keeps the counts balanced and deterministic.
    """
    counts = [m] * n
    if total is None:
        return counts
    if not n <= total <= m * n:
        raise ValueError(f"total must lie in [{n}, {m * n}], got {total}")
    excess = m * n - total
    while excess:
        top = max(counts)
        for src in range(n - 1, -1, -1):
            if counts[src] == top:
                counts[src] -= 1
                excess -= 1
                break
    return counts


def replicate(
    S: PointSet, m: int, epsilon: Coord, total: Optional[int] = None
) -> tuple[PointSet, CopyMap]:
    """Replace each point by ``m`` copies spaced ``epsilon`` apart on a parabolic arc.

    The result must again be in general position with pairwise-distinct
    coordinates; otherwise the spacing is rejected with
    :class:`DegenerateEpsilonError`. The spacing is *not* required to pass
    the two certification checks -- run the verifiers or use
    :func:`replicate_certified` for that.

    ``total`` optionally trims the output to exactly that many points by
    dropping the highest copy numbers of the last source points.
    """
    if m < 1:
        raise ValueError("copy count must be at least 1")
    eps = Fraction(epsilon)
    if eps <= 0:
        raise ValueError("epsilon must be positive")
    _check_replication_input(S)
    counts = _copy_counts(len(S), m, total)
    points: list[Point] = []
    entries: list[tuple[int, int]] = []
    for src, p in enumerate(S):
        for i in range(counts[src]):
            step = i * eps
            points.append(Point(p.x + step, p.y + step * step))
            entries.append((src, i))
    out = PointSet(tuple(points))
    if not has_distinct_coordinates(out):
        raise DegenerateEpsilonError(f"epsilon {eps} collides replica coordinates")
    bad = _collinear_triple(integer_coordinates(out))
    if bad is not None:
        raise DegenerateEpsilonError(f"epsilon {eps} makes points {bad} collinear")
    return out, CopyMap(tuple(entries), len(S))


def verify_cluster_isolation(S2: PointSet, cmap: CopyMap) -> bool:
    """Exhaustive check that intra-cluster segments are isolated.

    Every segment joining two copies of one source point may be crossed only
    by segments with at least one endpoint at a copy of that same source.
    """
    coords = integer_coordinates(S2)
    n2 = len(coords)
    source = [cmap.source_of(i) for i in range(n2)]
    clusters: dict[int, list[int]] = {}
    for i, src in enumerate(source):
        clusters.setdefault(src, []).append(i)
    for src, members in sorted(clusters.items()):
        for a, b in combinations(members, 2):
            for c in range(n2 - 1):
                if c == a or c == b:
                    continue
                for d in range(c + 1, n2):
                    if d == a or d == b:
                        continue
                    if source[c] == src or source[d] == src:
                        continue
                    if _cross_int(coords, a, b, c, d):
                        return False
    return True


def verify_copy_order(S: PointSet, S2: PointSet, cmap: CopyMap) -> bool:
    """Exhaustive check that copy clusters respect the vertical order of their sources.

    For sources p above q, every line through two distinct copies of p must
    pass strictly above every copy of q; symmetrically when p is below q.
    """
    coords = integer_coordinates(S2)
    clusters: dict[int, list[int]] = {}
    for i in range(len(S2)):
        clusters.setdefault(cmap.source_of(i), []).append(i)
    for p_src, q_src in combinations(sorted(clusters), 2):
        for above, below in ((p_src, q_src), (q_src, p_src)):
            if not S[above].y > S[below].y:
                continue
            for u, v in combinations(clusters[above], 2):
                ux, uy = coords[u]
                vx, vy = coords[v]
                if ux > vx:
                    ux, uy, vx, vy = vx, vy, ux, uy
                for w in clusters[below]:
                    wx, wy = coords[w]
                    # w strictly below the line u->v means a clockwise turn
                    if (vx - ux) * (wy - uy) - (vy - uy) * (wx - ux) >= 0:
                        return False
    return True


def choose_epsilon(S: PointSet, m: int) -> Coord:
    """Smallest-effort certified spacing for replicating ``S`` with ``m`` copies.

    Starts at (minimum pairwise coordinate gap) / (4m) and halves until the
    replica passes general position, coordinate distinctness, and both
    certification checks; capped at 64 halvings. Deterministic by
    construction, and guaranteed to terminate because all sufficiently small
    spacings work.
    """
    if m < 1:
        raise ValueError("copy count must be at least 1")
    _check_replication_input(S)
    gaps = [abs(p.x - q.x) for p, q in combinations(S, 2)]
    gaps += [abs(p.y - q.y) for p, q in combinations(S, 2)]
    eps = Fraction(min(gaps)) / (4 * m) if gaps else Fraction(1, 4 * m)
    for _ in range(65):
        try:
            S2, cmap = replicate(S, m, eps)
        except DegenerateEpsilonError:
            eps /= 2
            continue
        if verify_cluster_isolation(S2, cmap) and verify_copy_order(S, S2, cmap):
            return eps
        eps /= 2
    raise EpsilonSearchError(f"no certified spacing found for n={len(S)}, m={m}")


def replicate_certified(
    S: PointSet, m: int, epsilon: Optional[Coord] = None, total: Optional[int] = None
) -> tuple[PointSet, CopyMap, ReplicationCertificate]:
    """Replicate with a certificate; ``epsilon`` defaults to a certified spacing.

    With an explicit ``epsilon`` the replica is still emitted when the
    certification checks fail -- the certificate records the outcomes.
    """
    if epsilon is None:
        epsilon = choose_epsilon(S, m)
    S2, cmap = replicate(S, m, epsilon, total=total)
    cert = ReplicationCertificate(
        epsilon=epsilon,
        m=m,
        source_n=len(S),
        cluster_isolation_ok=verify_cluster_isolation(S2, cmap),
        copy_order_ok=verify_copy_order(S, S2, cmap),
    )
    return S2, cmap, cert


def contract_family(
    S2: PointSet, cmap: CopyMap, family: Sequence[Segment]
) -> tuple[Segment, ...]:
    """Contract every copy back to its source point and deduplicate.

    Fails with :class:`SameSourceSegmentError` if some segment joins two
    copies of one source point, since such a segment has no source image.
    """
    n2 = len(S2)
    out = set()
    for seg in family:
        if not (0 <= seg.a < n2 and 0 <= seg.b < n2):
            raise ValueError(f"segment {seg.a} {seg.b} out of range for {n2} points")
        sa = cmap.source_of(seg.a)
        sb = cmap.source_of(seg.b)
        if sa == sb:
            raise SameSourceSegmentError(
                f"segment {seg.a} {seg.b} joins two copies of source {sa}"
            )
        out.add(Segment(sa, sb))
    return tuple(sorted(out))


#: Sizes of the largest known point sets whose maximum crossing family has
#: size k, as (k, point count) pairs. Entries for k <= 3 are optimal.
DEFAULT_EXTREMAL_LIBRARY: tuple[tuple[int, int], ...] = (
    (1, 4),
    (2, 9),
    (3, 14),
    (4, 20),
    (5, 25),
    (6, 29),
    (7, 34),
    (8, 41),
    (9, 45),
    (10, 50),
)


def bound_details(
    n: int, library: Sequence[tuple[int, int]] = DEFAULT_EXTREMAL_LIBRARY
) -> tuple[int, Optional[tuple[int, int]]]:
    """Best replication upper bound and the library entry achieving it.

    Each entry (k, s) certifies that every set of n points has a subset or
    replication witness forcing cf(n) <= k * ceil(n / s) (subsets of the
    witness set cover n <= s). The trivial cap floor(n/2) from endpoint
    disjointness also competes; when it alone wins the entry is ``None``.
    """
    if not library:
        raise ValueError("empty bound library")
    if n < 1:
        raise ValueError("point count must be positive")
    for k, size in library:
        if k < 1 or size < 1:
            raise ValueError(f"bad library entry ({k}, {size})")
    best = n // 2
    winner: Optional[tuple[int, int]] = None
    for k, size in library:
        value = k if n <= size else k * ((n + size - 1) // size)
        if value < best or (value == best and winner is None):
            best = value
            winner = (k, size)
    return best, winner


def best_known_upper_bound(
    n: int, library: Sequence[tuple[int, int]] = DEFAULT_EXTREMAL_LIBRARY
) -> int:
    """min over the library of k * ceil(n / s), capped by floor(n / 2)."""
    return bound_details(n, library)[0]
