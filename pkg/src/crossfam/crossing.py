"""Crossing graphs and exact maximum-crossing-family computation.

The crossing graph has one vertex per spanned segment and an edge between
two segments iff they cross properly; crossing families are exactly its
cliques. The optimizer is a branch-and-bound maximum-clique search with a
greedy-coloring upper bound over bitset adjacency rows, processing vertices
in degeneracy order. ``brute_force_cf`` is a deliberately separate
exhaustive clique enumeration used as an oracle in tests.
"""

from __future__ import annotations

from itertools import combinations
from typing import Optional, Sequence

from .errors import NotGeneralPositionError, SizeLimitError
from .geometry import (
    PointSet,
    Segment,
    all_segments,
    integer_coordinates,
    segments_cross,
    _collinear_triple,
)

CrossingFamily = tuple[Segment, ...]


class CrossingGraph:
    """Immutable crossing graph over the segments of a point set.

    ``segments`` lists all C(n, 2) segments in lexicographic order and
    ``adjacency`` holds one bitset per segment index. Construct via
    :func:`build_crossing_graph`.
    """

    __slots__ = ("pointset", "segments", "adjacency", "_index")

    def __init__(self, pointset: PointSet, segments: tuple[Segment, ...], adjacency: tuple[int, ...]):
        self.pointset = pointset
        self.segments = segments
        self.adjacency = adjacency
        self._index = {s: i for i, s in enumerate(segments)}

    def index_of(self, segment: Segment) -> int:
        return self._index[segment]

    def crosses(self, i: int, j: int) -> bool:
        return bool(self.adjacency[i] >> j & 1)

    def degree(self, i: int) -> int:
        return self.adjacency[i].bit_count()

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adjacency) // 2

    def __len__(self) -> int:
        return len(self.segments)


def _triple_signs(coords: list[tuple[int, int]]) -> dict[tuple[int, int, int], int]:
    """Orientation sign (+1 ccw / -1 cw) for every sorted index triple."""
    n = len(coords)
    signs: dict[tuple[int, int, int], int] = {}
    for a in range(n - 2):
        ax, ay = coords[a]
        for b in range(a + 1, n - 1):
            ux = coords[b][0] - ax
            uy = coords[b][1] - ay
            for c in range(b + 1, n):
                d = ux * (coords[c][1] - ay) - uy * (coords[c][0] - ax)
                signs[(a, b, c)] = 1 if d > 0 else -1 if d < 0 else 0
    return signs


def _orient3(signs, a: int, b: int, c: int) -> int:
    # a < b; c distinct from both
    if c > b:
        return signs[(a, b, c)]
    if c < a:
        return signs[(c, a, b)]
    return -signs[(a, c, b)]


def _adjacency_bitsets(coords: list[tuple[int, int]]) -> tuple[tuple[tuple[int, int], ...], list[int]]:
    """Segment list (index pairs) and adjacency bitsets for integer coordinates.

    Assumes general position: every orientation sign is +-1.
    """
    n = len(coords)
    segs = tuple(combinations(range(n), 2))
    signs = _triple_signs(coords)
    m = len(segs)
    adj = [0] * m
    for i in range(m - 1):
        a, b = segs[i]
        for j in range(i + 1, m):
            c, d = segs[j]
            if c == a or c == b or d == a or d == b:
                continue
            if _orient3(signs, a, b, c) == _orient3(signs, a, b, d):
                continue
            if _orient3(signs, c, d, a) == _orient3(signs, c, d, b):
                continue
            adj[i] |= 1 << j
            adj[j] |= 1 << i
    return segs, adj


def build_crossing_graph(S: PointSet) -> CrossingGraph:
    """Crossing graph over all segments of ``S`` (requires general position, n >= 2)."""
    if len(S) < 2:
        raise ValueError("need at least two points to span a segment")
    coords = integer_coordinates(S)
    bad = _collinear_triple(coords)
    if bad is not None:
        raise NotGeneralPositionError(f"points {bad} are collinear")
    segs, adj = _adjacency_bitsets(coords)
    return CrossingGraph(S, all_segments(len(S)), tuple(adj))


def _degeneracy_order(adj: Sequence[int]) -> list[int]:
    """Removal order: repeatedly delete a minimum-degree vertex (ties: smallest index)."""
    n = len(adj)
    alive = (1 << n) - 1
    degs = [adj[v].bit_count() for v in range(n)]
    order = []
    for _ in range(n):
        best = -1
        best_deg = n + 1
        rest = alive
        while rest:
            bit = rest & -rest
            v = bit.bit_length() - 1
            rest ^= bit
            if degs[v] < best_deg:
                best_deg = degs[v]
                best = v
        order.append(best)
        alive ^= 1 << best
        neigh = adj[best] & alive
        while neigh:
            bit = neigh & -neigh
            degs[bit.bit_length() - 1] -= 1
            neigh ^= bit
    return order


class _TargetReached(Exception):
    pass


class CliqueSearch:
    """Deterministic branch-and-bound maximum-clique search on bitset adjacency.

    Vertices are relabeled so that the densest core (the tail of the
    degeneracy order) is explored first; candidate sets are partitioned into
    greedy color classes and a branch is cut when the current clique plus
    its color bound cannot beat the incumbent. ``best_size``/``best`` are
    readable mid-run, so callers may inspect progress after an interrupt.
    """

    def __init__(self, adjacency: Sequence[int]):
        n = len(adjacency)
        order = _degeneracy_order(adjacency)
        # internal label 0 = last vertex removed (highest core number)
        self._to_original = list(reversed(order))
        rank = [0] * n
        for new, old in enumerate(self._to_original):
            rank[old] = new
        self._adj = [0] * n
        for old in range(n):
            row = adjacency[old]
            packed = 0
            while row:
                bit = row & -row
                packed |= 1 << rank[bit.bit_length() - 1]
                row ^= bit
            self._adj[rank[old]] = packed
        self._n = n
        self.best_size = 0
        self.best: tuple[int, ...] = ()
        self._target: Optional[int] = None

    def run(self, target: Optional[int] = None, floor: int = 0) -> tuple[int, tuple[int, ...]]:
        """Search for a maximum clique, or stop at the first clique of size ``target``.

        ``floor`` sets the initial incumbent size; only strictly larger
        cliques are recorded. Returns (best size, vertex tuple in original
        labels, sorted ascending).
        """
        self.best_size = floor
        self.best = ()
        self._target = target
        if self._n == 0:
            return 0, ()
        try:
            self._expand([], (1 << self._n) - 1)
        except _TargetReached:
            pass
        return self.best_size, self.best

    def _record(self, clique: list[int]) -> None:
        self.best_size = len(clique)
        self.best = tuple(sorted(self._to_original[v] for v in clique))
        if self._target is not None and self.best_size >= self._target:
            raise _TargetReached

    def _expand(self, clique: list[int], cand: int) -> None:
        order: list[int] = []
        bounds: list[int] = []
        color = 0
        rest = cand
        while rest:
            color += 1
            avail = rest
            while avail:
                bit = avail & -avail
                v = bit.bit_length() - 1
                avail ^= bit
                avail &= ~self._adj[v]
                rest ^= bit
                order.append(v)
                bounds.append(color)
        adj = self._adj
        depth = len(clique)
        for i in range(len(order) - 1, -1, -1):
            if depth + bounds[i] <= self.best_size:
                return
            v = order[i]
            clique.append(v)
            if len(clique) > self.best_size:
                self._record(clique)
            nxt = cand & adj[v]
            if nxt:
                self._expand(clique, nxt)
            clique.pop()
            cand ^= 1 << v


def max_crossing_family(S: PointSet) -> tuple[int, CrossingFamily]:
    """Exact maximum crossing-family size of ``S`` with a witness family."""
    graph = build_crossing_graph(S)
    size, vertices = CliqueSearch(graph.adjacency).run()
    return size, tuple(graph.segments[v] for v in vertices)


def has_k_family(S: PointSet, k: int) -> Optional[CrossingFamily]:
    """A crossing family of size exactly ``k`` if one exists, else ``None``.

    Decision variant: the search is pruned with bound ``k`` and stops at the
    first witness found under the deterministic vertex order.
    """
    if k < 1:
        raise ValueError("family size must be at least 1")
    graph = build_crossing_graph(S)
    size, vertices = CliqueSearch(graph.adjacency).run(target=k, floor=k - 1)
    if size < k:
        return None
    return tuple(graph.segments[v] for v in vertices)


def _count_cliques(adj: Sequence[int], k: int) -> int:
    """Number of k-cliques in a bitset-adjacency graph."""
    n = len(adj)
    if k == 0:
        return 1
    if k == 1:
        return n
    total = 0

    def rec(cand: int, remaining: int) -> None:
        nonlocal total
        if remaining == 1:
            total += cand.bit_count()
            return
        while cand:
            if cand.bit_count() < remaining:
                return
            bit = cand & -cand
            cand ^= bit
            nxt = adj[bit.bit_length() - 1] & cand
            if nxt:
                rec(nxt, remaining - 1)

    rec((1 << n) - 1, k)
    return total


def count_k_families(S: PointSet, k: int) -> int:
    """Exact number of k-crossing families in ``S``."""
    if k < 0:
        raise ValueError("family size must be non-negative")
    graph = build_crossing_graph(S)
    return _count_cliques(graph.adjacency, k)


def brute_force_cf(S: PointSet) -> int:
    """Maximum crossing-family size by exhaustive clique enumeration.

    Independent oracle for the branch-and-bound solver: builds its own
    adjacency straight from :func:`segments_cross` and enumerates every
    clique without bounding or ordering heuristics. Capped at n <= 10.
    """
    n = len(S)
    if n > 10:
        raise SizeLimitError(f"brute-force oracle capped at 10 points, got {n}")
    segs = all_segments(n)
    neighbors = [set() for _ in segs]
    for i, j in combinations(range(len(segs)), 2):
        if segments_cross(S, segs[i], segs[j]):
            neighbors[i].add(j)
            neighbors[j].add(i)
    best = 1 if segs else 0

    def extend(candidates: list[int], size: int) -> None:
        nonlocal best
        if size > best:
            best = size
        for pos, v in enumerate(candidates):
            extend([u for u in candidates[pos + 1:] if u in neighbors[v]], size + 1)

    extend(list(range(len(segs))), 0)
    return best


def is_crossing_family(S: PointSet, family: Sequence[Segment]) -> bool:
    """True iff the segments pairwise cross in their interiors."""
    members = list(family)
    if len(set(members)) != len(members):
        return False
    return all(segments_cross(S, s, t) for s, t in combinations(members, 2))
