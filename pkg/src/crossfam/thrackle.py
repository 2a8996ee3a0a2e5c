"""Geometric thrackles and cycle-structure checks on geometric graphs.

A geometric thrackle is a straight-line drawing in which every two edges
either share an endpoint or cross properly. Cycle detection here is purely
combinatorial: a graph contains an even cycle iff some biconnected block
either is a single even cycle or has more edges than vertices (any such
block holds two vertices joined by three disjoint paths, two of which have
lengths of equal parity and so close an even cycle).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

import networkx as nx

from .geometry import PointSet, Segment, convex_position_points, segments_cross


@dataclass(frozen=True)
class GeometricGraph:
    """A point set plus a set of straight-line edges between its points."""

    pointset: PointSet
    edges: frozenset[Segment]

    def __post_init__(self):
        object.__setattr__(self, "edges", frozenset(self.edges))
        n = len(self.pointset)
        for e in self.edges:
            if not (0 <= e.a < n and 0 <= e.b < n):
                raise ValueError(f"edge {e.a} {e.b} out of range for {n} points")

    @classmethod
    def from_pairs(cls, S: PointSet, pairs: Iterable[tuple[int, int]]) -> "GeometricGraph":
        return cls(S, frozenset(Segment(a, b) for a, b in pairs))

    def sorted_edges(self) -> tuple[Segment, ...]:
        return tuple(sorted(self.edges))


def is_geometric_thrackle(G: GeometricGraph) -> bool:
    """True iff every pair of distinct edges shares an endpoint or crosses properly."""
    edges = G.sorted_edges()
    for e, f in combinations(edges, 2):
        if e.shares_endpoint(f):
            continue
        if not segments_cross(G.pointset, e, f):
            return False
    return True


def _as_nx(G: GeometricGraph) -> nx.Graph:
    H = nx.Graph()
    H.add_nodes_from(range(len(G.pointset)))
    H.add_edges_from((e.a, e.b) for e in G.edges)
    return H


def has_even_cycle(G: GeometricGraph) -> bool:
    """True iff the abstract graph contains a simple cycle of even length."""
    H = _as_nx(G)
    for block in nx.biconnected_component_edges(H):
        edges = list(block)
        if len(edges) < 2:
            continue  # bridge
        vertices = {v for e in edges for v in e}
        if len(edges) > len(vertices):
            return True  # theta subgraph forces an even cycle
        if len(edges) % 2 == 0:
            return True  # the block is a single even cycle
    return False


def is_forest(G: GeometricGraph) -> bool:
    """True iff the abstract graph is acyclic."""
    if len(G.pointset) == 0:
        return True
    return nx.is_forest(_as_nx(G))


def star_polygon(c: int) -> GeometricGraph:
    """The cycle on a convex c-gon drawn with skip floor(c/2).

    For odd c this is a single c-cycle in which every two edges share an
    endpoint or cross, i.e. a geometric thrackle.
    """
    if c < 3:
        raise ValueError("need at least 3 vertices for a cycle")
    S = convex_position_points(c)
    skip = c // 2
    edges = frozenset(Segment(i, (i + skip) % c) for i in range(c))
    return GeometricGraph(S, edges)
