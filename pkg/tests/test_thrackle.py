import random

import pytest

from crossfam.geometry import PointSet, Segment, convex_position_points, segments_cross
from crossfam.thrackle import (
    GeometricGraph,
    has_even_cycle,
    is_forest,
    is_geometric_thrackle,
    star_polygon,
)
from conftest import random_pointset


def cycle_graph(S, order):
    edges = {Segment(order[i], order[(i + 1) % len(order)]) for i in range(len(order))}
    return GeometricGraph(S, frozenset(edges))


class TestIsGeometricThrackle:
    def test_pentagram(self):
        assert is_geometric_thrackle(star_polygon(5))

    def test_convex_quad_boundary_is_not(self):
        S = convex_position_points(4)
        assert not is_geometric_thrackle(cycle_graph(S, [0, 1, 3, 2]))

    def test_single_edge_vacuous(self):
        S = convex_position_points(2)
        assert is_geometric_thrackle(GeometricGraph(S, frozenset({Segment(0, 1)})))

    @pytest.mark.parametrize("c", [3, 5, 7, 9])
    def test_odd_star_polygons_are_thrackles(self, c):
        assert is_geometric_thrackle(star_polygon(c))

    def test_skip2_hexagon_drawing_is_not(self):
        # two nested triangles on a convex hexagon: {0,2} and {3,5} are disjoint
        S = convex_position_points(6)
        edges = {Segment(i, (i + 2) % 6) for i in range(6)}
        assert not is_geometric_thrackle(GeometricGraph(S, frozenset(edges)))


class TestHasEvenCycle:
    def test_c4(self):
        S = convex_position_points(4)
        assert has_even_cycle(cycle_graph(S, [0, 1, 2, 3]))

    def test_c5(self):
        S = convex_position_points(5)
        assert not has_even_cycle(cycle_graph(S, [0, 1, 2, 3, 4]))

    def test_tree(self):
        S = convex_position_points(5)
        star = GeometricGraph(S, frozenset({Segment(0, i) for i in range(1, 5)}))
        assert not has_even_cycle(star)

    def test_two_triangles_sharing_a_vertex(self):
        S = convex_position_points(5)
        edges = {Segment(0, 1), Segment(1, 2), Segment(0, 2),
                 Segment(2, 3), Segment(3, 4), Segment(2, 4)}
        assert not has_even_cycle(GeometricGraph(S, frozenset(edges)))

    def test_theta_graph(self):
        # triangle plus a chord path: two cycles of lengths 3 and 4 share edges
        S = convex_position_points(4)
        edges = {Segment(0, 1), Segment(1, 2), Segment(0, 2),
                 Segment(1, 3), Segment(3, 2)}
        assert has_even_cycle(GeometricGraph(S, frozenset(edges)))

    def test_matches_brute_force_on_random_graphs(self, rng):
        from itertools import combinations

        for _ in range(60):
            n = rng.randint(3, 7)
            S = convex_position_points(n)
            all_edges = [Segment(a, b) for a, b in combinations(range(n), 2)]
            edges = frozenset(e for e in all_edges if rng.random() < 0.4)
            G = GeometricGraph(S, edges)
            assert has_even_cycle(G) == _even_cycle_brute(n, edges)


def _even_cycle_brute(n, edges):
    """Check all simple cycles by brute-force path enumeration."""
    adjacency = {v: set() for v in range(n)}
    for e in edges:
        adjacency[e.a].add(e.b)
        adjacency[e.b].add(e.a)

    def walk(start, current, visited):
        for nxt in adjacency[current]:
            if nxt == start and len(visited) >= 3:
                if len(visited) % 2 == 0:
                    return True
            elif nxt not in visited and nxt > start:
                if walk(start, nxt, visited | {nxt}):
                    return True
        return False

    return any(walk(v, v, {v}) for v in range(n))


class TestIsForest:
    def test_star(self):
        S = convex_position_points(5)
        star = GeometricGraph(S, frozenset({Segment(0, i) for i in range(1, 5)}))
        assert is_forest(star)

    def test_triangle(self):
        S = convex_position_points(3)
        assert not is_forest(cycle_graph(S, [0, 1, 2]))

    def test_empty_edges(self):
        assert is_forest(GeometricGraph(convex_position_points(4), frozenset()))

    def test_empty_pointset(self):
        assert is_forest(GeometricGraph(PointSet.from_coords([]), frozenset()))


def grow_random_thrackle(S, rng):
    """Add segments in random order while the thrackle property survives."""
    from itertools import combinations

    n = len(S)
    candidates = [Segment(a, b) for a, b in combinations(range(n), 2)]
    rng.shuffle(candidates)
    edges = []
    for cand in candidates:
        if all(cand.shares_endpoint(e) or segments_cross(S, cand, e) for e in edges):
            edges.append(cand)
    return GeometricGraph(S, frozenset(edges))


class TestThrackleCycleLaw:
    def test_sampled_thrackles_have_no_even_cycle(self, rng):
        for _ in range(120):
            S = random_pointset(rng, rng.randint(4, 7))
            G = grow_random_thrackle(S, rng)
            assert is_geometric_thrackle(G)
            assert not has_even_cycle(G)

    def test_bipartite_thrackles_are_forests(self, rng):
        import networkx as nx

        for _ in range(80):
            S = random_pointset(rng, rng.randint(4, 7))
            G = grow_random_thrackle(S, rng)
            H = nx.Graph()
            H.add_nodes_from(range(len(S)))
            H.add_edges_from((e.a, e.b) for e in G.edges)
            if nx.is_bipartite(H):
                assert is_forest(G)
