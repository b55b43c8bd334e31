import numpy as np
import pytest

from semitsp import (
    SpanningTree,
    Walk,
    exact_tsp_held_karp,
    gen_random,
    gen_star_family,
    minimum_spanning_tree,
    shortcut,
    solve_mst2,
    tour_weight,
    tree_traversal,
)
from semitsp.errors import NotATraversal, RootNotInTree, TooFewVertices

from conftest import (
    brute_min_spanning_weight,
    kruskal_mst,
    uniform_complete,
)


class TestMinimumSpanningTree:
    def test_star_family_unique_mst(self):
        g = gen_star_family(7, 2.0)
        tree = minimum_spanning_tree(g)
        assert tree.weight == 6.0
        assert {(u, v) for u, v, _ in tree.edges} == {(0, k) for k in range(1, 7)}

    def test_uniform_k4_tie_break(self):
        tree = minimum_spanning_tree(uniform_complete(4))
        assert [(u, v) for u, v, _ in tree.edges] == [(0, 1), (0, 2), (0, 3)]

    @pytest.mark.parametrize("seed", range(6))
    def test_against_kruskal(self, seed):
        g = gen_random(8, seed=seed, low_weight=1, high_weight=10)
        tree = minimum_spanning_tree(g)
        edges, weight = kruskal_mst(g)
        assert {(u, v) for u, v, _ in tree.edges} == edges
        assert tree.weight == pytest.approx(weight, rel=1e-12)

    @pytest.mark.parametrize("seed", range(4))
    def test_against_prufer_enumeration(self, seed):
        g = gen_random(6, seed=40 + seed, low_weight=1, high_weight=10)
        tree = minimum_spanning_tree(g)
        assert tree.weight == pytest.approx(brute_min_spanning_weight(g), rel=1e-12)

    def test_single_vertex(self):
        from semitsp import CompleteWeightedGraph

        tree = minimum_spanning_tree(CompleteWeightedGraph([[0.0]]))
        assert tree.edges == () and tree.weight == 0.0

    def test_edge_count_and_connectivity(self):
        g = gen_random(9, seed=2, low_weight=1, high_weight=5)
        tree = minimum_spanning_tree(g)
        assert len(tree.edges) == 8
        # SpanningTree.from_edges re-validates connectivity
        rebuilt = SpanningTree.from_edges(9, tree.edges)
        assert rebuilt.weight == pytest.approx(tree.weight)


class TestTreeTraversal:
    def test_descending_reproduces_branch_first_walk(self, example2_tree):
        walk = tree_traversal(example2_tree, root=0, neighbor_order="descending")
        assert walk.vertices == (0, 1, 2, 4, 5, 4, 2, 3, 2, 1, 0)

    def test_ascending_reproduces_default_walk(self, example2_tree):
        walk = tree_traversal(example2_tree, root=0, neighbor_order="ascending")
        assert walk.vertices == (0, 1, 2, 3, 2, 4, 5, 4, 2, 1, 0)

    def test_callable_policy(self, example2_tree):
        walk = tree_traversal(
            example2_tree, root=0, neighbor_order=lambda v, nbrs: sorted(nbrs)
        )
        assert walk.vertices == (0, 1, 2, 3, 2, 4, 5, 4, 2, 1, 0)

    def test_single_vertex_tree(self):
        tree = SpanningTree(n=1, root=0, parent=(-1,), edges=(), weight=0.0)
        walk = tree_traversal(tree, root=0)
        assert walk.vertices == (0,)

    def test_walk_shape(self, example2_tree):
        for root in range(6):
            walk = tree_traversal(example2_tree, root=root)
            assert len(walk.vertices) == 11
            assert walk.vertices[0] == walk.vertices[-1] == root

    def test_root_not_in_tree(self, example2_tree):
        with pytest.raises(RootNotInTree):
            tree_traversal(example2_tree, root=6)


class TestShortcut:
    def test_branch_first_walk(self, example2_tree):
        g = uniform_complete(6)
        walk = Walk(vertices=(0, 1, 2, 4, 5, 4, 2, 3, 2, 1, 0), closed=True)
        assert shortcut(walk, g).order == (0, 1, 2, 4, 5, 3)

    def test_default_walk(self):
        g = uniform_complete(6)
        walk = Walk(vertices=(0, 1, 2, 3, 2, 4, 5, 4, 2, 1, 0), closed=True)
        assert shortcut(walk, g).order == (0, 1, 2, 3, 4, 5)

    def test_three_vertex_walk(self):
        g = uniform_complete(3)
        walk = Walk(vertices=(0, 1, 2, 1, 0), closed=True)
        assert shortcut(walk, g).order == (0, 1, 2)

    @pytest.mark.parametrize(
        "vertices",
        [
            (0, 1, 2, 1),  # open
            (0, 1, 0, 1, 0),  # edge traversed four times
            (0, 1, 2, 0),  # a cycle, not a doubled tree
        ],
    )
    def test_not_a_traversal(self, vertices):
        g = uniform_complete(3)
        with pytest.raises(NotATraversal):
            shortcut(Walk(vertices=vertices, closed=vertices[0] == vertices[-1]), g)


class TestSolveMst2:
    @pytest.mark.parametrize("gamma,n", [(1.0, 5), (2.0, 6), (3.0, 10)])
    def test_star_family_formula(self, gamma, n):
        g = gen_star_family(n, gamma)
        report = solve_mst2(g)
        assert report.lower_bound == float(n - 1)
        assert report.tour.weight == 2.0 * (1.0 + gamma * (n - 2))

    def test_uniform_k5_is_optimal(self):
        report = solve_mst2(uniform_complete(5))
        assert report.tour.weight == 5.0

    @pytest.mark.parametrize("seed", range(5))
    def test_guarantee_against_oracle(self, seed):
        g = gen_random(10, seed=seed, low_weight=1, high_weight=10)
        report = solve_mst2(g)
        optimum = exact_tsp_held_karp(g).weight
        assert report.lower_bound <= optimum * (1 + 1e-9)
        assert report.tour.weight <= 2 * report.gamma * optimum * (1 + 1e-9)
        assert report.guarantee_factor == 2 * report.gamma

    @pytest.mark.parametrize("root", range(6))
    def test_every_root_yields_valid_tour(self, root):
        g = gen_random(6, seed=77, low_weight=1, high_weight=9)
        report = solve_mst2(g, root=root)
        assert sorted(report.tour.order) == list(range(6))
        assert report.tour.order[0] == root
        assert report.tour.weight == pytest.approx(
            tour_weight(g, report.tour.order), rel=1e-12
        )

    def test_too_few_vertices(self):
        with pytest.raises(TooFewVertices):
            solve_mst2(uniform_complete(2))

    def test_bad_root(self):
        with pytest.raises(RootNotInTree):
            solve_mst2(uniform_complete(4), root=9)
