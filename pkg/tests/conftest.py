"""Shared fixtures and independent brute-force oracles.

The oracles here deliberately re-derive results from definitions (triple
loops, Pruefer enumeration, recursive pairings) so they share no code path
with the implementations they check.
"""

from __future__ import annotations

from itertools import permutations

import numpy as np
import pytest

from semitsp import CompleteWeightedGraph, SpanningTree, gen_example1


@pytest.fixture
def example1() -> CompleteWeightedGraph:
    return gen_example1()


@pytest.fixture
def example2_tree() -> SpanningTree:
    # six-vertex tree: a path 0-1-2 with branches 3 and 4-5 hanging off 2
    return SpanningTree.from_edges(
        6, [(0, 1, 1.0), (1, 2, 1.0), (2, 3, 1.0), (2, 4, 1.0), (4, 5, 1.0)]
    )


def uniform_complete(n: int, weight: float = 1.0) -> CompleteWeightedGraph:
    w = np.full((n, n), weight)
    np.fill_diagonal(w, 0.0)
    return CompleteWeightedGraph.from_matrix(w)


def brute_beta(g: CompleteWeightedGraph) -> tuple[float, tuple[int, int, int]]:
    """Triple-loop evaluation of the beta definition; first maximizer in
    lexicographic (x, y, z) order."""
    n = g.n
    w = g.w
    best = 0.0
    witness = None
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if x == z:
                    continue
                ratio = w[x, z] / (w[x, y] + w[y, z])
                if ratio > best:
                    best = ratio
                    witness = (x, y, z)
    return float(best), witness


def kruskal_mst(g: CompleteWeightedGraph) -> tuple[set[tuple[int, int]], float]:
    """Kruskal with union-find; ties broken by sorting on (w, u, v)."""
    n = g.n
    edges = sorted(
        (float(g.w[u, v]), u, v) for u in range(n) for v in range(u + 1, n)
    )
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    chosen = set()
    total = 0.0
    for w, u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            chosen.add((u, v))
            total += w
            if len(chosen) == n - 1:
                break
    return chosen, total


def prufer_trees(n: int):
    """Every labelled tree on n vertices, decoded from its Pruefer sequence."""
    if n == 2:
        yield [(0, 1)]
        return
    for seq in np.ndindex(*([n] * (n - 2))):
        degree = [1] * n
        for v in seq:
            degree[v] += 1
        edges = []
        remaining = list(seq)
        leaves = sorted(v for v in range(n) if degree[v] == 1)
        for v in remaining:
            leaf = leaves.pop(0)
            edges.append((min(leaf, v), max(leaf, v)))
            degree[v] -= 1
            if degree[v] == 1:
                # keep candidate list sorted so decoding is canonical
                import bisect

                bisect.insort(leaves, v)
        u, v = leaves[0], leaves[1]
        edges.append((min(u, v), max(u, v)))
        yield edges


def brute_min_spanning_weight(g: CompleteWeightedGraph) -> float:
    best = np.inf
    for edges in prufer_trees(g.n):
        total = 0.0
        for u, v in edges:
            total += g.w[u, v]
        best = min(best, total)
    return float(best)


def all_perfect_matchings(vertices: list[int]):
    """Recursive enumeration of the (k-1)!! pairings of an even vertex set."""
    if not vertices:
        yield []
        return
    first, rest = vertices[0], vertices[1:]
    for idx, partner in enumerate(rest):
        others = rest[:idx] + rest[idx + 1 :]
        for tail in all_perfect_matchings(others):
            yield [(first, partner)] + tail


def brute_min_matching(g: CompleteWeightedGraph, vertices) -> tuple[float, int]:
    """Minimum pairing weight and the number of pairings inspected."""
    vertices = sorted(vertices)
    best = np.inf
    count = 0
    for pairing in all_perfect_matchings(vertices):
        count += 1
        total = 0.0
        for u, v in pairing:
            total += g.w[u, v]
        best = min(best, total)
    return float(best), count


def original_edge_tours(g: CompleteWeightedGraph, edge_set, orders):
    """Weights of canonical tours that stay inside `edge_set`; +inf rows mean
    the tour leaves the original graph."""
    present = np.zeros((g.n, g.n), dtype=bool)
    for u, v in edge_set:
        present[u, v] = present[v, u] = True
    ok = present[orders[:, :-1], orders[:, 1:]].all(axis=1)
    ok &= present[orders[:, -1], orders[:, 0]]
    weights = g.w[orders[:, :-1], orders[:, 1:]].sum(axis=1)
    weights += g.w[orders[:, -1], orders[:, 0]]
    return ok, weights


def sequential_cycle_weight(g: CompleteWeightedGraph, order) -> float:
    total = 0.0
    k = len(order)
    for i in range(k):
        total += g.w[order[i], order[(i + 1) % k]]
    return float(total)
