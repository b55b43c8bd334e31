"""Exact small-instance solvers used as ground truth: Held-Karp dynamic
programming, full cycle enumeration, and brute-force gamma over simple paths.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations

import numpy as np
from numba import njit

from .errors import TooFewVertices, TooLarge
from .graphs import CompleteWeightedGraph, Tour, tour_weight

HELD_KARP_MAX = 20
ENUMERATE_MAX = 10
BRUTE_GAMMA_MAX = 7


@lru_cache(maxsize=None)
def canonical_tour_orders(n: int) -> np.ndarray:
    """All (n-1)!/2 canonical tour orders: vertex 0 first, direction fixed by
    order[1] < order[-1], rows in lexicographic order."""
    rows = [
        (0, *p) for p in permutations(range(1, n)) if p[0] < p[-1]
    ]
    return np.array(rows, dtype=np.int8)


def exact_tsp_enumerate(g: CompleteWeightedGraph) -> Tour:
    """Optimal tour by enumerating every Hamiltonian cycle once; returns the
    lexicographically smallest canonical order among the optima."""
    n = g.n
    if n < 3:
        raise TooFewVertices("tours need n >= 3")
    if n > ENUMERATE_MAX:
        raise TooLarge(f"enumeration capped at n <= {ENUMERATE_MAX}")
    orders = canonical_tour_orders(n)
    w = g.w
    weights = w[orders[:, :-1], orders[:, 1:]].sum(axis=1)
    weights += w[orders[:, -1], orders[:, 0]]
    best = int(np.argmin(weights))
    order = tuple(int(v) for v in orders[best])
    return Tour(order=order, weight=tour_weight(g, order))


@njit(cache=True)
def _held_karp_tables(w: np.ndarray):
    """dp[mask, j] = cheapest path from vertex 0 through the vertex set
    encoded by mask (over vertices 1..n-1), ending at vertex j+1."""
    n = w.shape[0]
    m = n - 1
    full = 1 << m
    dp = np.full((full, m), np.inf)
    par = np.full((full, m), -1, dtype=np.int8)
    for j in range(m):
        dp[1 << j, j] = w[0, j + 1]
    for mask in range(1, full):
        for j in range(m):
            if not (mask >> j) & 1:
                continue
            prev = mask ^ (1 << j)
            if prev == 0:
                continue
            best = np.inf
            best_i = -1
            mm = prev
            while mm:
                i = 0
                while not (mm >> i) & 1:
                    i += 1
                mm &= mm - 1
                c = dp[prev, i] + w[i + 1, j + 1]
                if c < best:
                    best = c
                    best_i = i
            dp[mask, j] = best
            par[mask, j] = best_i
    best = np.inf
    best_j = -1
    last = full - 1
    for j in range(m):
        c = dp[last, j] + w[j + 1, 0]
        if c < best:
            best = c
            best_j = j
    return par, best_j


def exact_tsp_held_karp(
    g: CompleteWeightedGraph, max_vertices: int = HELD_KARP_MAX
) -> Tour:
    """Globally optimal tour via Held-Karp, O(n^2 * 2^n) time and O(n * 2^n)
    memory; argmin scans run in ascending index order and the final order is
    direction-normalized, so the result is deterministic."""
    n = g.n
    if n < 3:
        raise TooFewVertices("tours need n >= 3")
    if n > max_vertices:
        raise TooLarge(f"Held-Karp capped at n <= {max_vertices}")
    par, best_j = _held_karp_tables(g.w)
    path = []
    mask = (1 << (n - 1)) - 1
    j = int(best_j)
    while j >= 0:
        path.append(j + 1)
        nxt = int(par[mask, j])
        mask ^= 1 << j
        j = nxt
    order = [0] + path[::-1]
    if order[1] > order[-1]:
        order = [0] + order[:0:-1]
    order = tuple(order)
    return Tour(order=order, weight=tour_weight(g, order))


def brute_gamma(g: CompleteWeightedGraph) -> float:
    """Largest ratio of endpoint distance to chain weight over every simple
    path between every vertex pair. With positive weights any heavier chain
    with repeats is dominated by a simple one, so this realizes the supremum
    over arbitrary chains."""
    n = g.n
    if n < 2:
        raise TooFewVertices("gamma needs n >= 2")
    if n > BRUTE_GAMMA_MAX:
        raise TooLarge(f"path enumeration capped at n <= {BRUTE_GAMMA_MAX}")
    w = g.w
    best = 1.0
    for x in range(n):
        for y in range(x + 1, n):
            others = [v for v in range(n) if v != x and v != y]
            direct = w[x, y]
            for r in range(len(others) + 1):
                for mid in permutations(others, r):
                    chain = (x, *mid, y)
                    total = 0.0
                    for a, b in zip(chain, chain[1:]):
                        total += w[a, b]
                    ratio = direct / total
                    if ratio > best:
                        best = ratio
    return float(best)
