"""MST double-tree approximation: minimum spanning tree, depth-first tree
traversal, shortcutting, and the assembled solver with its 2*gamma guarantee.
"""

from __future__ import annotations

from collections import Counter
from typing import Callable, Iterator, Sequence

import numpy as np

from .errors import (
    InternalInvariantViolation,
    InvalidParams,
    NotATraversal,
    RootNotInTree,
    TooFewVertices,
)
from .graphs import (
    CompleteWeightedGraph,
    SpanningTree,
    Tour,
    Walk,
    cyclic_weight,
    normalize_pair,
)
from .relaxation import relaxation_profile
from .reports import GUARANTEE_RTOL, METHOD_MST2, SolveReport

NeighborOrder = str | Callable[[int, Sequence[int]], Sequence[int]]


def minimum_spanning_tree(g: CompleteWeightedGraph) -> SpanningTree:
    """Prim's algorithm with a dense O(n^2) scan; complete graphs are always
    connected so no connectivity checks are needed.

    Ties are broken toward the lexicographically smallest (u, v) edge, both
    when picking the next vertex and when recording its attachment point, so
    the returned tree is deterministic.
    """
    n = g.n
    if n < 1:
        raise TooFewVertices("spanning tree needs n >= 1")
    if n == 1:
        return SpanningTree(n=1, root=0, parent=(-1,), edges=(), weight=0.0)
    w = g.w
    in_tree = np.zeros(n, dtype=bool)
    in_tree[0] = True
    dist = w[0].copy()
    dist[0] = np.inf
    parent = np.zeros(n, dtype=np.int64)
    parent[0] = -1
    edges: list[tuple[int, int, float]] = []
    total = 0.0
    for _ in range(n - 1):
        masked = np.where(in_tree, np.inf, dist)
        m = masked.min()
        candidates = np.nonzero(masked == m)[0]
        v = int(candidates[0])
        if candidates.size > 1:
            best_key = normalize_pair(int(parent[v]), v)
            for c in candidates[1:]:
                key = normalize_pair(int(parent[c]), int(c))
                if key < best_key:
                    best_key, v = key, int(c)
        p = int(parent[v])
        edges.append((*normalize_pair(p, v), float(dist[v])))
        total += dist[v]
        in_tree[v] = True
        row = w[v]
        improve = (~in_tree) & (row < dist)
        dist[improve] = row[improve]
        parent[improve] = v
        tie = np.nonzero((~in_tree) & (row == dist) & (parent != v))[0]
        for u in tie:
            u = int(u)
            if normalize_pair(v, u) < normalize_pair(int(parent[u]), u):
                parent[u] = v
    parent_of = tuple(int(p) for p in parent)
    return SpanningTree(
        n=n, root=0, parent=parent_of, edges=tuple(edges), weight=float(total)
    )


def _ordered_children(vertex: int, neighbors: list[int], policy: NeighborOrder) -> list[int]:
    if policy == "ascending":
        return sorted(neighbors)
    if policy == "descending":
        return sorted(neighbors, reverse=True)
    if callable(policy):
        return list(policy(vertex, neighbors))
    raise InvalidParams(f"unknown neighbor order {policy!r}")


def tree_traversal(
    tree: SpanningTree, root: int = 0, neighbor_order: NeighborOrder = "ascending"
) -> Walk:
    """Closed depth-first walk of length 2n-1 visiting every tree edge exactly
    twice. Children of each vertex are visited in `neighbor_order`: the named
    policies "ascending" (default) and "descending" sort by vertex id, or pass
    a callable (vertex, neighbors) -> ordered neighbors."""
    if not (0 <= root < tree.n):
        raise RootNotInTree(f"root {root} not in 0..{tree.n - 1}")
    if tree.n == 1:
        return Walk(vertices=(root,), closed=True)
    adj = tree.adjacency()

    def children_of(v: int, parent: int | None) -> Iterator[int]:
        nbrs = [u for u in adj[v] if u != parent]
        return iter(_ordered_children(v, nbrs, neighbor_order))

    walk = [root]
    stack: list[tuple[int, Iterator[int]]] = [(root, children_of(root, None))]
    while stack:
        v, it = stack[-1]
        child = next(it, None)
        if child is None:
            stack.pop()
            if stack:
                walk.append(stack[-1][0])
            continue
        walk.append(child)
        stack.append((child, children_of(child, v)))
    return Walk(vertices=tuple(walk), closed=True)


def _validate_traversal(walk: Walk) -> int:
    vs = walk.vertices
    n = len(set(vs))
    if n == 1:
        if len(vs) != 1:
            raise NotATraversal("single-vertex traversal must have length 1")
        return 1
    if not walk.closed or vs[0] != vs[-1]:
        raise NotATraversal("tree traversal must be a closed walk")
    if len(vs) != 2 * n - 1:
        raise NotATraversal(f"traversal of {n} vertices must have length {2 * n - 1}")
    counts = Counter(normalize_pair(a, b) for a, b in walk.steps())
    if any(c != 2 for c in counts.values()) or len(counts) != n - 1:
        raise NotATraversal("each tree edge must be traversed exactly twice")
    return n


def shortcut(walk: Walk, g: CompleteWeightedGraph) -> Tour:
    """Cross out every repeated vertex of a closed tree traversal, keeping
    first appearances; the result visits each vertex once and closes back to
    the walk's root."""
    n = _validate_traversal(walk)
    seen: set[int] = set()
    order: list[int] = []
    for v in walk.vertices:
        if v not in seen:
            seen.add(v)
            order.append(v)
    if n >= 3:
        return Tour.from_order(g, order)
    return Tour(order=tuple(order), weight=cyclic_weight(g, order))


def solve_mst2(g: CompleteWeightedGraph, root: int = 0) -> SolveReport:
    """MST double-tree method: spanning tree, depth-first traversal from
    `root`, shortcut. The tour weight is certified to be at most
    2 * gamma * mst weight, and the MST weight is itself a lower bound on the
    optimum, giving the 2*gamma guarantee."""
    if g.n < 3:
        raise TooFewVertices("solve_mst2 needs n >= 3")
    if not (0 <= root < g.n):
        raise RootNotInTree(f"root {root} not in 0..{g.n - 1}")
    tree = minimum_spanning_tree(g)
    walk = tree_traversal(tree, root=root)
    tour = shortcut(walk, g)
    profile = relaxation_profile(g)
    bound = 2.0 * profile.gamma * tree.weight
    if tour.weight > bound * (1.0 + GUARANTEE_RTOL):
        raise InternalInvariantViolation(
            f"shortcut weight {tour.weight} exceeds 2*gamma*w(T) = {bound}"
        )
    return SolveReport(
        method=METHOD_MST2,
        tour=tour,
        lower_bound=tree.weight,
        beta=profile.beta,
        gamma=profile.gamma,
        guarantee_factor=2.0 * profile.gamma,
        achieved_ratio=tour.weight / tree.weight,
    )
