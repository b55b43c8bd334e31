"""Matching-preserving Christofides pipeline with the 3*gamma/2 guarantee.

Stages: odd-degree vertices of the MST, exact minimum-weight perfect matching
on the induced complete subgraph, Euler walk of the tree+matching multigraph
whose first edge is forced to come from the matching, and an enhanced
shortcutting pass that keeps every matching edge in the final tour. Keeping
the matching edges is what prevents the relaxation constant gamma from
entering the error bound twice.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numba import njit

from .errors import (
    DisconnectedMultigraph,
    InternalInvariantViolation,
    MatchingEdgeLost,
    NoMatchingEdge,
    OddSetSize,
    SetTooLarge,
    TooFewVertices,
    WalkDoesNotStartWithMatchingEdge,
)
from .graphs import (
    CompleteWeightedGraph,
    EulerMultigraph,
    Matching,
    SpanningTree,
    Tour,
    Walk,
    normalize_pair,
)
from .mst import minimum_spanning_tree
from .relaxation import relaxation_profile
from .reports import GUARANTEE_RTOL, METHOD_CHRISTOFIDES, SolveReport

# The exact matching solver enumerates subsets of the odd-vertex set; above
# this size the memory/time cost is no longer desk-scale.
MAX_MATCHING_SET = 24

TREE_TAG = 0
MATCHING_TAG = 1


@dataclass(frozen=True)
class ChristofidesTrace:
    """Intermediate structures of one pipeline run."""

    tree: SpanningTree
    odd_vertices: frozenset[int]
    matching: Matching
    euler_walk: Walk
    tour: Tour
    non_matching_weight: float


def odd_vertices(tree: SpanningTree) -> frozenset[int]:
    """Vertices with odd degree in the tree; by handshaking there is an even
    number of them."""
    return frozenset(v for v, d in enumerate(tree.degrees()) if d % 2 == 1)


@njit(cache=True)
def _matching_dp(w: np.ndarray) -> np.ndarray:
    """dp[mask] = weight of a minimum perfect matching of the vertices in
    mask; masks with odd popcount stay at +inf. O(2^k * k)."""
    k = w.shape[0]
    full = 1 << k
    dp = np.full(full, np.inf)
    dp[0] = 0.0
    for mask in range(1, full):
        i = 0
        while not (mask >> i) & 1:
            i += 1
        rest = mask ^ (1 << i)
        if rest == 0:
            continue
        best = np.inf
        m = rest
        while m:
            j = i + 1
            while not (m >> j) & 1:
                j += 1
            m &= m - 1
            c = dp[mask ^ (1 << i) ^ (1 << j)] + w[i, j]
            if c < best:
                best = c
        dp[mask] = best
    return dp


def min_weight_perfect_matching(
    g: CompleteWeightedGraph, vertex_set, max_set_size: int = MAX_MATCHING_SET
) -> Matching:
    """Exact minimum-weight perfect matching over `vertex_set` by bitmask
    dynamic programming; ties resolve toward lexicographically smaller pairs.
    """
    s = sorted(int(v) for v in vertex_set)
    k = len(s)
    if k % 2 == 1:
        raise OddSetSize(f"perfect matching needs an even set, got {k} vertices")
    if k == 0:
        return Matching(pairs=frozenset(), weight=0.0)
    if k > max_set_size:
        raise SetTooLarge(f"matching set of {k} vertices exceeds limit {max_set_size}")
    if k == 2:
        return Matching.from_pairs([(s[0], s[1])], g)
    sub = np.ascontiguousarray(g.w[np.ix_(s, s)])
    dp = _matching_dp(sub)
    pairs: list[tuple[int, int]] = []
    mask = (1 << k) - 1
    while mask:
        i = (mask & -mask).bit_length() - 1
        target = dp[mask]
        chosen = -1
        for j in range(i + 1, k):
            if not (mask >> j) & 1:
                continue
            if dp[mask ^ (1 << i) ^ (1 << j)] + sub[i, j] == target:
                chosen = j
                break
        if chosen < 0:
            raise InternalInvariantViolation("matching reconstruction failed")
        pairs.append((s[i], s[chosen]))
        mask ^= (1 << i) | (1 << chosen)
    return Matching.from_pairs(pairs, g)


def euler_multigraph(tree: SpanningTree, matching: Matching) -> EulerMultigraph:
    """Union multigraph of tree edges (tag 0) and matching edges (tag 1); a
    matching pair that is also a tree edge yields two parallel multiedges."""
    multiedges = [(TREE_TAG, u, v) for u, v, _ in tree.edges]
    multiedges += [(MATCHING_TAG, u, v) for u, v in sorted(matching.pairs)]
    mg = EulerMultigraph(n=tree.n, multiedges=tuple(multiedges))
    if not mg.all_degrees_even():
        raise InternalInvariantViolation("tree+matching multigraph has odd degrees")
    return mg


def euler_walk_matching_first(mg: EulerMultigraph, matching: Matching) -> Walk:
    """Hierholzer's algorithm, modified so that an unused matching edge at the
    current vertex is always preferred over tree edges; the walk starts at the
    smallest vertex incident to a matching edge, so its first edge is a
    matching edge.

    Sub-walks found after the first pass splice in at the last appearance of
    their anchor vertex, with the anchor chosen as the smallest vertex of the
    current walk that still has an unused incident edge.
    """
    if not matching.pairs:
        raise NoMatchingEdge("matching must be nonempty")
    adj: dict[int, list[tuple[int, int, int]]] = {v: [] for v in range(mg.n)}
    for idx, (tag, u, v) in enumerate(mg.multiedges):
        adj[u].append((tag != MATCHING_TAG, v, idx))
        adj[v].append((tag != MATCHING_TAG, u, idx))
    for v in adj:
        adj[v].sort()
    used = [False] * len(mg.multiedges)

    def closed_subwalk(start: int) -> list[int]:
        path = [start]
        v = start
        while True:
            step = None
            for not_matching, u, idx in adj[v]:
                if not used[idx]:
                    step = (u, idx)
                    break
            if step is None:
                break
            u, idx = step
            used[idx] = True
            path.append(u)
            v = u
        if v != start:
            raise InternalInvariantViolation("open sub-walk in even-degree multigraph")
        return path

    start = min(matching.vertices())
    walk = closed_subwalk(start)
    remaining = len(mg.multiedges) - sum(used)
    while remaining:
        walk_set = set(walk)
        anchor = None
        for v in sorted(walk_set):
            if any(not used[idx] for _, _, idx in adj[v]):
                anchor = v
                break
        if anchor is None:
            raise DisconnectedMultigraph("unused edges unreachable from the walk")
        sub = closed_subwalk(anchor)
        last = len(walk) - 1 - walk[::-1].index(anchor)
        walk = walk[:last] + sub + walk[last + 1 :]
        remaining = len(mg.multiedges) - sum(used)
    first = normalize_pair(walk[0], walk[1])
    if first not in matching.pairs:
        raise InternalInvariantViolation("walk does not start with a matching edge")
    return Walk(vertices=tuple(walk), closed=True)


def enhanced_shortcut(
    walk: Walk, matching: Matching, g: CompleteWeightedGraph
) -> Tour:
    """Shortcut an Euler walk of the tree+matching multigraph into a tour
    without ever deleting a matching edge.

    Vertices outside the matching are kept at first appearance. A matching
    vertex is kept exactly where the incoming or outgoing walk edge is its
    matching edge; since the matching edge is traversed once, both endpoints
    are kept back to back and the pair survives into the tour. A matching
    vertex already placed can be re-encountered with a matching-adjacent edge
    only through a parallel tree edge (or the walk closure) and is skipped.
    """
    xs = walk.vertices
    if len(xs) < 2 or normalize_pair(xs[0], xs[1]) not in matching.pairs:
        raise WalkDoesNotStartWithMatchingEdge(
            "enhanced shortcut needs a walk whose first edge is a matching edge"
        )
    n = len(set(xs))
    matched = matching.vertices()
    pairs = matching.pairs
    order = [xs[0], xs[1]]
    placed = {xs[0], xs[1]}
    j = 2
    last = len(xs) - 1
    while len(order) < n and j <= last:
        v = xs[j]
        if v not in matched:
            if v not in placed:
                order.append(v)
                placed.add(v)
            j += 1
            continue
        incoming = normalize_pair(xs[j - 1], v) in pairs
        outgoing = j < last and normalize_pair(v, xs[j + 1]) in pairs
        if (incoming or outgoing) and v not in placed:
            order.append(v)
            placed.add(v)
        j += 1
    if len(order) < n:
        raise MatchingEdgeLost("walk exhausted before every vertex was placed")
    pos = {v: i for i, v in enumerate(order)}
    for u, v in pairs:
        gap = abs(pos[u] - pos[v])
        if gap != 1 and gap != n - 1:
            raise MatchingEdgeLost(f"matching pair ({u},{v}) not adjacent in tour")
    return Tour.from_order(g, order)


def solve_christofides(
    g: CompleteWeightedGraph, max_matching_size: int = MAX_MATCHING_SET
) -> SolveReport:
    """Full pipeline; the report carries the trace and the weight split
    (non-matching tour weight, matching weight) behind the 3*gamma/2 bound."""
    if g.n < 3:
        raise TooFewVertices("solve_christofides needs n >= 3")
    tree = minimum_spanning_tree(g)
    odd = odd_vertices(tree)
    matching = min_weight_perfect_matching(g, odd, max_set_size=max_matching_size)
    mg = euler_multigraph(tree, matching)
    walk = euler_walk_matching_first(mg, matching)
    tour = enhanced_shortcut(walk, matching, g)
    non_matching = 0.0
    for u, v in tour.edges():
        if (u, v) not in matching.pairs:
            non_matching += g.w[u, v]
    non_matching = float(non_matching)
    profile = relaxation_profile(g)
    cap = profile.gamma * tree.weight
    if non_matching > cap * (1.0 + GUARANTEE_RTOL):
        raise InternalInvariantViolation(
            f"non-matching tour weight {non_matching} exceeds gamma*w(T) = {cap}"
        )
    trace = ChristofidesTrace(
        tree=tree,
        odd_vertices=odd,
        matching=matching,
        euler_walk=walk,
        tour=tour,
        non_matching_weight=non_matching,
    )
    return SolveReport(
        method=METHOD_CHRISTOFIDES,
        tour=tour,
        lower_bound=tree.weight,
        beta=profile.beta,
        gamma=profile.gamma,
        guarantee_factor=1.5 * profile.gamma,
        achieved_ratio=tour.weight / tree.weight,
        trace=trace,
    )
