"""Core graph data model: complete weighted graphs, general weighted graphs,
multigraphs, trees, matchings and walks.

Vertices are always the integers 0..n-1. Edge weights are 64-bit floats and
must be strictly positive; weight comparisons inside algorithms are exact,
tolerances appear only in test assertions. All types are immutable after
construction.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    AsymmetricWeight,
    InvalidParams,
    NonpositiveWeight,
    NonzeroDiagonal,
    NotAPermutation,
    TooFewVertices,
)

Edge = tuple[int, int, float]


def normalize_pair(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class WeightedGraph:
    """Simple undirected graph with positive edge weights.

    Edges are stored as (u, v, w) triples with u < v.
    """

    n: int
    edges: tuple[Edge, ...]

    @classmethod
    def from_edges(cls, n: int, edges) -> "WeightedGraph":
        if n < 1:
            raise InvalidParams("vertex count must be >= 1")
        seen: set[tuple[int, int]] = set()
        normalized: list[Edge] = []
        for u, v, w in edges:
            u, v = int(u), int(v)
            if u == v:
                raise InvalidParams(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidParams(f"edge ({u},{v}) out of range for n={n}")
            pair = normalize_pair(u, v)
            if pair in seen:
                raise InvalidParams(f"duplicate edge {pair}")
            w = float(w)
            if not (w > 0.0):
                raise NonpositiveWeight(*pair)
            seen.add(pair)
            normalized.append((pair[0], pair[1], w))
        normalized.sort()
        return cls(n=n, edges=tuple(normalized))

    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset((u, v) for u, v, _ in self.edges)

    def total_weight(self) -> float:
        total = 0.0
        for _, _, w in self.edges:
            total += w
        return total


@dataclass(frozen=True, eq=False)
class CompleteWeightedGraph:
    """Complete graph stored as a dense symmetric weight matrix.

    The matrix induces a semimetric on the vertex set: zero diagonal,
    symmetric, strictly positive off-diagonal entries.
    """

    w: np.ndarray

    def __post_init__(self):
        m = np.array(self.w, dtype=np.float64)
        m.setflags(write=False)
        object.__setattr__(self, "w", m)

    @property
    def n(self) -> int:
        return self.w.shape[0]

    @classmethod
    def from_matrix(cls, matrix) -> "CompleteWeightedGraph":
        g = cls(np.asarray(matrix, dtype=np.float64))
        validate_complete(g)
        return g

    def distance(self, x: int, y: int) -> float:
        return float(self.w[x, y])


def validate_complete(g: CompleteWeightedGraph) -> None:
    """Check all CompleteWeightedGraph invariants, raising on the first
    violation found in row-major scan order."""
    w = g.w
    if w.ndim != 2 or w.shape[0] != w.shape[1]:
        raise InvalidParams(f"weight matrix must be square, got shape {w.shape}")
    n = w.shape[0]
    if n < 1:
        raise InvalidParams("vertex count must be >= 1")
    if not np.isfinite(w).all():
        i, j = np.argwhere(~np.isfinite(w))[0]
        raise InvalidParams(f"non-finite weight at ({i},{j})")
    diag = np.diagonal(w)
    if (diag != 0.0).any():
        i = int(np.nonzero(diag != 0.0)[0][0])
        raise NonzeroDiagonal(i)
    asym = w != w.T
    if asym.any():
        i, j = (int(k) for k in np.argwhere(asym)[0])
        raise AsymmetricWeight(*normalize_pair(i, j))
    offdiag = ~np.eye(n, dtype=bool)
    bad = offdiag & (w <= 0.0)
    if bad.any():
        i, j = (int(k) for k in np.argwhere(bad)[0])
        raise NonpositiveWeight(*normalize_pair(i, j))


def tour_weight(g: CompleteWeightedGraph, order) -> float:
    """Weight of the Hamiltonian cycle visiting `order` and closing back to
    its first vertex. Summation is sequential in visiting order so that
    repeated evaluations give bit-identical results."""
    n = g.n
    if n < 3:
        raise TooFewVertices(f"tours need n >= 3, got n={n}")
    order = [int(v) for v in order]
    if len(order) != n or set(order) != set(range(n)):
        raise NotAPermutation(f"order must be a permutation of 0..{n - 1}")
    w = g.w
    total = 0.0
    for i in range(n - 1):
        total += w[order[i], order[i + 1]]
    total += w[order[-1], order[0]]
    return float(total)


def cyclic_weight(g: CompleteWeightedGraph, order) -> float:
    """Like tour_weight but without the permutation/size gate; used for
    degenerate cycles with fewer than 3 vertices."""
    k = len(order)
    if k <= 1:
        return 0.0
    w = g.w
    total = 0.0
    for i in range(k):
        total += w[order[i], order[(i + 1) % k]]
    return float(total)


@dataclass(frozen=True)
class Tour:
    """Hamiltonian cycle given as a vertex sequence; the closing edge back to
    order[0] is implicit."""

    order: tuple[int, ...]
    weight: float

    @classmethod
    def from_order(cls, g: CompleteWeightedGraph, order) -> "Tour":
        order = tuple(int(v) for v in order)
        return cls(order=order, weight=tour_weight(g, order))

    @property
    def n(self) -> int:
        return len(self.order)

    def edges(self) -> list[tuple[int, int]]:
        n = len(self.order)
        return [
            normalize_pair(self.order[i], self.order[(i + 1) % n]) for i in range(n)
        ]


@dataclass(frozen=True)
class SpanningTree:
    """Spanning tree rooted at `root`; parent[root] == -1."""

    n: int
    root: int
    parent: tuple[int, ...]
    edges: tuple[Edge, ...]
    weight: float

    @classmethod
    def from_edges(cls, n: int, edges, root: int = 0) -> "SpanningTree":
        edges = tuple((int(u), int(v), float(w)) for u, v, w in edges)
        if len(edges) != n - 1:
            raise InvalidParams(f"spanning tree on {n} vertices needs {n - 1} edges")
        adj: dict[int, list[int]] = {v: [] for v in range(n)}
        for u, v, _ in edges:
            adj[u].append(v)
            adj[v].append(u)
        parent = [-2] * n
        parent[root] = -1
        stack = [root]
        seen = 1
        while stack:
            v = stack.pop()
            for u in adj[v]:
                if parent[u] == -2:
                    parent[u] = v
                    seen += 1
                    stack.append(u)
        if seen != n:
            raise InvalidParams("edges do not span all vertices")
        total = 0.0
        for _, _, w in edges:
            total += w
        return cls(n=n, root=root, parent=tuple(parent), edges=edges, weight=total)

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for u, v, _ in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def adjacency(self) -> dict[int, list[int]]:
        adj: dict[int, list[int]] = {v: [] for v in range(self.n)}
        for u, v, _ in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj


@dataclass(frozen=True)
class Matching:
    """Set of vertex-disjoint unordered pairs."""

    pairs: frozenset[tuple[int, int]]
    weight: float

    @classmethod
    def from_pairs(cls, pairs, g: CompleteWeightedGraph | None = None) -> "Matching":
        normalized = sorted(normalize_pair(int(u), int(v)) for u, v in pairs)
        seen: set[int] = set()
        for u, v in normalized:
            if u == v or u in seen or v in seen:
                raise InvalidParams(f"pairs are not vertex-disjoint at ({u},{v})")
            seen.add(u)
            seen.add(v)
        total = 0.0
        if g is not None:
            for u, v in normalized:
                total += g.w[u, v]
        return cls(pairs=frozenset(normalized), weight=float(total))

    def vertices(self) -> frozenset[int]:
        return frozenset(v for pair in self.pairs for v in pair)

    def is_perfect_over(self, vertex_set) -> bool:
        return self.vertices() == frozenset(vertex_set)

    def covers_pair(self, u: int, v: int) -> bool:
        return normalize_pair(u, v) in self.pairs


@dataclass(frozen=True)
class EulerMultigraph:
    """Multigraph over 0..n-1; multiedges are (tag, u, v) with tag 0 for
    tree edges and tag 1 for matching edges."""

    n: int
    multiedges: tuple[tuple[int, int, int], ...]

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for _, u, v in self.multiedges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def all_degrees_even(self) -> bool:
        return all(d % 2 == 0 for d in self.degrees())


@dataclass(frozen=True)
class Walk:
    """Vertex sequence in which every consecutive pair is an edge of some
    underlying (multi)graph."""

    vertices: tuple[int, ...]
    closed: bool

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(int(v) for v in self.vertices))
        if not self.vertices:
            raise InvalidParams("a walk needs at least one vertex")
        if self.closed and self.vertices[0] != self.vertices[-1]:
            raise InvalidParams("closed walk must start and end at the same vertex")

    def steps(self) -> list[tuple[int, int]]:
        vs = self.vertices
        return [(vs[i], vs[i + 1]) for i in range(len(vs) - 1)]
