"""Relaxation constants of the semimetric induced by a complete weighted graph.

Two constants describe how far the semimetric is from satisfying the
triangle inequality:

* beta  - the smallest number with d(x,z) <= beta * (d(x,y) + d(y,z)) for all
  triples; computed as the maximum of d(x,z) / (d(x,y) + d(y,z)) over ordered
  triples with x != z, where y ranges over the whole vertex set (y = x forces
  the ratio 1, so beta >= 1 automatically).
* gamma - the smallest number with d(x1,xn) <= gamma * sum d(xk,xk+1) over all
  finite vertex chains. With positive weights the binding chains are simple
  paths, so gamma equals max over pairs of d(x,y) / D(x,y) where D is the
  all-pairs shortest-path matrix; computed via Floyd-Warshall in O(n^3).

Always 1 <= beta <= gamma, and gamma <= beta ** ceil(log2(n-1)) for n >= 2.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InternalInvariantViolation, InvalidConstants, TooFewVertices
from .graphs import CompleteWeightedGraph

METRIC = "metric"
BETA_METRIC = "beta_metric"
GENERAL = "general"  # reserved; every finite instance admits a finite beta


@dataclass(frozen=True, eq=False)
class RelaxationProfile:
    """Computed (beta, gamma) certificate of an instance.

    shortest_path is the Floyd-Warshall matrix D; the witnesses are the
    lexicographically smallest vertex tuples attaining each maximum (None
    for the degenerate single-vertex instance).
    """

    beta: float
    gamma: float
    shortest_path: np.ndarray
    beta_witness: tuple[int, int, int] | None
    gamma_witness: tuple[int, int] | None

    def __post_init__(self):
        d = np.asarray(self.shortest_path, dtype=np.float64)
        d.setflags(write=False)
        object.__setattr__(self, "shortest_path", d)


def _min_plus_square(w: np.ndarray) -> np.ndarray:
    """B[x, z] = min over y of w[x, y] + w[y, z], row by row to bound the
    working-set size."""
    n = w.shape[0]
    out = np.empty_like(w)
    for x in range(n):
        out[x] = (w[x][:, None] + w).min(axis=0)
    return out


def compute_beta(g: CompleteWeightedGraph) -> tuple[float, tuple[int, int, int]]:
    """Maximum of d(x,z) / (d(x,y) + d(y,z)) over triples with x != z.

    Returns (beta, (x, y, z)) where the witness is the lexicographically
    smallest triple attaining the maximum.
    """
    n = g.n
    if n < 2:
        raise TooFewVertices("beta needs n >= 2")
    w = g.w
    best_denom = _min_plus_square(w)
    offdiag = ~np.eye(n, dtype=bool)
    ratio = np.zeros_like(w)
    np.divide(w, best_denom, out=ratio, where=offdiag)
    beta = float(ratio.max())
    witness = _beta_witness(w, ratio, beta)
    return beta, witness


def _beta_witness(w: np.ndarray, ratio: np.ndarray, beta: float) -> tuple[int, int, int]:
    n = w.shape[0]
    for x in range(n):
        zs = np.nonzero(ratio[x] == beta)[0]
        if zs.size == 0:
            continue
        for y in range(n):
            for z in zs:
                if w[x, z] / (w[x, y] + w[y, z]) == beta:
                    return (int(x), int(y), int(z))
    raise InternalInvariantViolation("no triple attains the computed beta")


def shortest_path_matrix(g: CompleteWeightedGraph) -> np.ndarray:
    """All-pairs shortest paths by Floyd-Warshall; O(n^3)."""
    d = g.w.copy()
    n = d.shape[0]
    tmp = np.empty_like(d)
    for k in range(n):
        np.add(d[:, k][:, None], d[k, :][None, :], out=tmp)
        np.minimum(d, tmp, out=d)
    return d


def compute_gamma(
    g: CompleteWeightedGraph,
) -> tuple[float, np.ndarray, tuple[int, int]]:
    """gamma = max over pairs x != y of w[x][y] / D[x][y] with D the
    shortest-path matrix.

    Returns (gamma, D, (x, y)) with x < y the lexicographically smallest
    pair attaining the maximum.
    """
    n = g.n
    if n < 2:
        raise TooFewVertices("gamma needs n >= 2")
    w = g.w
    d = shortest_path_matrix(g)
    upper = np.triu(np.ones((n, n), dtype=bool), k=1)
    ratio = np.zeros_like(w)
    np.divide(w, d, out=ratio, where=upper)
    gamma = float(ratio.max())
    x, y = (int(v) for v in np.argwhere(ratio == gamma)[0])
    return gamma, d, (x, y)


def relaxation_profile(g: CompleteWeightedGraph) -> RelaxationProfile:
    """Full (beta, gamma, D) certificate. The single-vertex instance is
    defined to have beta = gamma = 1 with no witnesses."""
    if g.n == 1:
        return RelaxationProfile(
            beta=1.0,
            gamma=1.0,
            shortest_path=np.zeros((1, 1)),
            beta_witness=None,
            gamma_witness=None,
        )
    beta, beta_witness = compute_beta(g)
    gamma, d, gamma_witness = compute_gamma(g)
    if not (1.0 <= beta <= gamma):
        raise InternalInvariantViolation(
            f"expected 1 <= beta <= gamma, got beta={beta} gamma={gamma}"
        )
    return RelaxationProfile(
        beta=beta,
        gamma=gamma,
        shortest_path=d,
        beta_witness=beta_witness,
        gamma_witness=gamma_witness,
    )


@dataclass(frozen=True)
class Classification:
    kind: str  # METRIC | BETA_METRIC | GENERAL
    beta: float

    def __str__(self) -> str:
        if self.kind == METRIC:
            return METRIC
        return f"{self.kind}(beta={self.beta:g})"


def classify(g: CompleteWeightedGraph) -> tuple[Classification, RelaxationProfile]:
    """An instance is metric exactly when beta == 1, i.e. no triple violates
    the triangle inequality."""
    profile = relaxation_profile(g)
    kind = METRIC if profile.beta == 1.0 else BETA_METRIC
    return Classification(kind=kind, beta=profile.beta), profile


# (key, factor description) for the six guarantee values; gamma-based entries
# first so that stable sorting keeps them ahead of beta-based ties.
BOUND_KEYS = ("2g", "3g2", "4b", "b2b", "32b2", "3b2b2")


def compare_bounds(beta: float, gamma: float) -> list[tuple[str, float]]:
    """Guarantee factors of the known approximation methods, sorted ascending.

    Keys: 2g = 2*gamma (MST shortcut), 3g2 = 3*gamma/2 (matching-preserving
    Christofides), 4b = 4*beta, b2b = beta^2+beta, 32b2 = 3*beta^2/2,
    3b2b2 = (3*beta^2+beta)/2. Ties keep gamma-based entries first.
    """
    if not (1.0 <= beta <= gamma):
        raise InvalidConstants(f"need 1 <= beta <= gamma, got beta={beta} gamma={gamma}")
    values = [
        ("2g", 2.0 * gamma),
        ("3g2", 1.5 * gamma),
        ("4b", 4.0 * beta),
        ("b2b", beta * beta + beta),
        ("32b2", 1.5 * beta * beta),
        ("3b2b2", (3.0 * beta * beta + beta) / 2.0),
    ]
    return sorted(values, key=lambda kv: kv[1])


def suzuki_exponent(n: int) -> int:
    """ceil(log2(n - 1)) for n >= 2, computed in exact integer arithmetic."""
    if n < 2:
        raise TooFewVertices("exponent defined for n >= 2")
    return (n - 2).bit_length()


def suzuki_bound(beta: float, n: int) -> float:
    """Upper bound beta ** ceil(log2(n - 1)) on gamma."""
    return float(beta) ** suzuki_exponent(n)
