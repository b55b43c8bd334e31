"""Instance file formats and generators.

JSON is the canonical format: {"n": int, "matrix": [[...]]} for complete
instances or {"n": int, "edges": [[u, v, w], ...]} for general graphs, with
0-based vertices, an optional "name" and an optional "metadata" object that
may declare {"beta": ..., "gamma": ...}. A read-only TSPLIB subset is also
accepted: TYPE TSP, EDGE_WEIGHT_TYPE EXPLICIT, EDGE_WEIGHT_FORMAT FULL_MATRIX.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import InvalidParams, ParseError, ValidationError
from .graphs import CompleteWeightedGraph, WeightedGraph

DECLARED_RTOL = 1e-9


@dataclass(frozen=True)
class InstanceFile:
    name: str
    graph: CompleteWeightedGraph | WeightedGraph
    declared_beta: float | None = None
    declared_gamma: float | None = None

    @property
    def n(self) -> int:
        return self.graph.n


def _check_declared(instance: InstanceFile) -> InstanceFile:
    if instance.declared_beta is None and instance.declared_gamma is None:
        return instance
    if not isinstance(instance.graph, CompleteWeightedGraph):
        raise ValidationError("declared constants require a complete instance")
    from .relaxation import relaxation_profile

    profile = relaxation_profile(instance.graph)
    for label, declared, actual in (
        ("beta", instance.declared_beta, profile.beta),
        ("gamma", instance.declared_gamma, profile.gamma),
    ):
        if declared is None:
            continue
        if abs(declared - actual) > DECLARED_RTOL * max(1.0, abs(actual)):
            raise ValidationError(
                f"declared {label}={declared} but recomputed {actual}"
            )
    return instance


def parse_instance(data: bytes | str, name: str = "instance") -> InstanceFile:
    """Parse a JSON or TSPLIB instance; the format is sniffed from the first
    non-blank character."""
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    stripped = data.lstrip()
    if not stripped:
        raise ParseError(1, "empty input")
    if stripped.startswith("{"):
        return _parse_json(data, name)
    return _parse_tsplib(data, name)


def _parse_json(text: str, default_name: str) -> InstanceFile:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(e.lineno, e.msg) from e
    if not isinstance(doc, dict):
        raise ParseError(1, "top-level JSON value must be an object")
    if "n" not in doc:
        raise ParseError(1, 'missing "n"')
    n = doc["n"]
    if not isinstance(n, int) or isinstance(n, bool):
        raise ParseError(1, '"n" must be an integer')
    name = doc.get("name", default_name)
    metadata = doc.get("metadata", {})
    declared_beta = metadata.get("beta")
    declared_gamma = metadata.get("gamma")
    if "matrix" in doc:
        matrix = doc["matrix"]
        if len(matrix) != n or any(len(row) != n for row in matrix):
            raise ParseError(1, f'"matrix" must be {n}x{n}')
        graph: CompleteWeightedGraph | WeightedGraph = (
            CompleteWeightedGraph.from_matrix(matrix)
        )
    elif "edges" in doc:
        graph = WeightedGraph.from_edges(n, doc["edges"])
    else:
        raise ParseError(1, 'instance needs either "matrix" or "edges"')
    return _check_declared(
        InstanceFile(
            name=name,
            graph=graph,
            declared_beta=declared_beta,
            declared_gamma=declared_gamma,
        )
    )


_TSPLIB_REQUIRED = {
    "TYPE": "TSP",
    "EDGE_WEIGHT_TYPE": "EXPLICIT",
    "EDGE_WEIGHT_FORMAT": "FULL_MATRIX",
}


def _parse_tsplib(text: str, default_name: str) -> InstanceFile:
    headers: dict[str, str] = {}
    values: list[float] = []
    dimension = None
    in_weights = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line == "EOF":
            continue
        if in_weights:
            if ":" in line and not line[0].isdigit() and not line[0] == "-":
                in_weights = False
            else:
                try:
                    values.extend(float(tok) for tok in line.split())
                except ValueError as e:
                    raise ParseError(lineno, f"bad weight entry: {e}") from e
                continue
        if line == "EDGE_WEIGHT_SECTION":
            in_weights = True
            continue
        if ":" in line:
            key, _, value = line.partition(":")
            headers[key.strip()] = value.strip()
            continue
        raise ParseError(lineno, f"unexpected line {line!r}")
    for key, expected in _TSPLIB_REQUIRED.items():
        got = headers.get(key)
        if got != expected:
            raise ParseError(1, f"{key} must be {expected}, got {got!r}")
    if "DIMENSION" not in headers:
        raise ParseError(1, "missing DIMENSION")
    try:
        dimension = int(headers["DIMENSION"])
    except ValueError as e:
        raise ParseError(1, "DIMENSION must be an integer") from e
    if len(values) != dimension * dimension:
        raise ParseError(
            1, f"expected {dimension * dimension} matrix entries, got {len(values)}"
        )
    matrix = np.array(values, dtype=np.float64).reshape(dimension, dimension)
    return InstanceFile(
        name=headers.get("NAME", default_name),
        graph=CompleteWeightedGraph.from_matrix(matrix),
    )


def instance_to_json(
    graph: CompleteWeightedGraph | WeightedGraph,
    name: str | None = None,
    declared_beta: float | None = None,
    declared_gamma: float | None = None,
) -> str:
    """Serialize an instance; floats are written with Python's shortest
    round-tripping representation, so parse(serialize(g)) is bit-exact."""
    doc: dict = {}
    if name is not None:
        doc["name"] = name
    doc["n"] = graph.n
    if isinstance(graph, CompleteWeightedGraph):
        doc["matrix"] = [[float(x) for x in row] for row in graph.w]
    else:
        doc["edges"] = [[u, v, float(w)] for u, v, w in graph.edges]
    metadata = {}
    if declared_beta is not None:
        metadata["beta"] = float(declared_beta)
    if declared_gamma is not None:
        metadata["gamma"] = float(declared_gamma)
    if metadata:
        doc["metadata"] = metadata
    return json.dumps(doc)


def load_instance(path: str | Path) -> InstanceFile:
    path = Path(path)
    return parse_instance(path.read_bytes(), name=path.stem)


def gen_example1() -> CompleteWeightedGraph:
    """Five-vertex fixture with beta = 4 and gamma = 5: consecutive vertices
    at distance 1, the extreme pair at 20, everything else at 4."""
    n = 5
    w = np.zeros((n, n))
    for i in range(n):
        for j in range(n):
            gap = abs(i - j)
            if gap == 1:
                w[i, j] = 1.0
            elif gap == 4:
                w[i, j] = 20.0
            elif gap != 0:
                w[i, j] = 4.0
    return CompleteWeightedGraph.from_matrix(w)


def gen_star_family(n: int, gamma: float) -> CompleteWeightedGraph:
    """Tightness family: hub edges weigh 1, rim edges weigh 2*gamma. The
    unique MST is the hub star of weight n-1 and the MST-shortcut tour from
    the hub weighs exactly 2*(1 + gamma*(n-2))."""
    if n < 4:
        raise InvalidParams("star family needs n >= 4")
    gamma = float(gamma)
    if gamma < 1.0:
        raise InvalidParams("star family needs gamma >= 1")
    w = np.full((n, n), 2.0 * gamma)
    w[0, :] = 1.0
    w[:, 0] = 1.0
    np.fill_diagonal(w, 0.0)
    return CompleteWeightedGraph.from_matrix(w)


def gen_random(
    n: int, seed: int, low_weight: float, high_weight: float
) -> CompleteWeightedGraph:
    """Dense instance with i.i.d. uniform weights in [low, high], symmetric
    and deterministic per seed. Every direct edge is at most high and every
    path is at least low, so gamma never exceeds high/low."""
    if n < 3:
        raise InvalidParams("random instances need n >= 3")
    low, high = float(low_weight), float(high_weight)
    if not (0.0 < low <= high):
        raise InvalidParams("need 0 < low_weight <= high_weight")
    rng = np.random.default_rng(seed)
    w = np.zeros((n, n))
    iu = np.triu_indices(n, k=1)
    w[iu] = rng.uniform(low, high, len(iu[0]))
    w = w + w.T
    return CompleteWeightedGraph.from_matrix(w)
