"""Relaxation constants of weighted graphs and provably bounded TSP tours.

The semimetric induced by a complete weighted graph admits two relaxation
constants: beta (triangle relaxation) and gamma (chain relaxation, computed
from all-pairs shortest paths). Two approximation methods come with bounds in
terms of gamma: the MST double-tree shortcut (factor 2*gamma) and a
matching-preserving Christofides variant (factor 3*gamma/2). Exact
small-instance solvers verify every bound.
"""

from .christofides import (
    ChristofidesTrace,
    enhanced_shortcut,
    euler_multigraph,
    euler_walk_matching_first,
    min_weight_perfect_matching,
    odd_vertices,
    solve_christofides,
)
from .completion import (
    HAMILTONIAN_IN_ORIGINAL,
    INCONCLUSIVE,
    NO_HAMILTONIAN_CYCLE,
    CompletionResult,
    TourInterpretation,
    complete_graph,
    interpret_tour,
)
from .exact import (
    brute_gamma,
    canonical_tour_orders,
    exact_tsp_enumerate,
    exact_tsp_held_karp,
)
from .graphs import (
    CompleteWeightedGraph,
    EulerMultigraph,
    Matching,
    SpanningTree,
    Tour,
    Walk,
    WeightedGraph,
    tour_weight,
    validate_complete,
)
from .instances import (
    InstanceFile,
    gen_example1,
    gen_random,
    gen_star_family,
    instance_to_json,
    load_instance,
    parse_instance,
)
from .mst import minimum_spanning_tree, shortcut, solve_mst2, tree_traversal
from .relaxation import (
    Classification,
    RelaxationProfile,
    classify,
    compare_bounds,
    compute_beta,
    compute_gamma,
    relaxation_profile,
    shortest_path_matrix,
    suzuki_bound,
    suzuki_exponent,
)
from .reports import SolveReport

__version__ = "0.1.0"

__all__ = [
    "ChristofidesTrace",
    "Classification",
    "CompleteWeightedGraph",
    "CompletionResult",
    "EulerMultigraph",
    "HAMILTONIAN_IN_ORIGINAL",
    "INCONCLUSIVE",
    "InstanceFile",
    "Matching",
    "NO_HAMILTONIAN_CYCLE",
    "RelaxationProfile",
    "SolveReport",
    "SpanningTree",
    "Tour",
    "TourInterpretation",
    "Walk",
    "WeightedGraph",
    "brute_gamma",
    "canonical_tour_orders",
    "classify",
    "compare_bounds",
    "complete_graph",
    "compute_beta",
    "compute_gamma",
    "enhanced_shortcut",
    "euler_multigraph",
    "euler_walk_matching_first",
    "exact_tsp_enumerate",
    "exact_tsp_held_karp",
    "gen_example1",
    "gen_random",
    "gen_star_family",
    "instance_to_json",
    "interpret_tour",
    "load_instance",
    "min_weight_perfect_matching",
    "minimum_spanning_tree",
    "odd_vertices",
    "parse_instance",
    "relaxation_profile",
    "shortcut",
    "shortest_path_matrix",
    "solve_christofides",
    "solve_mst2",
    "suzuki_bound",
    "suzuki_exponent",
    "tour_weight",
    "tree_traversal",
    "validate_complete",
]
