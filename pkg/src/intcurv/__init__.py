"""Exact Ollivier / Lin-Lu-Yau curvature on graphs and integral-curvature bounds."""

from .bounds import (
    BoundReport,
    audit,
    diameter_bound_alpha,
    diameter_bound_lly,
    key_lemma_check,
    lichnerowicz_bound,
    lichnerowicz_bound_alpha,
    local_diameter_bound,
    moore_bound,
    moore_bound_auto,
    moore_obstruction,
)
from .curvature import (
    CurvatureProfile,
    IntegralCurvature,
    curvature_profile,
    idleness_function,
    integral_curvature,
    integral_curvature_alpha,
    kappa_alpha,
    kappa_lly,
    rho,
    rho_alpha,
)
from .graph import (
    DistanceMatrix,
    Graph,
    NeighborhoodPartition,
    all_pairs_distances,
    generate,
    load_edge_list,
    load_json_graph,
    neighborhood_partition,
)
from .spectral import LaplacianSpectrum, mixing_operator_check, normalized_laplacian, spectrum
from .transport import (
    ProbabilityMeasure,
    TransportSolution,
    brute_force_dual,
    lazy_walk_measure,
    wasserstein,
)

__version__ = "0.1.0"
