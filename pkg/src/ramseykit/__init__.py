"""Monochromatic subgraph counting and multiplicity search on two-colored K_n."""

from .coloring import (
    BLUE,
    RED,
    ColorView,
    EdgeColoring,
    SplitSpec,
    canonical_key,
    construct_split,
    mono_degree,
    split_coloring,
)
from .counting import (
    Pattern,
    count_cycles,
    count_in_view,
    count_mono,
    count_paths,
    count_stars,
    count_triangles,
    formula_split_paths,
    parse_pattern,
    total_copies_in_complete,
)
from .errors import CapabilityError, DomainError, InvalidSpecError
from .formulas import MultiplicityValue, RamseyValue, conjectured_m, m_star, r_cycle, r_path
from .regularity import (
    BoundReport,
    DichotomyVerdict,
    ExtremalVerdict,
    PairAnnotation,
    ReducedGraph,
    RegularityResult,
    SampleVerdict,
    VertexPartition,
    build_reduced,
    dense_bipartite_bound,
    degree_deviation_check,
    dichotomy_classify,
    dirac_check,
    endpoint_path_bound,
    eps_regular_exact,
    eps_regular_sample,
    extremal_detect,
    pair_density,
    rooted_path_bound,
    verify_count_bounds,
)
from .search import (
    MinimizationResult,
    SearchConfig,
    SearchRamseyResult,
    ThresholdMultiplicity,
    anneal_min,
    canonical_graph_reps,
    exhaustive_min,
    ramsey_via_search,
    threshold_multiplicity,
)
from .structure import (
    DisjointPathCert,
    SimpleGraph,
    disjoint_short_paths,
    erdos_gallai_max_edges,
    konig_edge_bound_check,
    max_matching,
    verify_erdos_gallai,
    well_connected_check,
)

__version__ = "0.1.0"

__all__ = [
    "BLUE",
    "RED",
    "BoundReport",
    "CapabilityError",
    "ColorView",
    "DichotomyVerdict",
    "DisjointPathCert",
    "DomainError",
    "EdgeColoring",
    "ExtremalVerdict",
    "InvalidSpecError",
    "MinimizationResult",
    "MultiplicityValue",
    "PairAnnotation",
    "Pattern",
    "RamseyValue",
    "ReducedGraph",
    "RegularityResult",
    "SampleVerdict",
    "SearchConfig",
    "SearchRamseyResult",
    "SimpleGraph",
    "SplitSpec",
    "ThresholdMultiplicity",
    "VertexPartition",
    "anneal_min",
    "build_reduced",
    "canonical_graph_reps",
    "canonical_key",
    "conjectured_m",
    "construct_split",
    "count_cycles",
    "count_in_view",
    "count_mono",
    "count_paths",
    "count_stars",
    "count_triangles",
    "dense_bipartite_bound",
    "degree_deviation_check",
    "dichotomy_classify",
    "dirac_check",
    "disjoint_short_paths",
    "endpoint_path_bound",
    "eps_regular_exact",
    "eps_regular_sample",
    "erdos_gallai_max_edges",
    "exhaustive_min",
    "extremal_detect",
    "formula_split_paths",
    "konig_edge_bound_check",
    "m_star",
    "max_matching",
    "mono_degree",
    "pair_density",
    "parse_pattern",
    "r_cycle",
    "r_path",
    "ramsey_via_search",
    "rooted_path_bound",
    "split_coloring",
    "threshold_multiplicity",
    "total_copies_in_complete",
    "verify_count_bounds",
    "verify_erdos_gallai",
    "well_connected_check",
]
