"""starcolor: star, acyclic, and bicolored-pattern-avoiding graph colorings.

Core objects: immutable :class:`~starcolor.graphs.Graph` and
:class:`~starcolor.hypergraphs.Hypergraph`, colorings and their validators,
constructive colorers with certified palette bounds, exact solvers, and
generators for test corpora. A FastAPI service (:mod:`starcolor.api`) and a
CLI (:mod:`starcolor.cli`) wrap the same operations.
"""

from .colorings import (
    BicoloredWitness,
    ClassificationResult,
    Coloring,
    HClass,
    Verdict,
    classify_f,
    classify_h,
    is_acyclic_coloring,
    is_dist2_coloring,
    is_proper,
    is_star_coloring,
)
from .colorers import (
    BoundLedger,
    NotTFreeReport,
    TFreeColoring,
    c_bound,
    color_dfs_levels,
    color_square_greedy,
    color_star_tfree,
)
from .errors import StarcolorError
from .exact import ColoringMode, all_colorings_have_bicolored, exact_chromatic
from .generators import gen_family, gen_gmn, gen_random_ffree
from .graphs import Graph, SubgraphWitness, contains_subgraph, distance, square
from .hypergraphs import (
    Hypergraph,
    SkeletonWitness,
    build_neighbor_hypergraph,
    find_skeleton_exhaustive,
    find_skeleton_greedy,
    p_bound,
    q_bound,
    rainbow_coloring,
    simplify,
)
from .trees import ForestProfile, compute_t_star, embed_in_even_tree, profile_forest, prune_leaf

__version__ = "0.1.0"

__all__ = [
    "BicoloredWitness",
    "BoundLedger",
    "ClassificationResult",
    "Coloring",
    "ColoringMode",
    "ForestProfile",
    "Graph",
    "HClass",
    "Hypergraph",
    "NotTFreeReport",
    "SkeletonWitness",
    "StarcolorError",
    "SubgraphWitness",
    "TFreeColoring",
    "Verdict",
    "all_colorings_have_bicolored",
    "build_neighbor_hypergraph",
    "c_bound",
    "classify_f",
    "classify_h",
    "color_dfs_levels",
    "color_square_greedy",
    "color_star_tfree",
    "compute_t_star",
    "contains_subgraph",
    "distance",
    "embed_in_even_tree",
    "exact_chromatic",
    "find_skeleton_exhaustive",
    "find_skeleton_greedy",
    "gen_family",
    "gen_gmn",
    "gen_random_ffree",
    "is_acyclic_coloring",
    "is_dist2_coloring",
    "is_proper",
    "is_star_coloring",
    "p_bound",
    "profile_forest",
    "prune_leaf",
    "q_bound",
    "rainbow_coloring",
    "simplify",
    "square",
]
