"""Maximum linear forests in trees, Hamiltonian completion, and decycling
numbers of line graphs, with brute-force oracles and bound verification."""

from .bounds import (
    BoundReport,
    FamilyFlags,
    SweepConfig,
    VerifyRun,
    diam_bounds_decycling,
    diam_bounds_l,
    diam_upper_l_fine,
    family_predicates,
    kary_bounds_decycling,
    kary_bounds_l,
    kary_caterpillar,
    kary_caterpillar_l,
    lower_spider,
    perfect_kary_decycling,
    perfect_kary_height,
    perfect_kary_l,
    perfect_kary_recurrence,
    reports_to_csv,
    t1_star,
    t2_star,
    t_star,
    verify_theorems,
)
from .forest import (
    Completion,
    DpRecord,
    LinearForest,
    hc_construct,
    hc_lower_bound,
    hc_of_tree,
    is_linear_forest,
    l_of_tree,
    leaf_exchange,
    max_linear_forest,
    max_linear_forest_allpairs,
    max_linear_forest_value,
)
from .generate import (
    ENUMERATION_CAP,
    enumerate_trees,
    kary_tree,
    num_labeled_trees,
    path_graph,
    perfect_kary,
    perfect_kary_size,
    prufer_decode,
    prufer_encode,
    prufer_from_rank,
    random_kary_tree,
    random_tree,
    spider,
    star_graph,
)
from .graph import (
    Graph,
    LineGraph,
    ParseError,
    RootedTree,
    TreeStats,
    format_graph,
    line_graph,
    parse_graph,
    root_at_center,
    to_dot,
    tree_center,
    tree_diameter,
    tree_stats,
)
from .oracle import (
    CapExceeded,
    OracleResult,
    decycling_number,
    hc_bf,
    is_hamiltonian,
    longest_path_bf,
    max_induced_forest,
    max_induced_tree,
    max_linear_forest_bf,
    spanning_trees,
)

__all__ = [name for name in dir() if not name.startswith("_")]
