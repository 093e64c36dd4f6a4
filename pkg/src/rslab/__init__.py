"""Rainbow path saturation toolkit."""

from .construct import (
    assemble_theorem_graph,
    build_G_star,
    build_H,
    build_H_star,
    build_rainbow_K,
)
from .graphcore import (
    EdgeColoredGraph,
    PathWitness,
    disjoint_union,
    from_edge_list,
    is_proper_coloring,
    parse_ecg,
    write_ecg,
)
from .rainbow import (
    contains_rainbow_path,
    enumerate_rainbow_paths_from,
    find_rainbow_path,
    naive_contains_rainbow_path,
)
from .saturation import (
    ALL_BLOCKED,
    Defect,
    blocked_pendant_colors,
    blocked_table,
    is_rainbow_free,
    is_saturated,
    saturation_defects,
)
from .search import (
    SearchBudget,
    SearchOutcome,
    bound_new,
    bound_old,
    bounds_table,
    min_saturated_size,
    verify_lower_bound,
)

__version__ = "0.1.0"
