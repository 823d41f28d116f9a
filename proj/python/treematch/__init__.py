"""Spanning trees containing perfect matchings.

Errors raise ``TreematchError`` with ``args == (code, message)``.
"""

from ._core import (
    Graph,
    TreematchError,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    deficiency,
    extract_assignment,
    greedy_augment,
    hypercube_graph,
    is_strongly_balanced,
    maximum_matching,
    min_pmst_two_valued,
    min_sbst_bipartite,
    oracle,
    path_graph,
    pmst_feasible,
    random_graph,
    reduce_hc_to_minpmst,
    reduce_sat_to_sbst,
    replace_leaves,
)

__all__ = [
    "Graph",
    "TreematchError",
    "complete_bipartite_graph",
    "complete_graph",
    "cycle_graph",
    "deficiency",
    "extract_assignment",
    "greedy_augment",
    "hypercube_graph",
    "is_strongly_balanced",
    "maximum_matching",
    "min_pmst_two_valued",
    "min_sbst_bipartite",
    "oracle",
    "path_graph",
    "pmst_feasible",
    "random_graph",
    "reduce_hc_to_minpmst",
    "reduce_sat_to_sbst",
    "replace_leaves",
]
