"""Construction-sequence costs of graphs.

A construction sequence lists the vertices and edges of a graph so that every
edge comes after both of its endpoints.  Its cost is the total delay of the
edges behind their endpoints.  This package evaluates and classifies such
sequences, computes maximum and minimum costs by closed form and by exact
search, and enumerates sequences exhaustively for small graphs.
"""

from .errors import CapExceeded, GraphError, IsomorphismError, SequenceError
from .formulas import (
    CostFormulaResult,
    StarSplit,
    complete_graph_layer_cost,
    easy_count,
    max_cost_any,
    max_cost_degrees,
    max_cost_disjoint_union,
    max_cost_family,
    max_cost_regular,
    min_cost_family,
    star_split,
    tree_max_bounds,
)
from .graph import (
    Element,
    Family,
    FamilySpec,
    Graph,
    build_graph,
    component_count,
    degree_sequence,
    disjoint_union,
    edge,
    enumerate_trees,
    generate,
    graph_power,
    random_graph,
    relabel,
    vertex,
)
from .oracle import EnumerationReport, brute_extremes, construction_number, enumerate_csequences
from .sequence import (
    ConstructionSequence,
    CostBreakdown,
    cost,
    cost_by_position_identity,
    edge_cost,
    is_easy,
    is_greedy,
    is_nearly_connected,
    map_sequence,
    prefix_subgraph,
    total_cost,
    validate,
)
from .solver import SearchResult, greedy_cost, min_cost, min_cost_branch_bound, min_cost_exact

__version__ = "0.1.0"

__all__ = [
    "CapExceeded",
    "ConstructionSequence",
    "CostBreakdown",
    "CostFormulaResult",
    "Element",
    "EnumerationReport",
    "Family",
    "FamilySpec",
    "Graph",
    "GraphError",
    "IsomorphismError",
    "SearchResult",
    "SequenceError",
    "StarSplit",
    "brute_extremes",
    "build_graph",
    "complete_graph_layer_cost",
    "component_count",
    "construction_number",
    "cost",
    "cost_by_position_identity",
    "degree_sequence",
    "disjoint_union",
    "easy_count",
    "edge",
    "edge_cost",
    "enumerate_csequences",
    "enumerate_trees",
    "generate",
    "graph_power",
    "greedy_cost",
    "is_easy",
    "is_greedy",
    "is_nearly_connected",
    "map_sequence",
    "max_cost_any",
    "max_cost_degrees",
    "max_cost_disjoint_union",
    "max_cost_family",
    "max_cost_regular",
    "min_cost",
    "min_cost_branch_bound",
    "min_cost_exact",
    "min_cost_family",
    "prefix_subgraph",
    "random_graph",
    "relabel",
    "star_split",
    "total_cost",
    "tree_max_bounds",
    "validate",
    "vertex",
]
