from kkclique.graph.cliques import (
    clique_profile,
    cliques_through_edge,
    count_cliques,
    degeneracy_order,
)
from kkclique.graph.core import core_bound, core_numbers, k_core, prune_then_count
from kkclique.graph.families import (
    apex_construction,
    complete_graph,
    complete_minus_star,
    complete_minus_two_disjoint_edges,
    empty_graph,
    path_graph,
    random_graph,
    turan_graph,
)
from kkclique.graph.graph import CliqueProfile, Graph

__all__ = [
    "CliqueProfile",
    "Graph",
    "apex_construction",
    "clique_profile",
    "cliques_through_edge",
    "complete_graph",
    "complete_minus_star",
    "complete_minus_two_disjoint_edges",
    "core_bound",
    "core_numbers",
    "count_cliques",
    "degeneracy_order",
    "empty_graph",
    "k_core",
    "path_graph",
    "prune_then_count",
    "random_graph",
    "turan_graph",
]
