"""Top-level package for kkclique."""

__author__ = """satya_pati"""
__email__ = 'audreyr@example.com'
__version__ = '0.2.0'

from kkclique import binomial, extremal, graph, search
from kkclique.binomial import canonical_rep, kk_bound
from kkclique.graph import Graph, count_cliques

__all__ = [
    "Graph",
    "binomial",
    "canonical_rep",
    "count_cliques",
    "extremal",
    "graph",
    "kk_bound",
    "search",
]
