from kkclique.search.analysis import (
    ConjectureReport,
    TightnessRow,
    conjecture_check,
    tightness_frame,
    tightness_scan,
)
from kkclique.search.exhaustive import (
    exhaustive_extremal,
    exhaustive_frontier,
    graph_to_mask,
    mask_to_graph,
)
from kkclique.search.heuristic import heuristic_extremal
from kkclique.search.record import ExtremalRecord, SearchScope

__all__ = [
    "ConjectureReport",
    "ExtremalRecord",
    "SearchScope",
    "TightnessRow",
    "conjecture_check",
    "exhaustive_extremal",
    "exhaustive_frontier",
    "graph_to_mask",
    "heuristic_extremal",
    "mask_to_graph",
    "tightness_frame",
    "tightness_scan",
]
