"""Result records for the extremal searches."""
from dataclasses import dataclass
from typing import Any, Dict

from kkclique.data_source_connection import format_edge_list
from kkclique.graph import Graph

EXHAUSTIVE = "exhaustive"
HEURISTIC = "heuristic"


@dataclass(frozen=True)
class SearchScope:
    """
    What a search looked at.

    Attributes:
        max_vertices: int
            Every graph considered has at most this many vertices
        mode: str
            ``exhaustive`` or ``heuristic``
    """
    max_vertices: int
    mode: str

    def describe(self) -> str:
        if self.mode == EXHAUSTIVE:
            return f"all graphs on <= {self.max_vertices} vertices"
        return f"hill climbing on {self.max_vertices} vertices"


@dataclass(frozen=True)
class ExtremalRecord:
    """
    Best K_s count found among graphs with at most x K_r subgraphs.

    Attributes:
        r, s: int
            Clique sizes, r < s
        x: int
            Budget of K_r subgraphs
        bound: int
            The Kruskal-Katona bound [x]^r_s
        best: int
            Largest k_s found, never above bound
        witness: Graph
            A graph with k_r <= x and k_s = best
        witness_k_r: int
            k_r of the witness
        scope: SearchScope
        exhaustive_within_scope: bool
            True only when every graph in scope was accounted for; the value
            is then exact relative to the vertex cap, not unconditionally
    """
    r: int
    s: int
    x: int
    bound: int
    best: int
    witness: Graph
    witness_k_r: int
    scope: SearchScope
    exhaustive_within_scope: bool

    @property
    def tight(self) -> bool:
        return self.best == self.bound

    def to_dict(self) -> Dict[str, Any]:
        return {
            "r": self.r,
            "s": self.s,
            "x": self.x,
            "bound": self.bound,
            "best": self.best,
            "tight": self.tight,
            "witness_k_r": self.witness_k_r,
            "scope": self.scope.describe(),
            "mode": self.scope.mode,
            "exhaustive_within_scope": self.exhaustive_within_scope,
            "witness": format_edge_list(self.witness),
        }
