"""
Scans built on the exhaustive frontier: how close the Kruskal-Katona bound is
to the true maximum within a vertex cap, and whether T(n, n-2) looks extremal
for K_4 given its K_3 count.
"""
from dataclasses import dataclass
from typing import List, Optional

import pandas as pd

from kkclique.binomial import binom, kk_bound
from kkclique.extremal import turan_k3_count, turan_k4_count
from kkclique.search.exhaustive import best_within, exhaustive_frontier, record_from_frontier
from kkclique.search.record import ExtremalRecord
from kkclique.util.config import get_settings
from kkclique.util.exceptions import KKCliqueError, PreconditionError
from kkclique.util.log import get_logger

logger = get_logger(__name__)

REFUTED = "refuted-within-scope"
CONSISTENT = "consistent"
INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class TightnessRow:
    x: int
    bound: int
    best: int
    tight: bool


def tightness_scan(r: int, s: int, x_max: int, v_max: Optional[int] = None,
                   workers: Optional[int] = None) -> List[TightnessRow]:
    """
    For every budget x in 0..x_max compare the best k_s over graphs on at
    most v_max vertices with the bound [x]^r_s. A single exhaustive pass
    answers all budgets. v_max defaults to the configured vertex cap.
    """
    if v_max is None:
        v_max = get_settings().default_v_max
    if not r < s:
        raise PreconditionError(f"need r < s, got r={r}, s={s}")
    frontier = exhaustive_frontier(v_max, r, s, x_max, workers=workers)
    rows = []
    for x in range(x_max + 1):
        best = best_within(frontier, x)[0]
        bound = kk_bound(x, r, s)
        if best > bound:
            raise KKCliqueError(f"k_{s} = {best} with k_{r} <= {x} exceeds the bound {bound}")
        rows.append(TightnessRow(x, bound, best, best == bound))
    return rows


def tightness_frame(rows: List[TightnessRow]) -> pd.DataFrame:
    return pd.DataFrame({
        "x": pd.Series([row.x for row in rows], dtype=object),
        "bound": pd.Series([row.bound for row in rows], dtype=object),
        "best": pd.Series([row.best for row in rows], dtype=object),
        "tight": [row.tight for row in rows],
    }, columns=["x", "bound", "best", "tight"])


@dataclass(frozen=True)
class ConjectureReport:
    """
    Exhaustive evidence on k_4(k_3 <= x) for x = C(n,3) - 2(n-2).

    Attributes:
        n: int
        x: int
        bound: int
            [x]^3_4, the upper end of the bracket
        lower: int
            [x]^3_4 - 1, attained by T(n, n-2)
        record: ExtremalRecord
            Exhaustive result on at most v_max vertices
        status: str
            ``refuted-within-scope`` when some graph in scope reaches the
            bound, ``consistent`` when the best in scope is bound - 1,
            ``inconclusive`` when the scope cannot even reach T(n, n-2)
        scope_insufficient: bool
            K_{v_max} itself fits the budget, so the budget does not bind
    """
    n: int
    x: int
    bound: int
    lower: int
    record: ExtremalRecord
    status: str
    scope_insufficient: bool

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "x": self.x,
            "bracket": f"{self.lower} <= k_4(k_3 <= {self.x}) <= {self.bound}",
            "best_in_scope": self.record.best,
            "status": self.status,
            "scope_insufficient": self.scope_insufficient,
            "scope": self.record.scope.describe(),
        }


def conjecture_check(n: int, v_max: Optional[int] = None, workers: Optional[int] = None) -> ConjectureReport:
    """
    Search all graphs on at most v_max vertices for k_4(k_3 <= x) with
    x = C(n,3) - 2(n-2) and place the result in the bracket
    [x]^3_4 - 1 <= k_4(k_3 <= x) <= [x]^3_4.
    """
    if v_max is None:
        v_max = get_settings().default_v_max
    if n <= 6:
        raise PreconditionError(f"conjecture_check needs n > 6, got {n}")
    x = turan_k3_count(n)
    frontier = exhaustive_frontier(v_max, 3, 4, x, workers=workers)
    record = record_from_frontier(frontier, v_max, 3, 4, x)
    bound = record.bound
    lower = turan_k4_count(n)
    if lower != bound - 1:
        raise KKCliqueError(f"T({n},{n - 2}) has {lower} K_4, expected {bound - 1}")
    if n <= v_max and record.best < lower:
        raise KKCliqueError(f"search missed T({n},{n - 2}): best {record.best} < {lower}")
    if record.best == bound:
        status = REFUTED
    elif record.best == lower:
        status = CONSISTENT
    else:
        status = INCONCLUSIVE
    scope_insufficient = binom(v_max, 3) <= x
    if scope_insufficient:
        logger.warning("K_%d has %d <= %d triangles: the budget does not bind within scope",
                       v_max, binom(v_max, 3), x)
    return ConjectureReport(n, x, bound, lower, record, status, scope_insufficient)
