"""
Gap tables for T(n, n - 2): its K_3 count x, its K_s count, the bound
[x]^3_s and the difference.
"""
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import pandas as pd

from kkclique.binomial import kk_bound
from kkclique.extremal.formulas import TURAN_COUNTS, turan_k3_count
from kkclique.graph import clique_profile, turan_graph
from kkclique.util.exceptions import KKCliqueError, PreconditionError
from kkclique.util.log import get_logger

logger = get_logger(__name__)

SUPPORTED_PAIRS = ((3, 4), (3, 5))


@dataclass(frozen=True)
class GapRow:
    """
    One row of a gap table.

    Attributes:
        n: int
        x: int
            k_3 of T(n, n - 2)
        actual: int
            k_s of T(n, n - 2)
        bound: int
            [x]^3_s
        gap: int
            bound - actual
    """
    n: int
    x: int
    actual: int
    bound: int
    gap: int


@dataclass
class GapReport:
    """
    Gap rows with the expected gap pattern checked: constant 1 for (3, 4)
    and n - 5 for (3, 5).
    """
    pair: Tuple[int, int]
    rows: List[GapRow]
    deviations: List[int] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.deviations


def expected_gap(pair: Tuple[int, int], n: int) -> int:
    if pair == (3, 4):
        return 1
    if pair == (3, 5):
        return n - 5
    raise PreconditionError(f"unsupported pair {pair}; use one of {SUPPORTED_PAIRS}")


def _row(n: int, s: int, cross_check: bool) -> GapRow:
    x = turan_k3_count(n)
    actual = TURAN_COUNTS[s](n)
    if cross_check:
        profile = clique_profile(turan_graph(n, n - 2), s)
        if (profile[3], profile[s]) != (x, actual):
            raise KKCliqueError(
                f"T({n},{n - 2}) counts ({profile[3]}, {profile[s]}) disagree with the formulas ({x}, {actual})")
    bound = kk_bound(x, 3, s)
    gap = bound - actual
    if gap < 0:
        raise KKCliqueError(f"negative gap {gap} at n = {n}: the Kruskal-Katona bound is violated")
    return GapRow(n, x, actual, bound, gap)


def gap_table(pair: Tuple[int, int], n_min: int, n_max: int, cross_check: bool = True,
              workers: Optional[int] = None) -> List[GapRow]:
    """
    Rows for n_min..n_max in ascending n.

    Args:
        pair: (3, 4) or (3, 5)
        n_min, n_max: int
            6 <= n_min <= n_max
        cross_check: bool
            Also count the cliques of T(n, n - 2) and compare with the formulas
        workers: int
            Threads to fan rows out over; row order never depends on it
    """
    if pair not in SUPPORTED_PAIRS:
        raise PreconditionError(f"unsupported pair {pair}; use one of {SUPPORTED_PAIRS}")
    if not 6 <= n_min <= n_max:
        raise PreconditionError(f"need 6 <= n_min <= n_max, got {n_min}, {n_max}")
    s = pair[1]
    ns = range(n_min, n_max + 1)
    if workers and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(lambda n: _row(n, s, cross_check), ns))
    return [_row(n, s, cross_check) for n in ns]


def table_section3(n_min: int, n_max: int, cross_check: bool = True) -> List[GapRow]:
    """K_3 count, K_5 count and [x]^3_5 for T(n, n - 2), n_min <= n <= n_max."""
    return gap_table((3, 5), n_min, n_max, cross_check=cross_check)


def gap_report(pair: Tuple[int, int], n_min: int, n_max: int) -> GapReport:
    """
    Check the gap pattern over n_min..n_max (n_min > 6) from the closed
    forms; every n whose gap differs from the expected one is listed in
    ``deviations``.
    """
    if pair not in SUPPORTED_PAIRS:
        raise PreconditionError(f"unsupported pair {pair}; use one of {SUPPORTED_PAIRS}")
    if n_min <= 6:
        raise PreconditionError(f"gap_report needs n_min > 6, got {n_min}")
    rows = gap_table(pair, n_min, n_max, cross_check=False)
    deviations = [row.n for row in rows if row.gap != expected_gap(pair, row.n)]
    if deviations:
        logger.warning("gap pattern for %s broken at n = %s", pair, deviations)
    return GapReport(pair, rows, deviations)


def rows_to_frame(rows: List[GapRow], pair: Tuple[int, int] = (3, 5)) -> pd.DataFrame:
    """
    Gap rows as a DataFrame with the columns n, K3, K4 or K5, bound, gap.

    Columns hold Python ints (object dtype) so large counts are written in
    full by ``to_csv``.
    """
    actual_col = f"K{pair[1]}"
    data = {
        "n": [row.n for row in rows],
        "K3": [row.x for row in rows],
        actual_col: [row.actual for row in rows],
        "bound": [row.bound for row in rows],
        "gap": [row.gap for row in rows],
    }
    return pd.DataFrame({k: pd.Series(v, dtype=object) for k, v in data.items()},
                        columns=["n", "K3", actual_col, "bound", "gap"])
