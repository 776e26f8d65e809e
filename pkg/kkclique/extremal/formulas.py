"""
Closed-form clique counts for the families with known formulas.

T(n, n - 2) is K_n with two disjoint edges removed; its counts follow by
inclusion-exclusion over the two missing edges.
"""
from kkclique.binomial import binom
from kkclique.util.exceptions import PreconditionError


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise PreconditionError(message)


def turan_k3_count(n: int) -> int:
    """k_3(T(n, n - 2)) = C(n, 3) - 2(n - 2)."""
    _require(n >= 4, f"turan_k3_count needs n >= 4, got {n}")
    return binom(n, 3) - 2 * (n - 2)


def turan_k4_count(n: int) -> int:
    """k_4(T(n, n - 2)) = C(n, 4) - 2 C(n - 2, 2) + 1."""
    _require(n >= 4, f"turan_k4_count needs n >= 4, got {n}")
    return binom(n, 4) - 2 * binom(n - 2, 2) + 1


def turan_k5_count(n: int) -> int:
    """k_5(T(n, n - 2)) = C(n, 5) - 2 C(n - 2, 3) + (n - 4)."""
    _require(n >= 5, f"turan_k5_count needs n >= 5, got {n}")
    return binom(n, 5) - 2 * binom(n - 2, 3) + (n - 4)


TURAN_COUNTS = {3: turan_k3_count, 4: turan_k4_count, 5: turan_k5_count}


def theorem4_count(n: int, p: int, s: int) -> int:
    """
    C(n, s) + C(n - p, s - 1): the K_s count of K_n plus one vertex joined to
    n - p of its vertices, i.e. of K_{n+1} with p edges at one vertex deleted.
    """
    _require(n >= 1 and 0 <= p < n, f"theorem4_count needs 0 <= p < n, got n={n}, p={p}")
    _require(s >= 1, f"theorem4_count needs s >= 1, got {s}")
    return binom(n, s) + binom(n - p, s - 1)
