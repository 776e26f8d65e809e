"""
Checks of the exact statements about where the Kruskal-Katona bound is
attained (Bollobas' theorem and its extension), the deleted-star count, and
the identities behind the T(n, n - 2) gaps.

A verifier rejects bad arguments with PreconditionError. A mathematical
mismatch is not an exception: it comes back as a report with
``passed = False`` and every number that went into the decision.
"""
from dataclasses import dataclass, field
from typing import Any, Dict, NamedTuple, Optional

from kkclique.binomial import BinomTerm, CanonicalRep, binom, canonical_rep, kk_bound
from kkclique.extremal.formulas import theorem4_count, turan_k3_count, turan_k4_count, turan_k5_count
from kkclique.graph import apex_construction, clique_profile, complete_minus_star
from kkclique.util.config import get_settings
from kkclique.util.exceptions import KKCliqueError, PreconditionError
from kkclique.util.log import get_logger

logger = get_logger(__name__)


@dataclass
class VerificationReport:
    """
    Outcome of one verifier call.

    Attributes:
        name: str
            Short name of the check (``t2``, ``t3``, ``plateau``, ...)
        parameters: dict
            The arguments the check was run with
        values: dict
            Every quantity computed along the way, big integers included
        passed: bool
        message: str
            One line explaining the outcome
    """
    name: str
    parameters: Dict[str, Any]
    values: Dict[str, Any] = field(default_factory=dict)
    passed: bool = False
    message: str = ""

    def to_dict(self) -> Dict[str, Any]:
        return {
            "check": self.name,
            "parameters": dict(self.parameters),
            "values": dict(self.values),
            "passed": self.passed,
            "message": self.message,
        }


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise PreconditionError(message)


def _finish(report: VerificationReport, passed: bool, ok: str, failed: str) -> VerificationReport:
    report.passed = passed
    report.message = ok if passed else failed
    if not passed:
        logger.warning("%s failed for %s: %s", report.name, report.parameters, report.values)
    return report


def verify_bollobas(n: int, m: int, r: int, s: int) -> VerificationReport:
    """
    Bollobas' theorem on K_n plus one vertex joined to m vertices: k_r is
    C(n,r) + C(m,r-1) and k_s = C(n,s) + C(m,s-1) reaches the bound [k_r]^r_s.
    """
    _require(2 <= r < s < n, f"need 2 <= r < s < n, got r={r}, s={s}, n={n}")
    _require(r - 1 <= m < n, f"need r - 1 <= m < n, got m={m}")
    report = VerificationReport("t2", {"n": n, "m": m, "r": r, "s": s})
    profile = clique_profile(apex_construction(n, [m]), s)
    x = binom(n, r) + binom(m, r - 1)
    expected_s = binom(n, s) + binom(m, s - 1)
    bound = kk_bound(x, r, s)
    report.values.update({
        "x": x, "k_r": profile[r], "k_s": profile[s],
        "expected_k_s": expected_s, "bound": bound,
        "canonical": str(canonical_rep(x, r)),
    })
    passed = profile[r] == x and profile[s] == expected_s == bound
    return _finish(report, passed,
                   f"k_{s} = {expected_s} reaches the bound for x = {x}",
                   f"counted k_{r} = {profile[r]}, k_{s} = {profile[s]}; expected {x}, {expected_s}, bound {bound}")


def find_t(w: int, r: int, cap: Optional[int] = None) -> Optional[int]:
    """
    Smallest t >= r - 2 with C(t, r - 2) = C(w, r - 1), scanning up to cap
    (default ``t_scan_factor * w``). None when there is no such t.
    """
    target = binom(w, r - 1)
    if cap is None:
        cap = get_settings().t_scan_factor * w
    for t in range(r - 2, max(cap, r - 2) + 1):
        value = binom(t, r - 2)
        if value == target:
            return t
        if value > target:
            return None
    return None


def find_w(t: int, r: int, upper: int) -> Optional[int]:
    """Smallest w in 0..upper with C(w, r - 1) = C(t, r - 2), or None."""
    target = binom(t, r - 2)
    for w in range(upper + 1):
        value = binom(w, r - 1)
        if value == target:
            return w
        if value > target:
            return None
    return None


def _three_term_rep(n: int, m: int, t: int, r: int) -> CanonicalRep:
    terms = [BinomTerm(n, r), BinomTerm(m, r - 1)]
    if t >= r - 2 >= 1:
        terms.append(BinomTerm(t, r - 2))
    return CanonicalRep(r, tuple(terms))


def verify_theorem3(n: int, m: int, w: int, r: int, s: int) -> VerificationReport:
    """
    Extension of Bollobas' theorem: K_n plus a vertex A joined to m vertices
    and a vertex B joined to w vertices has x = C(n,r) + C(m,r-1) + C(w,r-1)
    K_r subgraphs and C(n,s) + C(m,s-1) = [x]^r_s K_s subgraphs, provided
    C(t, r-2) = C(w, r-1) with s - 2 > t and s - 1 > w.
    """
    _require(3 <= r < s, f"need 3 <= r < s, got r={r}, s={s}")
    _require(r - 1 <= m < n, f"need r - 1 <= m < n, got m={m}, n={n}")
    _require(0 <= w <= m, f"need 0 <= w <= m, got w={w}")
    t = find_t(w, r)
    if t is None:
        raise PreconditionError(f"no t with C(t,{r - 2}) = C({w},{r - 1}) = {binom(w, r - 1)}")
    _require(s - 2 > t, f"need s - 2 > t, got s={s}, t={t}")
    _require(s - 1 > w, f"need s - 1 > w, got s={s}, w={w}")
    x = binom(n, r) + binom(m, r - 1) + binom(w, r - 1)
    rep = canonical_rep(x, r)
    if rep != _three_term_rep(n, m, t, r):
        raise PreconditionError(
            f"C({n},{r})+C({m},{r - 1})+C({t},{r - 2}) is not the {r}-canonical form of {x} (that is {rep})")

    report = VerificationReport("t3", {"n": n, "m": m, "w": w, "r": r, "s": s})
    profile = clique_profile(apex_construction(n, [m, w]), s)
    expected_s = binom(n, s) + binom(m, s - 1)
    bound = kk_bound(x, r, s)
    report.values.update({
        "t": t, "x": x, "canonical": str(rep), "k_r": profile[r], "k_s": profile[s],
        "expected_k_s": expected_s, "bound": bound,
    })
    passed = profile[r] == x and profile[s] == expected_s == bound
    return _finish(report, passed,
                   f"k_{s}(k_{r} <= {x}) = {bound}, attained by the apex graph",
                   f"counted k_{r} = {profile[r]}, k_{s} = {profile[s]}; expected {x}, {expected_s}, bound {bound}")


class Corollary1Params(NamedTuple):
    r: int
    t: int
    w: int


def corollary1_params(u: int, s: int) -> Corollary1Params:
    """
    For u > 1 and s >= 2u + 2 the choice r = u + 1, t = w = 2u - 1 satisfies
    the hypotheses of the extension, since C(2u-1, u-1) = C(2u-1, u).
    """
    _require(u > 1, f"need u > 1, got {u}")
    _require(s >= 2 * u + 2, f"need s >= 2u + 2 = {2 * u + 2}, got {s}")
    r, t = u + 1, 2 * u - 1
    if binom(t, r - 2) != binom(t, r - 1):
        raise KKCliqueError(f"C({t},{r - 2}) != C({t},{r - 1})")
    return Corollary1Params(r, t, t)


def minimal_admissible(u: int, s: int) -> tuple:
    """Smallest (n, m) with n > m > s - 1 for the pattern of corollary1_params."""
    corollary1_params(u, s)
    return s + 1, s


def plateau_check(n: int, m: int, t: int, r: int, s: int) -> VerificationReport:
    """
    The bound is constant, and attained, for every y between
    C(n,r) + C(m,r-1) and x = C(n,r) + C(m,r-1) + C(t,r-2): a run of
    C(t,r-2) + 1 consecutive budgets.
    """
    _require(3 <= r < s, f"need 3 <= r < s, got r={r}, s={s}")
    _require(r - 1 <= m < n, f"need r - 1 <= m < n, got m={m}, n={n}")
    _require(0 <= t < m, f"need 0 <= t < m, got t={t}")
    _require(s - 2 > t, f"need s - 2 > t, got s={s}, t={t}")
    w = find_w(t, r, m)
    if w is None:
        raise PreconditionError(f"no w <= {m} with C(w,{r - 1}) = C({t},{r - 2}) = {binom(t, r - 2)}")
    _require(s - 1 > w, f"need s - 1 > w, got s={s}, w={w}")
    low = binom(n, r) + binom(m, r - 1)
    x = low + binom(t, r - 2)
    if canonical_rep(x, r) != _three_term_rep(n, m, t, r):
        raise PreconditionError(f"C({n},{r})+C({m},{r - 1})+C({t},{r - 2}) is not canonical")

    report = VerificationReport("plateau", {"n": n, "m": m, "t": t, "r": r, "s": s})
    target = binom(n, s) + binom(m, s - 1)
    off_plateau = [y for y in range(low, x + 1) if kk_bound(y, r, s) != target]
    top = clique_profile(apex_construction(n, [m, w]), s)
    bottom = clique_profile(apex_construction(n, [m]), s)
    length = x - low + 1
    report.values.update({
        "w": w, "start": low, "end": x, "length": length, "expected_length": binom(t, r - 2) + 1,
        "bound": target, "k_s_at_start": bottom[s], "k_s_at_end": top[s],
        "off_plateau": off_plateau[:10],
    })
    passed = (not off_plateau and length == binom(t, r - 2) + 1
              and bottom[r] == low and bottom[s] == target
              and top[r] == x and top[s] == target)
    return _finish(report, passed,
                   f"bound {target} is constant and attained on {length} consecutive budgets {low}..{x}",
                   f"plateau broken: off-plateau budgets {off_plateau[:10]}, witnesses {bottom[s]}, {top[s]}")


def corollary2_sequence(u: int, s: int, n: Optional[int] = None, m: Optional[int] = None) -> range:
    """
    The run of consecutive budgets y on which [y]^r_s is constant and
    attained, for r = u + 1, of length C(2u - 1, r - 2) + 1.
    """
    r, t, _ = corollary1_params(u, s)
    if n is None or m is None:
        n, m = minimal_admissible(u, s)
    report = plateau_check(n, m, t, r, s)
    if not report.passed:
        raise KKCliqueError(report.message)
    return range(report.values["start"], report.values["end"] + 1)


def verify_theorem4(n: int, p: int, s: int) -> VerificationReport:
    """
    K_{n+1} with p edges at one vertex removed is K_n plus a vertex joined to
    n - p of its vertices, so it has C(n,s) + C(n-p,s-1) K_s subgraphs.
    """
    _require(n >= 1 and 0 <= p < n, f"need 0 <= p < n, got n={n}, p={p}")
    _require(1 <= s <= n + 1, f"need 1 <= s <= n + 1, got s={s}")
    report = VerificationReport("t4", {"n": n, "p": p, "s": s})
    counted = clique_profile(complete_minus_star(n + 1, p), s)[s]
    expected = theorem4_count(n, p, s)
    report.values.update({"graph": f"K_{n + 1} minus {p} edges at vertex {n + 1}",
                          "k_s": counted, "expected": expected})
    return _finish(report, counted == expected,
                   f"k_{s} = C({n},{s}) + C({n - p},{s - 1}) = {expected}",
                   f"counted {counted}, formula {expected}")


def verify_identity_t5(n: int) -> VerificationReport:
    """
    C(n,4) - 2C(n-2,2) + 1 = C(n-1,4) + C(n-4,3) + C(n-5,2) - 1 for n > 6,
    i.e. T(n, n-2) has exactly one K_4 fewer than the bound from its K_3 count.
    """
    _require(n > 6, f"need n > 6, got {n}")
    report = VerificationReport("t5", {"n": n})
    lhs = turan_k4_count(n)
    rhs = binom(n - 1, 4) + binom(n - 4, 3) + binom(n - 5, 2) - 1
    bound = kk_bound(turan_k3_count(n), 3, 4)
    report.values.update({"lhs": lhs, "rhs": rhs, "bound": bound})
    return _finish(report, lhs == rhs and bound - 1 == lhs,
                   f"{lhs} = {bound} - 1",
                   f"lhs {lhs}, rhs {rhs}, bound {bound}")


def verify_identity_t6(n: int) -> VerificationReport:
    """
    C(n,5) - 2C(n-2,3) + (2n-9) = C(n-1,5) + C(n-4,4) + C(n-5,3) for n > 6,
    i.e. T(n, n-2) is exactly n - 5 K_5 subgraphs below the bound.
    """
    _require(n > 6, f"need n > 6, got {n}")
    report = VerificationReport("t6", {"n": n})
    lhs = binom(n, 5) - 2 * binom(n - 2, 3) + (2 * n - 9)
    rhs = binom(n - 1, 5) + binom(n - 4, 4) + binom(n - 5, 3)
    bound = kk_bound(turan_k3_count(n), 3, 5)
    actual = turan_k5_count(n)
    report.values.update({"lhs": lhs, "rhs": rhs, "bound": bound, "k5": actual, "gap": bound - actual})
    return _finish(report, lhs == rhs and bound - actual == n - 5,
                   f"{actual} + {n - 5} = {bound}",
                   f"lhs {lhs}, rhs {rhs}, gap {bound - actual}")


def verify_canonical_x(n: int) -> VerificationReport:
    """[C(n,3) - 2(n-2)]^3 = C(n-1,3) + C(n-4,2) + C(n-5,1) for n > 6."""
    _require(n > 6, f"need n > 6, got {n}")
    report = VerificationReport("canon-x", {"n": n})
    x = turan_k3_count(n)
    rep = canonical_rep(x, 3)
    report.values.update({"x": x, "canonical": str(rep)})
    return _finish(report, rep.tops == (n - 1, n - 4, n - 5),
                   f"{x} = {rep}",
                   f"{x} = {rep}, expected tops {(n - 1, n - 4, n - 5)}")
