"""
Exact binomial coefficients, r-canonical (cascade) representations and the
Kruskal-Katona bound.

Every value here is a Python ``int``, so there is no overflow and no floating
point anywhere.
"""
from dataclasses import dataclass
from math import comb
from typing import Iterator, Tuple

from kkclique.util.exceptions import PreconditionError


def binom(n: int, k: int) -> int:
    """
    C(n, k) with the convention that a coefficient whose top is smaller than
    its bottom is 0.

    Args:
        n: int
            Top entry, n >= 0
        k: int
            Bottom entry, k >= 0
    Returns:
        int
    """
    if n < 0 or k < 0:
        raise PreconditionError(f"binom needs non-negative arguments, got ({n}, {k})")
    if n < k:
        return 0
    return comb(n, k)


@dataclass(frozen=True, order=True)
class BinomTerm:
    """One positive term C(top, bottom) of a cascade."""
    top: int
    bottom: int

    def __post_init__(self) -> None:
        if self.bottom < 1 or self.top < self.bottom:
            raise PreconditionError(f"C({self.top},{self.bottom}) is not a positive cascade term")

    @property
    def value(self) -> int:
        return comb(self.top, self.bottom)

    def __str__(self) -> str:
        return f"C({self.top},{self.bottom})"


@dataclass(frozen=True)
class CanonicalRep:
    """
    The r-canonical representation C(n,r) + C(m,r-1) + ... + C(u,r-j).

    Attributes:
        r: int
            Bottom entry of the leading term
        terms: tuple of BinomTerm
            Bottoms are r, r-1, ... consecutively and tops strictly decrease.
            The empty tuple represents 0.
    """
    r: int
    terms: Tuple[BinomTerm, ...] = ()

    def __post_init__(self) -> None:
        if self.r < 1:
            raise PreconditionError(f"r must be >= 1, got {self.r}")
        object.__setattr__(self, "terms", tuple(self.terms))
        for i, term in enumerate(self.terms):
            if term.bottom != self.r - i:
                raise PreconditionError(f"term {term} should have bottom {self.r - i}")
            if i and term.top >= self.terms[i - 1].top:
                raise PreconditionError(f"tops must strictly decrease, {self.terms[i - 1]} then {term}")

    def __iter__(self) -> Iterator[BinomTerm]:
        return iter(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    @property
    def tops(self) -> Tuple[int, ...]:
        return tuple(t.top for t in self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return "+".join(str(t) for t in self.terms)


def max_top(x: int, b: int) -> int:
    """
    Largest t with C(t, b) <= x.

    An exponential probe brackets the answer, then a binary search finds it.

    Args:
        x: int
            Target value, x >= 1
        b: int
            Bottom entry, b >= 1
    Returns:
        int
    """
    if x < 1:
        raise PreconditionError(f"max_top needs x >= 1, got {x}")
    if b < 1:
        raise PreconditionError(f"max_top needs b >= 1, got {b}")
    # C(b, b) = 1 <= x, so lo is always feasible
    lo, step = b, 1
    hi = b + step
    while comb(hi, b) <= x:
        lo = hi
        step *= 2
        hi = b + step
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if comb(mid, b) <= x:
            lo = mid
        else:
            hi = mid
    return lo


def canonical_rep(x: int, r: int) -> CanonicalRep:
    """
    Greedy cascade of x at level r.

    At each level b = r, r-1, ... take the largest top t with
    C(t, b) <= remainder and subtract, until nothing is left.

    Args:
        x: int
            Value to represent, x >= 0
        r: int
            Level of the leading term, r >= 1
    Returns:
        CanonicalRep
    """
    if r < 1:
        raise PreconditionError(f"r must be >= 1, got {r}")
    if x < 0:
        raise PreconditionError(f"x must be >= 0, got {x}")
    terms = []
    remainder, b = x, r
    while remainder > 0:
        # b == 1 takes t == remainder, so b never reaches 0 here
        t = max_top(remainder, b)
        terms.append(BinomTerm(t, b))
        remainder -= comb(t, b)
        b -= 1
    return CanonicalRep(r, tuple(terms))


def eval_rep(rep: CanonicalRep) -> int:
    """Sum of the terms of a cascade."""
    return sum(term.value for term in rep.terms)


def shift_rep(rep: CanonicalRep, s: int) -> int:
    """
    Replace the level r by s in every term: sum of C(top_i, bottom_i + s - r).

    Args:
        rep: CanonicalRep
        s: int
            New level, s > rep.r
    Returns:
        int
    """
    if s <= rep.r:
        raise PreconditionError(f"shift needs s > r, got r={rep.r}, s={s}")
    delta = s - rep.r
    return sum(binom(term.top, term.bottom + delta) for term in rep.terms)


def kk_bound(x: int, r: int, s: int) -> int:
    """
    The Kruskal-Katona bound [x]^r_s: no graph with at most x K_r subgraphs
    has more than this many K_s subgraphs.

    Args:
        x: int
            Budget of K_r subgraphs, x >= 0
        r: int
            Smaller clique size, r >= 1
        s: int
            Larger clique size, s > r
    Returns:
        int
    """
    if r < 1 or r >= s:
        raise PreconditionError(f"kk_bound needs 1 <= r < s, got r={r}, s={s}")
    return shift_rep(canonical_rep(x, r), s)
