from kkclique.binomial.cascade import (
    BinomTerm,
    CanonicalRep,
    binom,
    canonical_rep,
    eval_rep,
    kk_bound,
    max_top,
    shift_rep,
)

__all__ = [
    "BinomTerm",
    "CanonicalRep",
    "binom",
    "canonical_rep",
    "eval_rep",
    "kk_bound",
    "max_top",
    "shift_rep",
]
