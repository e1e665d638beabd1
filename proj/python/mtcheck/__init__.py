"""Minuscule catalogs, embedding exclusion, monodromy models and verdicts."""

from ._core import (
    catalog,
    check_invariants,
    check_pair,
    decide,
    decide_batch,
    divisibility_solutions,
    exception_pairs,
    gcd_mod4_check,
    is_exception_pair,
    minuscule_of_dim,
    quadratic_min_rank,
    rank2_constraint,
    surviving_inners,
    transvection_constraint,
)

__all__ = [
    "catalog",
    "check_invariants",
    "check_pair",
    "decide",
    "decide_batch",
    "divisibility_solutions",
    "exception_pairs",
    "gcd_mod4_check",
    "is_exception_pair",
    "minuscule_of_dim",
    "quadratic_min_rank",
    "rank2_constraint",
    "surviving_inners",
    "transvection_constraint",
]
