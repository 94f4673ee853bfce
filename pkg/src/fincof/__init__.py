"""Finite-cofinite Boolean algebra over the natural numbers."""

from .algebra import (
    Kind,
    FinCofElem,
    finite,
    cofinite,
    fc_zero,
    fc_one,
    fc_add,
    fc_mul,
    fc_complement,
    fc_leq,
    fc_member_point,
    fc_in_fin,
    fc_in_mx,
    least_fresh_point,
    witness_nonzero,
    fin_escape_witness,
    random_element,
    probe_window,
)

__all__ = [
    "Kind",
    "FinCofElem",
    "finite",
    "cofinite",
    "fc_zero",
    "fc_one",
    "fc_add",
    "fc_mul",
    "fc_complement",
    "fc_leq",
    "fc_member_point",
    "fc_in_fin",
    "fc_in_mx",
    "least_fresh_point",
    "witness_nonzero",
    "fin_escape_witness",
    "random_element",
    "probe_window",
]
