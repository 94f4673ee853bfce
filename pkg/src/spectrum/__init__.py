"""Maximal spectrum, primary decomposition and the integer demo."""

from .decomposition import (
    MaxIdealDescriptor,
    Decomposition,
    max_ideal,
    maximal_ideals,
    maximal_ideals_containing,
    assemble,
    verify_reduced,
    decompose,
    lemma11_find,
    unique_decomposition_search,
)
from .integers import (
    integer_demo,
    integer_radicals,
    divisibility_agrees,
    check_window,
    format_integer_demo,
)

__all__ = [
    "MaxIdealDescriptor",
    "Decomposition",
    "max_ideal",
    "maximal_ideals",
    "maximal_ideals_containing",
    "assemble",
    "verify_reduced",
    "decompose",
    "lemma11_find",
    "unique_decomposition_search",
    "integer_demo",
    "integer_radicals",
    "divisibility_agrees",
    "check_window",
    "format_integer_demo",
]
