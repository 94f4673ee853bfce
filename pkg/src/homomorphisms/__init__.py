"""Quotients, the χ-isomorphism and the generic finite Boolean ring."""

from .quotient import (
    QuotientMap,
    quotient,
    project,
    lift,
    kernel,
    to_function_table,
    from_function_table,
    evaluation_agrees,
    evaluation_kernel,
)
from .generic_ring import (
    GenericBoolRing,
    BoolVec,
    StoneMap,
    vec_add,
    vec_mul,
    vec_complement,
    vec_leq,
    is_atom,
    find_atoms,
    atom_labels,
    stone_iso,
    maximal_principal_from_atom,
    zero_is_intersection_of_maximals,
)

__all__ = [
    "QuotientMap",
    "quotient",
    "project",
    "lift",
    "kernel",
    "to_function_table",
    "from_function_table",
    "evaluation_agrees",
    "evaluation_kernel",
    "GenericBoolRing",
    "BoolVec",
    "StoneMap",
    "vec_add",
    "vec_mul",
    "vec_complement",
    "vec_leq",
    "is_atom",
    "find_atoms",
    "atom_labels",
    "stone_iso",
    "maximal_principal_from_atom",
    "zero_is_intersection_of_maximals",
]
