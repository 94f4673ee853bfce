"""Ideal engine for power-set rings."""

from .ideal import (
    Ideal,
    ReductionWitness,
    MembershipCertificate,
    reduce_pair,
    ideal_from_generators,
    principal_ideal,
    zero_ideal,
    unit_ideal,
    member,
    ideal_leq,
    ideal_sum,
    ideal_intersect,
    ideal_product,
    intersect_all,
    reduction_witness,
    membership_certificate,
    describe,
)
from .oracle import (
    element_set,
    principal_closure,
    definitional_radical,
    prime_counterexample,
    primary_counterexample,
    oracle_is_prime,
    oracle_is_primary,
    oracle_is_maximal,
    intermediate_ideal,
    is_ideal_set,
    ideal_closure_filter,
)
from .predicates import (
    CoveringCombination,
    radical,
    is_proper,
    is_maximal,
    is_prime,
    is_primary,
    enumerate_ideals,
    maximal_ideal_at,
    containing_maximal,
    covering_combination,
)

__all__ = [
    "Ideal",
    "ReductionWitness",
    "MembershipCertificate",
    "CoveringCombination",
    "reduce_pair",
    "ideal_from_generators",
    "principal_ideal",
    "zero_ideal",
    "unit_ideal",
    "member",
    "ideal_leq",
    "ideal_sum",
    "ideal_intersect",
    "ideal_product",
    "intersect_all",
    "reduction_witness",
    "membership_certificate",
    "describe",
    "element_set",
    "principal_closure",
    "definitional_radical",
    "prime_counterexample",
    "primary_counterexample",
    "oracle_is_prime",
    "oracle_is_primary",
    "oracle_is_maximal",
    "intermediate_ideal",
    "is_ideal_set",
    "ideal_closure_filter",
    "radical",
    "is_proper",
    "is_maximal",
    "is_prime",
    "is_primary",
    "enumerate_ideals",
    "maximal_ideal_at",
    "containing_maximal",
    "covering_combination",
]
