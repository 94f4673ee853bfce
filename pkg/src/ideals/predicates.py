"""
Radical, prime, primary and maximal ideals of P(X).

In a Boolean ring y^n = y, so every ideal is its own radical, primary ideals
are prime and prime ideals are maximal. The maximal ideals of a finite P(X)
are the m_x = P(X - {x}), so each predicate reduces to a popcount on the
principal generator. The definitional oracles in `oracle` cross-check this.
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

from src.config import config
from src.error_handling.decorators import log_execution
from src.error_handling.exceptions import (
    HypothesisFailedException,
    ImproperIdealException,
    VerificationFailedException,
    ZeroRingException,
)
from src.error_handling.validators import validate_bound
from src.powerset.core import GroundSet, RingElem, add, atoms, complement, elements, mul
from .ideal import Ideal, principal_ideal
from .oracle import definitional_radical, element_set, ideal_closure_filter

logger = logging.getLogger("boolring.ideals")


def _require_nonzero_ring(g: GroundSet, operation: str) -> None:
    if g.size == 0:
        raise ZeroRingException(operation)


def radical(ideal: Ideal) -> Ideal:
    """sqrt(I) = I, confirmed against the definition on small grounds."""
    if ideal.ground.size <= min(config.ORACLE_MAX, config.ORACLE_HARD_CAP):
        if definitional_radical(ideal) != element_set(ideal):
            raise VerificationFailedException(
                f"Radical of {ideal} differs from the ideal", check="radical_identity"
            )
    return ideal


def is_proper(ideal: Ideal) -> bool:
    return not ideal.principal_gen.is_one()


def is_maximal(ideal: Ideal) -> bool:
    """True iff the principal generator misses exactly one point."""
    _require_nonzero_ring(ideal.ground, "is_maximal")
    return complement(ideal.principal_gen).cardinality() == 1


def is_prime(ideal: Ideal) -> bool:
    _require_nonzero_ring(ideal.ground, "is_prime")
    return is_proper(ideal) and is_maximal(ideal)


def is_primary(ideal: Ideal) -> bool:
    _require_nonzero_ring(ideal.ground, "is_primary")
    return is_prime(ideal)


@log_execution()
def enumerate_ideals(g: GroundSet, bound: Optional[int] = None) -> List[Ideal]:
    """
    All 2^|X| ideals of P(X), one per subset A, as (A).

    Ordered by the generator's bit-vector. On grounds small enough for the
    subset filter the list is checked against a brute-force search over all
    subsets of P(X).
    """
    limit = config.ORACLE_MAX if bound is None else bound
    validate_bound("enumerate_ideals", g.size, min(limit, config.ORACLE_HARD_CAP))
    ideals = [principal_ideal(a) for a in elements(g)]

    if g.size <= config.SUBSET_FILTER_MAX:
        expected = ideal_closure_filter(g)
        actual = sorted(
            (element_set(i, g.size) for i in ideals),
            key=lambda members: (max(members), sorted(members)),
        )
        if actual != expected:
            raise VerificationFailedException(
                "Ideal enumeration disagrees with the subset filter", check="enumerate_ideals"
            )
    return ideals


def maximal_ideal_at(g: GroundSet, position: int) -> Ideal:
    """m_x for the point at the given position: the ideal of X - {x}."""
    return principal_ideal(complement(atoms(g)[position]))


def containing_maximal(ideal: Ideal) -> Tuple[str, Ideal]:
    """
    A point x and the maximal ideal m_x ⊇ I.

    Uses the first point outside the principal generator.
    """
    g = ideal.ground
    _require_nonzero_ring(g, "containing_maximal")
    if not is_proper(ideal):
        raise ImproperIdealException("containing_maximal")
    for position, label in enumerate(g.labels):
        if not ideal.principal_gen.bits >> position & 1:
            return label, maximal_ideal_at(g, position)
    raise VerificationFailedException("Proper ideal with full generator", check="containing_maximal")


@dataclass(frozen=True)
class CoveringCombination:
    """Terms {x}·A_x with A_x ∈ I and x ∈ A_x, summing to total."""

    terms: Tuple[Tuple[str, RingElem], ...]
    total: RingElem


def covering_combination(ideal: Ideal) -> CoveringCombination:
    """
    For an ideal contained in no m_x, pick A_x ∈ I containing x for every x
    and show that sum({x}·A_x) = X, so I is the unit ideal.
    """
    g = ideal.ground
    _require_nonzero_ring(g, "covering_combination")
    terms = []
    total = g.zero()
    for singleton, label in zip(atoms(g), g.labels):
        a_x = ideal.principal_gen
        if not mul(singleton, a_x) == singleton:
            raise HypothesisFailedException(f"{ideal} is contained in m_{label}")
        terms.append((label, a_x))
        total = add(total, mul(singleton, a_x))
    if not total.is_one():
        raise VerificationFailedException("Covering sum is not X", check="covering_combination")
    return CoveringCombination(tuple(terms), total)
