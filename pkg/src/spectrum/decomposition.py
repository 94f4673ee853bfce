"""
Maximal spectrum and reduced primary decomposition in P(X).

For finite X the maximal ideals are exactly the m_x = P(X - {x}). Every
proper ideal (A) = P(A) is the intersection of the m_x containing it, one
for each point outside A, and since primary = prime = maximal in a Boolean
ring this is its unique reduced primary decomposition.
"""

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Any, Dict, List, Optional, Sequence

from src.config import config
from src.error_handling.decorators import log_execution
from src.error_handling.exceptions import (
    HypothesisFailedException,
    ImproperIdealException,
    NotPrimeException,
    UnverifiedDecompositionException,
    VerificationFailedException,
    ZeroRingException,
)
from src.error_handling.validators import validate_bound
from src.ideals.ideal import Ideal, ideal_leq, intersect_all
from src.ideals.predicates import is_prime, is_proper, maximal_ideal_at
from src.powerset.core import GroundSet

logger = logging.getLogger("boolring.spectrum")


@dataclass(frozen=True)
class MaxIdealDescriptor:
    """The maximal ideal m_x attached to the point x."""

    point: str
    ideal: Ideal

    def to_dict(self) -> Dict[str, Any]:
        return {"point": self.point, "principal": self.ideal.principal_gen.to_dict()}

    def __str__(self) -> str:
        return f"m_{self.point} = {self.ideal}"


@dataclass
class Decomposition:
    """
    target = factor_1 ∩ ... ∩ factor_n.

    `verified` records that the intersection was recomputed and matched;
    `reduced` is written by verify_reduced.
    """

    target: Ideal
    factors: List[MaxIdealDescriptor]
    reduced: bool = False
    verified: bool = False

    def factor_ideals(self) -> List[Ideal]:
        return [f.ideal for f in self.factors]

    def points(self) -> List[str]:
        return [f.point for f in self.factors]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "target": self.target.to_dict(),
            "factors": [f.to_dict() for f in self.factors],
            "reduced": self.reduced,
            "verified": self.verified,
        }

    def __str__(self) -> str:
        if not self.factors:
            return f"{self.target} = (empty intersection)"
        return f"{self.target} = " + " ∩ ".join(f"m_{p}" for p in self.points())


def _require_nonzero_ring(g: GroundSet, operation: str) -> None:
    if g.size == 0:
        raise ZeroRingException(operation)


def max_ideal(g: GroundSet, point: str) -> MaxIdealDescriptor:
    """m_x for a single labelled point."""
    return MaxIdealDescriptor(point, maximal_ideal_at(g, g.position(point)))


def maximal_ideals(g: GroundSet) -> List[MaxIdealDescriptor]:
    """One m_x per point, in label order."""
    _require_nonzero_ring(g, "maximal_ideals")
    spectrum = [MaxIdealDescriptor(label, maximal_ideal_at(g, i)) for i, label in enumerate(g.labels)]
    if len(set(d.ideal for d in spectrum)) != g.size:
        raise VerificationFailedException("Distinct points gave equal maximal ideals", check="maximal_ideals")
    return spectrum


def maximal_ideals_containing(ideal: Ideal) -> List[MaxIdealDescriptor]:
    """The m_x with I ⊆ m_x, found by testing the whole spectrum."""
    return [d for d in maximal_ideals(ideal.ground) if ideal_leq(ideal, d.ideal)]


def assemble(target: Ideal, factors: Sequence[MaxIdealDescriptor]) -> Decomposition:
    """Wrap arbitrary factors, marking verified when they intersect to target."""
    decomposition = Decomposition(target, list(factors))
    decomposition.verified = intersect_all(target.ground, decomposition.factor_ideals()) == target
    return decomposition


def verify_reduced(decomposition: Decomposition) -> bool:
    """
    Factors pairwise distinct and none of them containing the intersection of
    the others. Writes the `reduced` flag.
    """
    if not decomposition.verified:
        raise UnverifiedDecompositionException()
    ideals = decomposition.factor_ideals()
    g = decomposition.target.ground

    distinct = len(set(ideals)) == len(ideals)
    irredundant = True
    if distinct:
        for k, factor in enumerate(ideals):
            others = intersect_all(g, ideals[:k] + ideals[k + 1:])
            if ideal_leq(others, factor):
                irredundant = False
                break
    decomposition.reduced = distinct and irredundant
    return decomposition.reduced


@log_execution()
def decompose(ideal: Ideal) -> Decomposition:
    """The m_x for x outside the generator, verified and certified reduced."""
    g = ideal.ground
    _require_nonzero_ring(g, "decompose")
    if not is_proper(ideal):
        raise ImproperIdealException("decompose")

    factors = [
        MaxIdealDescriptor(label, maximal_ideal_at(g, i))
        for i, label in enumerate(g.labels)
        if not ideal.principal_gen.bits >> i & 1
    ]
    decomposition = assemble(ideal, factors)
    if not decomposition.verified:
        raise VerificationFailedException(f"Factors of {ideal} do not intersect back to it", check="decompose")
    if not verify_reduced(decomposition):
        raise VerificationFailedException(f"Decomposition of {ideal} is redundant", check="decompose")
    if len(factors) != g.size - ideal.principal_gen.cardinality():
        raise VerificationFailedException("Factor count law violated", check="decompose")
    logger.debug(f"Decomposed {ideal} into {len(factors)} factors")
    return decomposition


def lemma11_find(prime: Ideal, factors: Sequence[Ideal]) -> int:
    """
    Least k with factors[k] ⊆ P, for a prime P containing the intersection of
    the factors.
    """
    if not is_prime(prime):
        raise NotPrimeException(f"{prime} is not prime")
    meet = intersect_all(prime.ground, factors)
    if not ideal_leq(meet, prime):
        raise HypothesisFailedException(f"{prime} does not contain the intersection {meet}")
    for k, factor in enumerate(factors):
        if ideal_leq(factor, prime):
            return k
    raise VerificationFailedException(
        f"No factor lies in the prime {prime} although it contains their intersection",
        check="lemma11_find",
    )


@log_execution()
def unique_decomposition_search(ideal: Ideal, bound: Optional[int] = None) -> List[Decomposition]:
    """
    Every reduced decomposition of I into maximal ideals, by trying all
    subfamilies of the spectrum. Exactly one exists; it must equal decompose(I).
    """
    g = ideal.ground
    limit = config.ORACLE_MAX if bound is None else bound
    validate_bound("unique_decomposition_search", g.size, min(limit, config.ORACLE_HARD_CAP))
    _require_nonzero_ring(g, "unique_decomposition_search")
    if not is_proper(ideal):
        raise ImproperIdealException("unique_decomposition_search")

    spectrum = maximal_ideals(g)
    found: List[Decomposition] = []
    # primaries are maximal here, so subfamilies of the spectrum cover every candidate
    for size in range(1, len(spectrum) + 1):
        for family in combinations(spectrum, size):
            candidate = assemble(ideal, family)
            if candidate.verified and verify_reduced(candidate):
                found.append(candidate)

    canonical = decompose(ideal)
    if len(found) != 1 or found[0].points() != canonical.points():
        raise VerificationFailedException(
            f"Expected one reduced decomposition of {ideal}, found {len(found)}",
            check="unique_decomposition_search",
        )
    return found
