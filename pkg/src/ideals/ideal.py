"""
Finitely generated ideals of P(X) in canonical principal form.

In a Boolean ring (x, y) = (x + y + xy), so every finitely generated ideal is
principal. The generator fold below computes that single generator; for sets
it is the union of the generators, and the ideal it generates is P(union).
"""

import logging
from dataclasses import dataclass
from functools import reduce
from typing import Any, Dict, List, Mapping, Sequence, Tuple

from src.error_handling.exceptions import GroundMismatchException, VerificationFailedException
from src.powerset.core import GroundSet, RingElem, add, complement, elem, leq, mul

logger = logging.getLogger("boolring.ideals")


@dataclass(frozen=True, eq=False)
class Ideal:
    """
    An ideal (g_1, ..., g_k) of P(X).

    The original generators are kept for reporting; equality and hashing only
    look at the principal generator.
    """

    ground: GroundSet
    generators: Tuple[RingElem, ...]
    principal_gen: RingElem

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.principal_gen == other.principal_gen

    def __hash__(self) -> int:
        return hash(self.principal_gen)

    def __str__(self) -> str:
        return f"({self.principal_gen})"

    def __repr__(self) -> str:
        return f"Ideal{tuple(str(g) for g in self.generators)} = {self}"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "generators": [g.to_dict() for g in self.generators],
            "principal": self.principal_gen.to_dict(),
        }

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "Ideal":
        principal = RingElem.from_dict(data["principal"])
        gens = [elem(principal.ground, g["members"]) for g in data["generators"]]
        ideal = ideal_from_generators(principal.ground, gens)
        if ideal.principal_gen != principal:
            raise VerificationFailedException(
                "Serialized principal generator does not match its generators",
                check="ideal_from_dict",
            )
        return ideal


def reduce_pair(a: RingElem, b: RingElem) -> RingElem:
    """r(a, b) = a + b + ab, a generator of (a, b)."""
    return add(add(a, b), mul(a, b))


def ideal_from_generators(g: GroundSet, gens: Sequence[RingElem]) -> Ideal:
    """Build (gens) and reduce it to a single principal generator."""
    gens = tuple(gens)
    for gen in gens:
        if gen.ground != g:
            raise GroundMismatchException(g.labels, gen.ground.labels)

    principal = reduce(reduce_pair, gens, g.zero())

    union = 0
    for gen in gens:
        union |= gen.bits
    if principal.bits != union:
        raise VerificationFailedException(
            "Generator fold disagrees with the union of generators",
            check="reduction_identity",
        )
    return Ideal(g, gens, principal)


def principal_ideal(a: RingElem) -> Ideal:
    return ideal_from_generators(a.ground, (a,))


def zero_ideal(g: GroundSet) -> Ideal:
    return ideal_from_generators(g, ())


def unit_ideal(g: GroundSet) -> Ideal:
    return principal_ideal(g.one())


def _same_ground(i: Ideal, j: Ideal) -> None:
    if i.ground != j.ground:
        raise GroundMismatchException(i.ground.labels, j.ground.labels)


def member(a: RingElem, ideal: Ideal) -> bool:
    """a lies in (A) = P(A) exactly when a is a subset of A."""
    if a.ground != ideal.ground:
        raise GroundMismatchException(a.ground.labels, ideal.ground.labels)
    return leq(a, ideal.principal_gen)


def ideal_leq(j: Ideal, i: Ideal) -> bool:
    """Containment J ⊆ I."""
    _same_ground(i, j)
    return leq(j.principal_gen, i.principal_gen)


def ideal_sum(i: Ideal, j: Ideal) -> Ideal:
    """I + J, generated by the generators of both."""
    _same_ground(i, j)
    return ideal_from_generators(i.ground, i.generators + j.generators)


def ideal_intersect(i: Ideal, j: Ideal) -> Ideal:
    _same_ground(i, j)
    return principal_ideal(mul(i.principal_gen, j.principal_gen))


def ideal_product(i: Ideal, j: Ideal) -> Ideal:
    """IJ, generated by all products g*h of generators."""
    _same_ground(i, j)
    product = ideal_from_generators(
        i.ground, [mul(a, b) for a in i.generators for b in j.generators]
    )
    if product != ideal_intersect(i, j):
        raise VerificationFailedException(
            "Ideal product differs from the intersection", check="product_equals_intersection"
        )
    return product


def intersect_all(g: GroundSet, ideals: Sequence[Ideal]) -> Ideal:
    """Finite intersection; the empty family gives the unit ideal."""
    bits = g.full_mask
    for ideal in ideals:
        if ideal.ground != g:
            raise GroundMismatchException(g.labels, ideal.ground.labels)
        bits &= ideal.principal_gen.bits
    return principal_ideal(RingElem(g, bits))


@dataclass(frozen=True)
class ReductionWitness:
    """a·x + b·y written as a multiple of x + y + xy."""

    combination: RingElem
    generator: RingElem
    coefficient: RingElem

    def holds(self) -> bool:
        return mul(self.coefficient, self.generator) == self.combination


def reduction_witness(x: RingElem, y: RingElem, a: RingElem, b: RingElem) -> ReductionWitness:
    """
    Show a·x + b·y ∈ (x + y + xy).

    Using x = x², 2 = 0 and idempotence,
    a·x + b·y = (a·x + b·y)(x + y + xy), so the combination is its own coefficient.
    """
    combination = add(mul(a, x), mul(b, y))
    witness = ReductionWitness(combination, reduce_pair(x, y), combination)
    if not witness.holds():
        raise VerificationFailedException("Reduction identity failed", check="reduction_witness")
    return witness


@dataclass(frozen=True)
class MembershipCertificate:
    """
    Two-way certificate that (g_1, ..., g_k) = (p).

    generator_coefficients[i] * p == g_i shows each generator lies in (p);
    sum of principal_coefficients[i] * g_i == p shows p lies in (g_1, ..., g_k).
    """

    ideal: Ideal
    generator_coefficients: Tuple[RingElem, ...]
    principal_coefficients: Tuple[RingElem, ...]

    def holds(self) -> bool:
        p = self.ideal.principal_gen
        forward = all(
            mul(c, p) == g for c, g in zip(self.generator_coefficients, self.ideal.generators)
        )
        total = self.ideal.ground.zero()
        for c, g in zip(self.principal_coefficients, self.ideal.generators):
            total = add(total, mul(c, g))
        return forward and total == p


def membership_certificate(ideal: Ideal) -> MembershipCertificate:
    g = ideal.ground
    covered = g.zero()
    principal_coefficients: List[RingElem] = []
    for gen in ideal.generators:
        # only the part of gen not already covered, so the pieces are disjoint
        principal_coefficients.append(complement(covered))
        covered = reduce_pair(covered, gen)
    certificate = MembershipCertificate(
        ideal, tuple(ideal.generators), tuple(principal_coefficients)
    )
    if not certificate.holds():
        raise VerificationFailedException("Membership certificate failed", check="membership_certificate")
    return certificate


def describe(ideal: Ideal) -> str:
    return f"({', '.join(str(g) for g in ideal.generators)}) = {ideal}"
