"""
Quotients P(X)/P(A) ≅ P(X - A) and the isomorphism P(X) ≅ Fun(X, Z2).

Projection drops the points of A; the target ground keeps the source's label
order. Function tables are numpy uint8 arrays indexed like the labels.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Sequence, Tuple

import numpy as np

from src.error_handling.exceptions import (
    GroundMismatchException,
    LengthMismatchException,
    VerificationFailedException,
)
from src.error_handling.validators import validate_bits
from src.ideals.ideal import principal_ideal
from src.ideals.oracle import ElementSet, check_oracle_bound, element_set
from src.powerset.core import GroundSet, RingElem, char_eval, complement, elements, new_ground

logger = logging.getLogger("boolring.homomorphisms")


@dataclass(frozen=True)
class QuotientMap:
    """The projection P(X) -> P(X - A)."""

    source: GroundSet
    modulus: RingElem
    target: GroundSet
    # source bit position of each target label
    kept: Tuple[int, ...] = field(repr=False)

    def to_dict(self) -> Dict[str, Any]:
        return {"modulus": self.modulus.to_dict(), "target": self.target.to_dict()}

    def __str__(self) -> str:
        return f"P({{{','.join(self.source.labels)}}}) / ({self.modulus}) -> P({{{','.join(self.target.labels)}}})"


def _check_ground(g: GroundSet, u: RingElem) -> None:
    if u.ground != g:
        raise GroundMismatchException(g.labels, u.ground.labels)


def quotient(g: GroundSet, a: RingElem) -> QuotientMap:
    """Build the projection modulo ideal(a)."""
    _check_ground(g, a)
    kept = tuple(i for i in range(g.size) if not a.bits >> i & 1)
    target = new_ground([g.labels[i] for i in kept])
    logger.debug(f"Quotient of size-{g.size} ground by {a} has {target.size} points")
    return QuotientMap(g, a, target, kept)


def project(q: QuotientMap, u: RingElem) -> RingElem:
    """u ∩ (X - A), re-indexed into the target ground."""
    _check_ground(q.source, u)
    bits = 0
    for j, i in enumerate(q.kept):
        if u.bits >> i & 1:
            bits |= 1 << j
    return RingElem(q.target, bits)


def lift(q: QuotientMap, v: RingElem) -> RingElem:
    """The representative of the coset of v that avoids A."""
    _check_ground(q.target, v)
    bits = 0
    for j, i in enumerate(q.kept):
        if v.bits >> j & 1:
            bits |= 1 << i
    return RingElem(q.source, bits)


def kernel(q: QuotientMap, bound: Optional[int] = None) -> ElementSet:
    """Every u with project(u) = 0, found by enumeration and compared to ideal(A)."""
    check_oracle_bound("kernel", q.source, bound)
    found = frozenset(u.bits for u in elements(q.source) if project(q, u).is_zero())
    if found != element_set(principal_ideal(q.modulus), bound):
        raise VerificationFailedException(
            f"Kernel of projection mod {q.modulus} differs from its ideal", check="kernel"
        )
    return found


def to_function_table(a: RingElem) -> np.ndarray:
    """χ_A as a bit table: entry i is 1 iff labels[i] ∈ A."""
    table = np.array([a.bits >> i & 1 for i in range(a.ground.size)], dtype=np.uint8)
    return table


def from_function_table(g: GroundSet, bits: Sequence[int]) -> RingElem:
    """Inverse of to_function_table."""
    values = validate_bits(list(bits))
    if len(values) != g.size:
        raise LengthMismatchException(g.size, len(values))
    packed = 0
    for i, b in enumerate(values):
        packed |= b << i
    return RingElem(g, packed)


def evaluation_agrees(a: RingElem) -> bool:
    """f_x(a) = χ_A(x) for every point x."""
    table = to_function_table(a)
    return all(char_eval(x, a) == int(table[i]) for i, x in enumerate(a.ground.labels))


def evaluation_kernel(g: GroundSet, point: str, bound: Optional[int] = None) -> ElementSet:
    """ker f_x by enumeration; equals m_x = ideal(X - {x})."""
    check_oracle_bound("evaluation_kernel", g, bound)
    position = g.position(point)
    found = frozenset(u.bits for u in elements(g) if not int(to_function_table(u)[position]))
    m_x = principal_ideal(complement(RingElem(g, 1 << position)))
    if found != element_set(m_x, bound):
        raise VerificationFailedException(
            f"Kernel of evaluation at {point} differs from m_{point}", check="evaluation_kernel"
        )
    return found
