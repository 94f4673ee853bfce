"""
The finite-cofinite algebra over the natural numbers.

An element is a finite set of points (FINITE, its members) or the complement
of one (COFINITE, its non-members). Elements are never materialised; ring
operations are case analyses on the two kinds.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, FrozenSet, Iterable, List, Mapping

import numpy as np

from src.error_handling.exceptions import (
    HypothesisFailedException,
    InvalidInputException,
    VerificationFailedException,
)
from src.error_handling.validators import validate_number

logger = logging.getLogger("boolring.fincof")


class Kind(Enum):
    FINITE = "finite"
    COFINITE = "cofinite"


def _points(values: Iterable[int]) -> FrozenSet[int]:
    return frozenset(validate_number(v, "point", non_negative=True) for v in values)


@dataclass(frozen=True)
class FinCofElem:
    kind: Kind
    support: FrozenSet[int]

    def __post_init__(self):
        object.__setattr__(self, "support", _points(self.support))

    def is_zero(self) -> bool:
        return self.kind is Kind.FINITE and not self.support

    def is_one(self) -> bool:
        return self.kind is Kind.COFINITE and not self.support

    def __add__(self, other: "FinCofElem") -> "FinCofElem":
        return fc_add(self, other)

    def __mul__(self, other: "FinCofElem") -> "FinCofElem":
        return fc_mul(self, other)

    def __str__(self) -> str:
        tag = "F" if self.kind is Kind.FINITE else "C"
        return tag + "{" + ",".join(str(p) for p in sorted(self.support)) + "}"

    def to_dict(self) -> Dict[str, Any]:
        return {"kind": self.kind.value, "support": sorted(self.support)}

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "FinCofElem":
        try:
            kind = Kind(data["kind"])
        except (KeyError, ValueError):
            raise InvalidInputException(
                f"kind must be 'finite' or 'cofinite', got {data.get('kind')!r}", field="kind"
            ) from None
        return cls(kind, frozenset(data.get("support", [])))


def finite(points: Iterable[int]) -> FinCofElem:
    return FinCofElem(Kind.FINITE, frozenset(points))


def cofinite(points: Iterable[int]) -> FinCofElem:
    return FinCofElem(Kind.COFINITE, frozenset(points))


def fc_zero() -> FinCofElem:
    return finite(())


def fc_one() -> FinCofElem:
    return cofinite(())


def fc_add(a: FinCofElem, b: FinCofElem) -> FinCofElem:
    """Symmetric difference; the result is cofinite iff exactly one side is."""
    support = a.support ^ b.support
    if a.kind is b.kind:
        return FinCofElem(Kind.FINITE, support)
    return FinCofElem(Kind.COFINITE, support)


def fc_mul(a: FinCofElem, b: FinCofElem) -> FinCofElem:
    """Intersection."""
    if a.kind is Kind.FINITE and b.kind is Kind.FINITE:
        return FinCofElem(Kind.FINITE, a.support & b.support)
    if a.kind is Kind.COFINITE and b.kind is Kind.COFINITE:
        return FinCofElem(Kind.COFINITE, a.support | b.support)
    fin, cof = (a, b) if a.kind is Kind.FINITE else (b, a)
    return FinCofElem(Kind.FINITE, fin.support - cof.support)


def fc_complement(a: FinCofElem) -> FinCofElem:
    kind = Kind.COFINITE if a.kind is Kind.FINITE else Kind.FINITE
    return FinCofElem(kind, a.support)


def fc_leq(a: FinCofElem, b: FinCofElem) -> bool:
    return fc_mul(a, b) == a


def fc_member_point(x: int, a: FinCofElem) -> int:
    """χ_a(x), the evaluation homomorphism at x."""
    inside = x in a.support
    return int(inside if a.kind is Kind.FINITE else not inside)


def fc_in_fin(a: FinCofElem) -> bool:
    return a.kind is Kind.FINITE


def fc_in_mx(x: int, a: FinCofElem) -> bool:
    return fc_member_point(x, a) == 0


def least_fresh_point(points: Iterable[int]) -> int:
    """The least natural above every given point; 0 for none."""
    taken = _points(points)
    return max(taken) + 1 if taken else 0


def witness_nonzero(points: Iterable[int]) -> FinCofElem:
    """
    A nonzero element lying in m_x for every x in points, so no finite family
    of the m_x intersects to (0).
    """
    taken = _points(points)
    witness = finite([least_fresh_point(taken)])
    if witness.is_zero() or not all(fc_in_mx(x, witness) for x in taken):
        raise VerificationFailedException(
            f"{witness} is not a nonzero common member of the m_x", check="witness_nonzero"
        )
    return witness


def fin_escape_witness(gens: Iterable[FinCofElem]) -> FinCofElem:
    """
    A singleton in Fin outside the ideal generated by finitely many members of
    Fin. Everything in that ideal lies under the union U of their supports.
    """
    gens = list(gens)
    for g in gens:
        if not fc_in_fin(g):
            raise HypothesisFailedException(f"{g} is not in Fin")
    union = finite(frozenset().union(*(g.support for g in gens)))
    witness = finite([least_fresh_point(union.support)])
    if fc_leq(witness, union) or not fc_in_fin(witness):
        raise VerificationFailedException(
            f"{witness} lies in the ideal generated by {[str(g) for g in gens]}", check="fin_escape_witness"
        )
    return witness


def random_element(rng: np.random.Generator, universe: int = 64, max_support: int = 8) -> FinCofElem:
    """A random element with support drawn from range(universe)."""
    size = int(rng.integers(0, max_support + 1))
    support = rng.choice(universe, size=min(size, universe), replace=False)
    kind = Kind.FINITE if rng.integers(0, 2) == 0 else Kind.COFINITE
    return FinCofElem(kind, frozenset(int(p) for p in support))


def probe_window(*elems: FinCofElem, margin: int = 3) -> List[int]:
    """Points 0..max(supports)+margin, enough to tell the given elements apart."""
    top = max((max(e.support) for e in elems if e.support), default=0)
    return list(range(top + margin + 1))
