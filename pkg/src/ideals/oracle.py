"""
Definitional oracles for ideals of small power-set rings.

Everything here works straight from the textbook definitions by enumerating
elements (or sets of elements) of P(X). It is exponential and only used to
cross-check the closed-form predicates, so every entry point is bounded.
"""

import logging
from typing import FrozenSet, List, Optional, Sequence, Tuple

from src.config import config
from src.error_handling.decorators import log_execution
from src.error_handling.validators import validate_bound
from src.powerset.core import GroundSet, RingElem, elements
from .ideal import Ideal

logger = logging.getLogger("boolring.ideals.oracle")

ElementSet = FrozenSet[int]


def check_oracle_bound(operation: str, g: GroundSet, bound: Optional[int]) -> None:
    limit = config.ORACLE_MAX if bound is None else bound
    validate_bound(operation, g.size, min(limit, config.ORACLE_HARD_CAP))


def element_set(ideal: Ideal, bound: Optional[int] = None) -> ElementSet:
    """The ideal as a set of bit-vectors."""
    check_oracle_bound("element_set", ideal.ground, bound)
    p = ideal.principal_gen.bits
    return frozenset(e.bits for e in elements(ideal.ground) if e.bits & p == e.bits)


def principal_closure(g: GroundSet, gens: Sequence[RingElem], bound: Optional[int] = None) -> ElementSet:
    """All finite linear combinations sum(B_i * g_i) with B_i ranging over P(X)."""
    check_oracle_bound("principal_closure", g, bound)
    products = {b.bits & gen.bits for gen in gens for b in elements(g)}
    combos = {0}
    for p in products:
        combos |= {c ^ p for c in combos}
    return frozenset(combos)


def _powers(bits: int, limit: int) -> List[int]:
    """x, x^2, ... until a power repeats."""
    seen: List[int] = []
    current = bits
    while current not in seen and len(seen) < limit:
        seen.append(current)
        current &= bits
    return seen


def definitional_radical(ideal: Ideal, bound: Optional[int] = None) -> ElementSet:
    """{x : x^n ∈ I for some n > 0}."""
    members = element_set(ideal, bound)
    limit = 1 << ideal.ground.size
    return frozenset(
        e.bits for e in elements(ideal.ground)
        if any(p in members for p in _powers(e.bits, limit))
    )


def prime_counterexample(ideal: Ideal, bound: Optional[int] = None) -> Optional[Tuple[RingElem, RingElem]]:
    """A pair (a, b) with ab ∈ I, a ∉ I, b ∉ I, or None."""
    members = element_set(ideal, bound)
    g = ideal.ground
    for a in elements(g):
        if a.bits in members:
            continue
        for b in elements(g):
            if a.bits & b.bits in members and b.bits not in members:
                return a, b
    return None


def primary_counterexample(ideal: Ideal, bound: Optional[int] = None) -> Optional[Tuple[RingElem, RingElem]]:
    """A pair (a, b) with ab ∈ I, a ∉ I and no power of b in I, or None."""
    members = element_set(ideal, bound)
    g = ideal.ground
    limit = 1 << g.size
    for a in elements(g):
        if a.bits in members:
            continue
        for b in elements(g):
            if a.bits & b.bits not in members:
                continue
            if not any(p in members for p in _powers(b.bits, limit)):
                return a, b
    return None


def _is_proper_set(g: GroundSet, members: ElementSet) -> bool:
    return g.full_mask not in members


def oracle_is_prime(ideal: Ideal, bound: Optional[int] = None) -> bool:
    members = element_set(ideal, bound)
    return _is_proper_set(ideal.ground, members) and prime_counterexample(ideal, bound) is None


def oracle_is_primary(ideal: Ideal, bound: Optional[int] = None) -> bool:
    members = element_set(ideal, bound)
    return _is_proper_set(ideal.ground, members) and primary_counterexample(ideal, bound) is None


def intermediate_ideal(ideal: Ideal, bound: Optional[int] = None) -> Optional[ElementSet]:
    """
    A proper ideal strictly containing I, or None.

    Any strictly larger ideal contains some a ∉ I and therefore the ideal
    generated by I and a, so trying each a is enough.
    """
    members = element_set(ideal, bound)
    g = ideal.ground
    for a in elements(g):
        if a.bits in members:
            continue
        grown = principal_closure(g, [ideal.principal_gen, a], bound)
        if _is_proper_set(g, grown):
            return grown
    return None


def oracle_is_maximal(ideal: Ideal, bound: Optional[int] = None) -> bool:
    members = element_set(ideal, bound)
    return _is_proper_set(ideal.ground, members) and intermediate_ideal(ideal, bound) is None


def is_ideal_set(g: GroundSet, members: ElementSet) -> bool:
    """Nonempty, closed under +, absorbing under * by every element."""
    if 0 not in members:
        return False
    for a in members:
        for b in members:
            if a ^ b not in members:
                return False
        for r in range(1 << g.size):
            if a & r not in members:
                return False
    return True


@log_execution()
def ideal_closure_filter(g: GroundSet, bound: Optional[int] = None) -> List[ElementSet]:
    """
    Every ideal of P(X) as a set of elements, found by testing all 2^(2^n)
    subsets of P(X). Sorted by largest member.
    """
    limit = config.SUBSET_FILTER_MAX if bound is None else bound
    validate_bound("ideal_closure_filter", g.size, limit)
    universe = 1 << g.size
    found: List[ElementSet] = []
    for mask in range(1 << universe):
        members = frozenset(e for e in range(universe) if mask >> e & 1)
        if is_ideal_set(g, members):
            found.append(members)
    found.sort(key=lambda members: (max(members), sorted(members)))
    logger.debug(f"Subset filter found {len(found)} ideals over {g.size} points")
    return found
