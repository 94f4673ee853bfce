"""
Power-set ring P(X) over a finite ground set.

Subsets are held as Python integers used as bit-vectors: bit i is set when
labels[i] is a member. Addition is symmetric difference (xor), multiplication
is intersection (and), 0 is the empty set and 1 is the whole ground set.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

from src.config import config
from src.error_handling.exceptions import (
    DuplicateLabelException,
    GroundMismatchException,
    InvalidInputException,
    UnknownLabelException,
)
from src.error_handling.validators import validate_bound, validate_label, validate_number

logger = logging.getLogger("boolring.powerset")


@dataclass(frozen=True)
class GroundSet:
    """An ordered finite universe of distinct labels; bit i <-> labels[i]."""

    labels: Tuple[str, ...]
    _index: Mapping[str, int] = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        labels = tuple(self.labels)
        index: Dict[str, int] = {}
        for position, label in enumerate(labels):
            validate_label(label)
            if label in index:
                raise DuplicateLabelException(label)
            index[label] = position
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "_index", index)

    @property
    def size(self) -> int:
        return len(self.labels)

    @property
    def full_mask(self) -> int:
        return (1 << self.size) - 1

    def position(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownLabelException(label, self.labels) from None

    def __contains__(self, label: object) -> bool:
        return label in self._index

    def __iter__(self) -> Iterator[str]:
        return iter(self.labels)

    def __len__(self) -> int:
        return self.size

    def zero(self) -> "RingElem":
        return RingElem(self, 0)

    def one(self) -> "RingElem":
        return RingElem(self, self.full_mask)

    def from_bits(self, bits: int) -> "RingElem":
        validate_number(bits, "bits", non_negative=True)
        if bits > self.full_mask:
            raise InvalidInputException(
                f"bit-vector {bits:#x} has bits outside a ground set of size {self.size}",
                field="bits",
            )
        return RingElem(self, bits)

    def to_dict(self) -> List[str]:
        return list(self.labels)


@dataclass(frozen=True)
class RingElem:
    """A subset of a GroundSet, stored as a bit-vector."""

    ground: GroundSet
    bits: int

    def members(self) -> List[str]:
        """Member labels in ground order."""
        return [label for i, label in enumerate(self.ground.labels) if self.bits >> i & 1]

    def cardinality(self) -> int:
        return bin(self.bits).count("1")

    def is_zero(self) -> bool:
        return self.bits == 0

    def is_one(self) -> bool:
        return self.bits == self.ground.full_mask

    def __add__(self, other: "RingElem") -> "RingElem":
        return add(self, other)

    def __mul__(self, other: "RingElem") -> "RingElem":
        return mul(self, other)

    def __le__(self, other: "RingElem") -> bool:
        return leq(self, other)

    def __str__(self) -> str:
        return "{" + ",".join(self.members()) + "}"

    def to_dict(self) -> Dict[str, Any]:
        return {"ground": self.ground.to_dict(), "members": self.members()}

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "RingElem":
        return elem(new_ground(data["ground"]), set(data["members"]))


def new_ground(labels: Sequence[str]) -> GroundSet:
    """Create a ground set; label order fixes the bit positions."""
    ground = GroundSet(tuple(labels))
    logger.debug(f"Created ground set of size {ground.size}")
    return ground


def elem(g: GroundSet, members: Iterable[str]) -> RingElem:
    """The subset of g with exactly the given member labels."""
    bits = 0
    for label in members:
        bits |= 1 << g.position(label)
    return RingElem(g, bits)


def _same_ground(a: RingElem, b: RingElem) -> None:
    if a.ground != b.ground:
        raise GroundMismatchException(a.ground.labels, b.ground.labels)


def add(a: RingElem, b: RingElem) -> RingElem:
    """Symmetric difference."""
    _same_ground(a, b)
    return RingElem(a.ground, a.bits ^ b.bits)


def mul(a: RingElem, b: RingElem) -> RingElem:
    """Intersection."""
    _same_ground(a, b)
    return RingElem(a.ground, a.bits & b.bits)


def complement(a: RingElem) -> RingElem:
    """X - a, i.e. 1 + a."""
    return RingElem(a.ground, a.bits ^ a.ground.full_mask)


def leq(a: RingElem, b: RingElem) -> bool:
    """a <= b iff ab = a."""
    return mul(a, b) == a


def power(a: RingElem, n: int) -> RingElem:
    """n-fold product of a with itself, n >= 1."""
    validate_number(n, "n", min_value=1)
    result = a
    for _ in range(n - 1):
        result = mul(result, a)
    return result


def atoms(g: GroundSet) -> List[RingElem]:
    """The singletons, in label order."""
    return [RingElem(g, 1 << i) for i in range(g.size)]


def char_eval(x: str, a: RingElem) -> int:
    """Characteristic function of a evaluated at the point x."""
    return a.bits >> a.ground.position(x) & 1


def elements(g: GroundSet) -> Iterator[RingElem]:
    """Every element of P(X) in bit-vector order."""
    for bits in range(1 << g.size):
        yield RingElem(g, bits)


def units(g: GroundSet, bound: Optional[int] = None) -> List[RingElem]:
    """Elements with an inverse, found by trying every product."""
    validate_bound("units", g.size, config.ORACLE_MAX if bound is None else bound)
    everything = list(elements(g))
    return [a for a in everything if any(mul(a, b).is_one() for b in everything)]


def is_integral_domain(g: GroundSet) -> bool:
    """P(X) has no zero divisors only when X is a single point."""
    return g.size == 1
