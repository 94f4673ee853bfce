"""
The product ring Z2^n, atoms, and its identification with a power-set ring.

Elements are n-bit vectors. Coordinate i is bit i of the int and is printed
i-th from the left, so "100" is the first coordinate vector.
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, Iterator, List, Optional, Tuple

import numpy as np

from src.config import config
from src.error_handling.decorators import log_execution
from src.error_handling.exceptions import (
    GroundMismatchException,
    InvalidInputException,
    NotAnAtomException,
    VerificationFailedException,
    ZeroRingException,
)
from src.error_handling.validators import validate_bound, validate_number
from src.ideals.ideal import principal_ideal
from src.ideals.oracle import element_set
from src.ideals.predicates import is_maximal
from src.powerset.core import GroundSet, RingElem, complement, new_ground

logger = logging.getLogger("boolring.homomorphisms.generic")


@dataclass(frozen=True)
class GenericBoolRing:
    """Z2 x ... x Z2 with n factors; operations are coordinatewise."""

    dimension: int

    def __post_init__(self):
        validate_number(self.dimension, "dimension", non_negative=True)

    @property
    def full_mask(self) -> int:
        return (1 << self.dimension) - 1

    def element(self, bits: int) -> "BoolVec":
        validate_number(bits, "bits", non_negative=True)
        if bits > self.full_mask:
            raise InvalidInputException(
                f"bit-vector {bits:#x} does not fit dimension {self.dimension}", field="bits"
            )
        return BoolVec(self, bits)

    def parse(self, text: str) -> "BoolVec":
        """Read a coordinate string such as "101"."""
        if len(text) != self.dimension or set(text) - {"0", "1"}:
            raise InvalidInputException(
                f"'{text}' is not a {self.dimension}-coordinate 0/1 string", field="element"
            )
        return BoolVec(self, sum(1 << i for i, c in enumerate(text) if c == "1"))

    def zero(self) -> "BoolVec":
        return BoolVec(self, 0)

    def one(self) -> "BoolVec":
        return BoolVec(self, self.full_mask)

    def elements(self) -> Iterator["BoolVec"]:
        for bits in range(1 << self.dimension):
            yield BoolVec(self, bits)

    def units(self, bound: Optional[int] = None) -> List["BoolVec"]:
        """Elements with an inverse, found by trying every product."""
        validate_bound("units", self.dimension, config.STONE_EXHAUSTIVE_MAX if bound is None else bound)
        everything = list(self.elements())
        return [a for a in everything if any(vec_mul(a, b) == self.one() for b in everything)]

    def is_field(self) -> bool:
        """Z2 is the only Boolean field."""
        return self.dimension == 1

    def random_elements(self, rng: np.random.Generator, count: int) -> List["BoolVec"]:
        """count uniformly random elements; coordinates are drawn as a 0/1 matrix."""
        coords = rng.integers(0, 2, size=(count, self.dimension), dtype=np.uint8)
        weights = [1 << i for i in range(self.dimension)]
        return [BoolVec(self, sum(w for w, c in zip(weights, row) if c)) for row in coords]


@dataclass(frozen=True)
class BoolVec:
    ring: GenericBoolRing
    bits: int

    def is_zero(self) -> bool:
        return self.bits == 0

    def popcount(self) -> int:
        return bin(self.bits).count("1")

    def __add__(self, other: "BoolVec") -> "BoolVec":
        return vec_add(self, other)

    def __mul__(self, other: "BoolVec") -> "BoolVec":
        return vec_mul(self, other)

    def __str__(self) -> str:
        return "".join("1" if self.bits >> i & 1 else "0" for i in range(self.ring.dimension))


def _same_ring(a: BoolVec, b: BoolVec) -> None:
    if a.ring != b.ring:
        raise GroundMismatchException((str(a.ring.dimension),), (str(b.ring.dimension),))


def vec_add(a: BoolVec, b: BoolVec) -> BoolVec:
    _same_ring(a, b)
    return BoolVec(a.ring, a.bits ^ b.bits)


def vec_mul(a: BoolVec, b: BoolVec) -> BoolVec:
    _same_ring(a, b)
    return BoolVec(a.ring, a.bits & b.bits)


def vec_complement(a: BoolVec) -> BoolVec:
    return BoolVec(a.ring, a.bits ^ a.ring.full_mask)


def vec_leq(a: BoolVec, b: BoolVec) -> bool:
    """a ⪯ b iff ab = a."""
    return vec_mul(a, b) == a


def is_atom(a: BoolVec) -> bool:
    # y ⪯ a with 0 != y != a exists exactly when a has two or more coordinates set
    return a.popcount() == 1


def find_atoms(r: GenericBoolRing, bound: Optional[int] = None) -> List[BoolVec]:
    """
    Minimal nonzero elements, in coordinate order.

    Small rings are searched element by element against the definition; the
    result must be the coordinate vectors. Dimensions above STONE_MAX are refused.
    """
    if r.dimension == 0:
        raise ZeroRingException("find_atoms")
    validate_bound("find_atoms", r.dimension, config.STONE_MAX if bound is None else bound)
    found = [BoolVec(r, 1 << i) for i in range(r.dimension)]
    if r.dimension <= config.STONE_EXHAUSTIVE_MAX:
        nonzero = [b for b in r.elements() if not b.is_zero()]
        minimal = [a for a in nonzero if not any(b != a and vec_leq(b, a) for b in nonzero)]
        if sorted(a.bits for a in minimal) != sorted(a.bits for a in found):
            raise VerificationFailedException("Minimal nonzero elements are not the coordinate vectors", check="find_atoms")
    return found


@dataclass(frozen=True)
class StoneMap:
    """b -> {atoms under b}, into the power-set ring over the atom labels."""

    ring: GenericBoolRing
    atoms: Tuple[BoolVec, ...]
    target: GroundSet

    def apply(self, b: BoolVec) -> RingElem:
        bits = 0
        for i, atom in enumerate(self.atoms):
            if vec_mul(atom, b) == atom:
                bits |= 1 << i
        return RingElem(self.target, bits)

    def verify(self, trials: int = 1000, seed: Optional[int] = None) -> int:
        """
        Check the map is an injective homomorphism sending 1 to X. Exhaustive on
        small rings, sampled with a seeded generator otherwise. Returns the number
        of pairs checked.
        """
        if self.ring.dimension <= config.STONE_EXHAUSTIVE_MAX:
            sample = list(self.ring.elements())
            images = {self.apply(b).bits for b in sample}
            if len(images) != len(sample):
                raise VerificationFailedException("Stone map is not injective", check="stone_iso")
        else:
            rng = np.random.default_rng(config.RANDOM_SEED if seed is None else seed)
            sample = self.ring.random_elements(rng, max(2, int(np.sqrt(trials))))

        if not self.apply(self.ring.one()).is_one():
            raise VerificationFailedException("Stone map does not send 1 to X", check="stone_iso")
        checked = 0
        for a in sample:
            for b in sample:
                if self.apply(vec_add(a, b)) != self.apply(a) + self.apply(b):
                    raise VerificationFailedException(f"Stone map not additive at {a}, {b}", check="stone_iso")
                if self.apply(vec_mul(a, b)) != self.apply(a) * self.apply(b):
                    raise VerificationFailedException(f"Stone map not multiplicative at {a}, {b}", check="stone_iso")
                checked += 1
        return checked

    def to_dict(self) -> Dict[str, Any]:
        return {"dimension": self.ring.dimension, "atoms": [str(a) for a in self.atoms]}


def atom_labels(r: GenericBoolRing) -> List[str]:
    return [f"e{i + 1}" for i in range(r.dimension)]


@log_execution()
def stone_iso(r: GenericBoolRing, bound: Optional[int] = None) -> StoneMap:
    """The isomorphism of r onto P(atoms), verified before it is returned."""
    validate_bound("stone_iso", r.dimension, config.STONE_MAX if bound is None else bound)
    atoms = find_atoms(r, bound)
    stone = StoneMap(r, tuple(atoms), new_ground(atom_labels(r)))
    stone.verify()
    return stone


def maximal_principal_from_atom(r: GenericBoolRing, atom: BoolVec) -> BoolVec:
    """1 + atom, a generator of a maximal principal ideal."""
    if atom.ring != r or not is_atom(atom):
        raise NotAnAtomException(str(atom))
    generator = vec_complement(atom)

    if r.dimension <= config.STONE_MAX:
        stone = stone_iso(r)
        image = stone.apply(generator)
        expected = complement(stone.apply(atom))
        if image != expected or not is_maximal(principal_ideal(image)):
            raise VerificationFailedException(
                f"Image of 1 + {atom} is not the generator of a maximal ideal", check="maximal_principal_from_atom"
            )
        if r.dimension <= min(config.ORACLE_MAX, config.ORACLE_HARD_CAP):
            under = {stone.apply(b).bits for b in r.elements() if vec_leq(b, generator)}
            if under != set(element_set(principal_ideal(expected))):
                raise VerificationFailedException(
                    f"Ideal of 1 + {atom} does not map onto P(atoms - {{{atom}}})",
                    check="maximal_principal_from_atom",
                )
    return generator


def zero_is_intersection_of_maximals(r: GenericBoolRing) -> bool:
    """
    (0) equals the intersection of the maximal ideals (1 + α) over all atoms α:
    the intersection of principal ideals is generated by the product.
    """
    if r.dimension == 0:
        raise ZeroRingException("zero_is_intersection_of_maximals")
    product = r.one()
    for atom in find_atoms(r):
        product = vec_mul(product, vec_complement(atom))
    if r.dimension <= config.STONE_EXHAUSTIVE_MAX:
        generators = [vec_complement(a) for a in find_atoms(r)]
        common = [b for b in r.elements() if all(vec_leq(b, c) for c in generators)]
        if [b.bits for b in common] != [0]:
            return False
    return product.is_zero()
