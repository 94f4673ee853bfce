"""Power-set ring arithmetic."""

from .core import (
    GroundSet,
    RingElem,
    new_ground,
    elem,
    add,
    mul,
    complement,
    leq,
    power,
    atoms,
    char_eval,
    elements,
    units,
    is_integral_domain,
)

__all__ = [
    "GroundSet",
    "RingElem",
    "new_ground",
    "elem",
    "add",
    "mul",
    "complement",
    "leq",
    "power",
    "atoms",
    "char_eval",
    "elements",
    "units",
    "is_integral_domain",
]
