"""
Syntax tree for the ring expression language.

Every node carries the span it was parsed from. Spans are excluded from
equality, so a tree compares equal to the tree re-parsed from its printout.
"""

from dataclasses import dataclass, field
from typing import Optional, Tuple, Union

from src.error_handling.exceptions import SourceSpan


def _span() -> Optional[SourceSpan]:
    return field(default=None, compare=False, repr=False)


# Expressions

@dataclass(frozen=True)
class Name:
    name: str
    span: Optional[SourceSpan] = _span()


@dataclass(frozen=True)
class Number:
    """A numeric word other than 0 and 1, kept as written."""

    text: str
    span: Optional[SourceSpan] = _span()

    @property
    def value(self) -> int:
        return int(self.text)


@dataclass(frozen=True)
class SetLiteral:
    labels: Tuple[str, ...]
    span: Optional[SourceSpan] = _span()


@dataclass(frozen=True)
class Zero:
    span: Optional[SourceSpan] = _span()


@dataclass(frozen=True)
class One:
    span: Optional[SourceSpan] = _span()


@dataclass(frozen=True)
class BinOp:
    op: str  # "+" or "*"
    left: "Expr"
    right: "Expr"
    span: Optional[SourceSpan] = _span()


@dataclass(frozen=True)
class Complement:
    operand: "Expr"
    span: Optional[SourceSpan] = _span()


@dataclass(frozen=True)
class IdealExpr:
    """Inline ideal(e1, ..., ek) used as a command argument."""

    generators: Tuple["Expr", ...]
    span: Optional[SourceSpan] = _span()


Expr = Union[Name, Number, SetLiteral, Zero, One, BinOp, Complement]
Argument = Union[Expr, IdealExpr]


# Statements

@dataclass(frozen=True)
class GroundDecl:
    labels: Tuple[str, ...]
    span: Optional[SourceSpan] = _span()


@dataclass(frozen=True)
class LetElem:
    name: str
    expr: Expr
    span: Optional[SourceSpan] = _span()


@dataclass(frozen=True)
class LetIdeal:
    name: str
    generators: Tuple[Expr, ...]
    span: Optional[SourceSpan] = _span()


@dataclass(frozen=True)
class ModeDecl:
    mode: str
    span: Optional[SourceSpan] = _span()


@dataclass(frozen=True)
class Command:
    verb: str
    args: Tuple[Argument, ...]
    span: Optional[SourceSpan] = _span()


Statement = Union[GroundDecl, LetElem, LetIdeal, ModeDecl, Command]
