"""Expression language, evaluator, batch runner and REPL."""

from .ast import (
    BinOp,
    Command,
    Complement,
    GroundDecl,
    IdealExpr,
    LetElem,
    LetIdeal,
    ModeDecl,
    Name,
    Number,
    One,
    SetLiteral,
    Zero,
)
from .lexer import Token, TokenType, tokenize
from .parser import MAX_NESTING, Parser, format_expr, format_program, format_statement, parse, parse_expression
from .evaluator import Report, Session, evaluate
from .runner import Output, run_repl, run_script, run_source

__all__ = [
    "BinOp",
    "Command",
    "Complement",
    "GroundDecl",
    "IdealExpr",
    "LetElem",
    "LetIdeal",
    "ModeDecl",
    "Name",
    "Number",
    "One",
    "SetLiteral",
    "Zero",
    "Token",
    "TokenType",
    "tokenize",
    "MAX_NESTING",
    "Parser",
    "format_expr",
    "format_program",
    "format_statement",
    "parse",
    "parse_expression",
    "Report",
    "Session",
    "evaluate",
    "Output",
    "run_repl",
    "run_script",
    "run_source",
]
