"""
Recursive-descent parser and pretty printer for the ring expression language.

    program  ::= { sep } [ stmt { sep { sep } stmt } ] { sep }
    stmt     ::= "ground" { word }
               | "let" name "=" expr
               | "ideal" name "=" "(" [ expr { "," expr } ] ")"
               | "mode" word
               | verb { arg }
    arg      ::= "ideal" "(" [ expr { "," expr } ] ")" | expr
    expr     ::= term { "+" term }
    term     ::= factor { "*" factor }
    factor   ::= atom { "'" }
    atom     ::= name | number | "0" | "1" | "{" [ word { "," word } ] "}" | "(" expr ")"

`'` binds tighter than `*`, which binds tighter than `+`; both binary
operators associate to the left.
"""

import re
from typing import List, Sequence, Tuple

from src.error_handling.exceptions import ParseException, SourceSpan
from .ast import (
    Argument,
    BinOp,
    Command,
    Complement,
    Expr,
    GroundDecl,
    IdealExpr,
    LetElem,
    LetIdeal,
    ModeDecl,
    Name,
    Number,
    One,
    SetLiteral,
    Statement,
    Zero,
)
from .lexer import Token, TokenType, tokenize

KEYWORDS = {"ground", "let", "ideal", "mode"}
NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*$")
ATOM_START = ["name", TokenType.LBRACE.value, TokenType.LPAREN.value, "0", "1"]
STATEMENT_END = [TokenType.SEP.value, TokenType.EOF.value]
MAX_NESTING = 64


class Parser:
    def __init__(self, source: str):
        self.tokens = tokenize(source)
        self.pos = 0
        self.depth = 0

    # Token helpers

    def peek(self, offset: int = 0) -> Token:
        return self.tokens[min(self.pos + offset, len(self.tokens) - 1)]

    def advance(self) -> Token:
        token = self.peek()
        if token.type is not TokenType.EOF:
            self.pos += 1
        return token

    def at(self, *types: TokenType) -> bool:
        return self.peek().type in types

    def at_word(self, text: str) -> bool:
        token = self.peek()
        return token.type is TokenType.WORD and token.text == text

    def error(self, message: str, expected: Sequence[str]) -> ParseException:
        token = self.peek()
        found = token.text if token.type is TokenType.WORD else token.type.value
        return ParseException(f"{message}, found {found}", token.line, token.column, expected)

    def expect(self, token_type: TokenType, context: str) -> Token:
        if not self.at(token_type):
            raise self.error(f"Expected {token_type.value} {context}", [token_type.value])
        return self.advance()

    def span_from(self, start: Token) -> SourceSpan:
        last = self.tokens[self.pos - 1] if self.pos > 0 else start
        return SourceSpan(start.line, start.column, last.end_column)

    def name(self, context: str) -> str:
        token = self.peek()
        if token.type is not TokenType.WORD or not NAME_RE.match(token.text) or token.text in KEYWORDS:
            raise self.error(f"Expected a name {context}", ["name"])
        return self.advance().text

    # Statements

    def parse_program(self) -> List[Statement]:
        statements: List[Statement] = []
        while True:
            while self.at(TokenType.SEP):
                self.advance()
            if self.at(TokenType.EOF):
                return statements
            statements.append(self.parse_statement())
            if not self.at(TokenType.SEP, TokenType.EOF):
                raise self.error("Unexpected token after statement", STATEMENT_END)

    def parse_statement(self) -> Statement:
        start = self.peek()
        if start.type is not TokenType.WORD:
            raise self.error("Expected a statement", ["ground", "let", "ideal", "mode", "verb"])

        if start.text == "ground":
            self.advance()
            labels = []
            while self.at(TokenType.WORD):
                labels.append(self.advance().text)
            if not self.at(TokenType.SEP, TokenType.EOF):
                raise self.error("Expected a label", ["word"] + STATEMENT_END)
            return GroundDecl(tuple(labels), span=self.span_from(start))

        if start.text == "let":
            self.advance()
            name = self.name("after 'let'")
            self.expect(TokenType.EQUALS, "after the bound name")
            expr = self.parse_expr()
            return LetElem(name, expr, span=self.span_from(start))

        if start.text == "ideal" and self.peek(1).type is not TokenType.LPAREN:
            self.advance()
            name = self.name("after 'ideal'")
            self.expect(TokenType.EQUALS, "after the ideal name")
            generators = self.parse_generator_list()
            return LetIdeal(name, generators, span=self.span_from(start))

        if start.text == "mode":
            self.advance()
            if not self.at(TokenType.WORD):
                raise self.error("Expected a mode", ["powerset", "fincof"])
            return ModeDecl(self.advance().text, span=self.span_from(start))

        if not NAME_RE.match(start.text):
            raise self.error("Expected a statement", ["ground", "let", "ideal", "mode", "verb"])
        if start.text in KEYWORDS:
            self.advance()
            raise self.error(f"Expected a name after '{start.text}'", ["name"])
        verb = self.advance().text
        args: List[Argument] = []
        while not self.at(TokenType.SEP, TokenType.EOF):
            args.append(self.parse_argument())
        return Command(verb, tuple(args), span=self.span_from(start))

    def parse_argument(self) -> Argument:
        if self.at_word("ideal") and self.peek(1).type is TokenType.LPAREN:
            start = self.advance()
            return IdealExpr(self.parse_generator_list(), span=self.span_from(start))
        if not self.at(TokenType.WORD, TokenType.LBRACE, TokenType.LPAREN):
            raise self.error("Expected an argument", ATOM_START + STATEMENT_END)
        return self.parse_expr()

    def parse_generator_list(self) -> Tuple[Expr, ...]:
        self.expect(TokenType.LPAREN, "to open the generator list")
        generators: List[Expr] = []
        if not self.at(TokenType.RPAREN):
            generators.append(self.parse_expr())
            while self.at(TokenType.COMMA):
                self.advance()
                generators.append(self.parse_expr())
        if not self.at(TokenType.RPAREN):
            raise self.error("Unclosed generator list", [TokenType.COMMA.value, TokenType.RPAREN.value, "'+'", "'*'"])
        self.advance()
        return tuple(generators)

    # Expressions

    def parse_expr(self) -> Expr:
        start = self.peek()
        left = self.parse_term()
        while self.at(TokenType.PLUS):
            self.advance()
            right = self.parse_term()
            left = BinOp("+", left, right, span=self.span_from(start))
        return left

    def parse_term(self) -> Expr:
        start = self.peek()
        left = self.parse_factor()
        while self.at(TokenType.STAR):
            self.advance()
            right = self.parse_factor()
            left = BinOp("*", left, right, span=self.span_from(start))
        return left

    def parse_factor(self) -> Expr:
        start = self.peek()
        expr = self.parse_atom()
        while self.at(TokenType.QUOTE):
            self.advance()
            expr = Complement(expr, span=self.span_from(start))
        return expr

    def parse_atom(self) -> Expr:
        start = self.peek()
        if start.type is TokenType.LPAREN:
            if self.depth >= MAX_NESTING:
                raise self.error(
                    f"Parentheses nested deeper than {MAX_NESTING}",
                    [t for t in ATOM_START if t != TokenType.LPAREN.value],
                )
            self.advance()
            self.depth += 1
            inner = self.parse_expr()
            self.depth -= 1
            if not self.at(TokenType.RPAREN):
                raise self.error("Unclosed parenthesis", [TokenType.RPAREN.value, "'+'", "'*'", "'''"])
            self.advance()
            return inner
        if start.type is TokenType.LBRACE:
            self.advance()
            labels: List[str] = []
            if self.at(TokenType.WORD):
                labels.append(self.advance().text)
                while self.at(TokenType.COMMA):
                    self.advance()
                    if not self.at(TokenType.WORD):
                        raise self.error("Expected a label", ["word"])
                    labels.append(self.advance().text)
            if not self.at(TokenType.RBRACE):
                raise self.error("Unclosed set literal", [TokenType.COMMA.value, TokenType.RBRACE.value])
            self.advance()
            return SetLiteral(tuple(labels), span=self.span_from(start))
        if start.type is TokenType.WORD:
            text = start.text
            if text == "0":
                self.advance()
                return Zero(span=self.span_from(start))
            if text == "1":
                self.advance()
                return One(span=self.span_from(start))
            if text.isdigit():
                self.advance()
                return Number(text, span=self.span_from(start))
            return Name(self.name("in expression"), span=self.span_from(start))
        raise self.error("Expected an expression", ATOM_START)


def parse(source: str) -> List[Statement]:
    """Parse a whole script or REPL line into statements."""
    return Parser(source).parse_program()


def parse_expression(source: str) -> Expr:
    parser = Parser(source)
    expr = parser.parse_expr()
    if not parser.at(TokenType.EOF):
        raise parser.error("Unexpected token after expression", [TokenType.EOF.value])
    return expr


# Pretty printing

PRECEDENCE = {"+": 1, "*": 2}
COMPLEMENT_PRECEDENCE = 3
ATOM_PRECEDENCE = 4


def _precedence(expr: Expr) -> int:
    if isinstance(expr, BinOp):
        return PRECEDENCE[expr.op]
    if isinstance(expr, Complement):
        return COMPLEMENT_PRECEDENCE
    return ATOM_PRECEDENCE


def _wrap(expr: Expr, needs_parens: bool) -> str:
    text = format_expr(expr)
    return f"({text})" if needs_parens else text


def format_expr(expr: Expr) -> str:
    if isinstance(expr, Name):
        return expr.name
    if isinstance(expr, Number):
        return expr.text
    if isinstance(expr, Zero):
        return "0"
    if isinstance(expr, One):
        return "1"
    if isinstance(expr, SetLiteral):
        return "{" + ",".join(expr.labels) + "}"
    if isinstance(expr, Complement):
        quotes = 0
        while isinstance(expr, Complement):
            quotes += 1
            expr = expr.operand
        return _wrap(expr, _precedence(expr) < COMPLEMENT_PRECEDENCE) + "'" * quotes
    if isinstance(expr, BinOp):
        # Unparenthesised left spine, printed bottom-up
        spine = [expr]
        while isinstance(spine[-1].left, BinOp) and PRECEDENCE[spine[-1].left.op] >= PRECEDENCE[spine[-1].op]:
            spine.append(spine[-1].left)
        bottom = spine[-1]
        text = _wrap(bottom.left, _precedence(bottom.left) < PRECEDENCE[bottom.op])
        for node in reversed(spine):
            right = _wrap(node.right, _precedence(node.right) <= PRECEDENCE[node.op])
            text = f"{text} {node.op} {right}"
        return text
    raise TypeError(f"not an expression: {expr!r}")


def _format_generators(generators: Sequence[Expr]) -> str:
    return "(" + ", ".join(format_expr(g) for g in generators) + ")"


def format_argument(arg: Argument) -> str:
    if isinstance(arg, IdealExpr):
        return "ideal" + _format_generators(arg.generators)
    return format_expr(arg)


def format_statement(stmt: Statement) -> str:
    if isinstance(stmt, GroundDecl):
        return " ".join(("ground",) + stmt.labels)
    if isinstance(stmt, LetElem):
        return f"let {stmt.name} = {format_expr(stmt.expr)}"
    if isinstance(stmt, LetIdeal):
        return f"ideal {stmt.name} = {_format_generators(stmt.generators)}"
    if isinstance(stmt, ModeDecl):
        return f"mode {stmt.mode}"
    if isinstance(stmt, Command):
        return " ".join([stmt.verb] + [format_argument(a) for a in stmt.args])
    raise TypeError(f"not a statement: {stmt!r}")


def format_program(statements: Sequence[Statement]) -> str:
    return "\n".join(format_statement(s) for s in statements)
