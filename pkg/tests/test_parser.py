import pytest

from src.cli import (
    MAX_NESTING,
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
    TokenType,
    Zero,
    format_expr,
    format_program,
    format_statement,
    parse,
    parse_expression,
    tokenize,
)
from src.error_handling import ParseException

CORPUS = """
ground a b c d
ground x1 x2 x3
ground
let u = {a,b}
let v = {}
let w = {b,c} + {c}
let p = u * v
let q = u + v * w
let r = (u + v) * w
let s = u'
let t = (u + v)'
let z = 0
let o = 1
let n = u''
let m = u * v'
let k = (u * v)'
let j = u + v + w
let i = u + (v + w)
let h = u * (v * w)
let g2 = (u * v) * w
let f = {a}' * {b}' + {c}
let e = 1 + u
let d = 0 * u
ideal I = ({a})
ideal J = ({a}, {b})
ideal K = ()
ideal L = (u + v, w', 1)
ideal M = ({a,b} * {b,c})
mode powerset
mode fincof
decompose I
decompose ideal({a,b})
decompose ideal()
radical J
member u I
member {a} + {b} ideal({a}, {b})
prime ideal({b,c})
maximal I
primary I
unique ideal({a})
lemma11 I J K
spectrum
quotient {a}
project {a,b}
table u'
atoms
atoms 3
stone 3
stone 3 101
stone 4 0110
stone 1 1
intdemo 360
intdemo 7
fincof witness 1 2
fincof witness
fincof member 3 {1,2}'
fincof fin {1,2,3}
fincof mx 1 {2}
fincof escape {1,2} {4}
verify all
show u
show ideal({a})
help
"""


def statements():
    return [line for line in CORPUS.strip().splitlines()]


class TestLexer:
    def test_token_types(self):
        types = [t.type for t in tokenize("let u = {a,b}'")]

        assert types == [
            TokenType.WORD, TokenType.WORD, TokenType.EQUALS, TokenType.LBRACE, TokenType.WORD,
            TokenType.COMMA, TokenType.WORD, TokenType.RBRACE, TokenType.QUOTE, TokenType.EOF,
        ]

    def test_columns(self):
        tokens = tokenize("let u = {a,b")

        assert [t.column for t in tokens] == [1, 5, 7, 9, 10, 11, 12, 13]

    def test_comment_and_separators(self):
        types = [t.type for t in tokenize("spectrum # all of it\natoms; help")]

        assert types.count(TokenType.SEP) == 2
        assert TokenType.WORD in types
        assert len([t for t in tokenize("# only a comment") if t.type is TokenType.WORD]) == 0

    def test_lines(self):
        tokens = tokenize("ground a\nlet u = {a}")

        assert tokens[-1].line == 2
        assert [t.text for t in tokens if t.line == 2][:2] == ["let", "u"]

    def test_bad_character(self):
        with pytest.raises(ParseException) as exc_info:
            tokenize("let u = {a} $ {b}")

        assert exc_info.value.column == 13


class TestParseStatements:
    def test_ground(self):
        assert parse("ground a b c") == [GroundDecl(("a", "b", "c"))]

    def test_let_precedence(self):
        (stmt,) = parse("let u = {a,b} + {b,c} * {c}")

        assert stmt == LetElem(
            "u",
            BinOp("+", SetLiteral(("a", "b")), BinOp("*", SetLiteral(("b", "c")), SetLiteral(("c",)))),
        )

    def test_left_associative(self):
        assert parse_expression("u + v + w") == BinOp("+", BinOp("+", Name("u"), Name("v")), Name("w"))

    def test_complement_binds_tightest(self):
        assert parse_expression("u * v'") == BinOp("*", Name("u"), Complement(Name("v")))
        assert parse_expression("(u * v)'") == Complement(BinOp("*", Name("u"), Name("v")))

    def test_constants_and_numbers(self):
        assert parse_expression("0") == Zero()
        assert parse_expression("1") == One()
        assert parse_expression("360") == Number("360")
        assert Number("360").value == 360

    def test_ideal_declaration(self):
        (stmt,) = parse("ideal I = ({a}, u)")

        assert stmt == LetIdeal("I", (SetLiteral(("a",)), Name("u")))

    def test_inline_ideal_argument(self):
        (stmt,) = parse("decompose ideal({a,b})")

        assert stmt == Command("decompose", (IdealExpr((SetLiteral(("a", "b")),)),))

    def test_mode(self):
        assert parse("mode fincof") == [ModeDecl("fincof")]

    def test_command_arguments(self):
        (stmt,) = parse("stone 3 101")

        assert stmt == Command("stone", (Number("3"), Number("101")))

    def test_separators(self):
        assert len(parse("ground a; let u = {a}\n\n spectrum ;")) == 3
        assert parse("") == []
        assert parse("# nothing here\n") == []

    def test_spans(self):
        (_, stmt) = parse("ground a\nlet u = {a}")

        assert stmt.span.line == 2
        assert stmt.span.column == 1
        assert stmt.expr.span.column == 9


class TestParseErrors:
    """Errors carry a position and the set of expected tokens"""

    def test_unclosed_set(self):
        with pytest.raises(ParseException) as exc_info:
            parse("let u = {a,b")

        error = exc_info.value
        assert (error.line, error.column) == (1, 13)
        assert "'}'" in error.expected
        assert error.exit_code == 1

    def test_missing_equals(self):
        with pytest.raises(ParseException) as exc_info:
            parse("let u {a}")

        assert exc_info.value.column == 7
        assert exc_info.value.expected == ["'='"]

    def test_keyword_is_not_a_name(self):
        with pytest.raises(ParseException):
            parse("let ground = {a}")

    def test_unclosed_parenthesis(self):
        with pytest.raises(ParseException) as exc_info:
            parse("let u = (u + v")

        assert "')'" in exc_info.value.expected

    def test_unclosed_generator_list(self):
        with pytest.raises(ParseException):
            parse("ideal I = ({a}, {b}")

    def test_error_on_second_line(self):
        with pytest.raises(ParseException) as exc_info:
            parse("ground a b\nlet u = + {a}")

        assert exc_info.value.line == 2
        assert exc_info.value.column == 9

    def test_dangling_operator(self):
        with pytest.raises(ParseException):
            parse_expression("u +")

    def test_trailing_garbage_in_expression(self):
        with pytest.raises(ParseException):
            parse_expression("u v")

    def test_nesting_limit(self):
        source = "let u = " + "(" * 400 + "0" + ")" * 400

        with pytest.raises(ParseException) as exc_info:
            parse(source)

        error = exc_info.value
        assert error.line == 1
        assert error.column == len("let u = ") + MAX_NESTING + 1
        assert "'('" not in error.expected
        assert "name" in error.expected

    def test_nesting_at_the_limit_parses(self):
        expr = parse_expression("(" * MAX_NESTING + "u" + ")" * MAX_NESTING)

        assert expr == Name("u")

    def test_ideal_is_not_a_verb(self):
        with pytest.raises(ParseException) as exc_info:
            parse("ideal (a)")

        assert exc_info.value.column == 7
        assert exc_info.value.expected == ["name"]


class TestPrettyPrinter:
    def test_minimal_parentheses(self):
        assert format_expr(parse_expression("(u + v) * w")) == "(u + v) * w"
        assert format_expr(parse_expression("u + (v * w)")) == "u + v * w"
        assert format_expr(parse_expression("u + (v + w)")) == "u + (v + w)"
        assert format_expr(parse_expression("(u + v)'")) == "(u + v)'"

    def test_set_literal(self):
        assert format_expr(parse_expression("{ a , b }")) == "{a,b}"

    def test_statements(self):
        assert format_statement(parse("ideal J = ({a},{b})")[0]) == "ideal J = ({a}, {b})"
        assert format_statement(parse("member u ideal( {a} )")[0]) == "member u ideal({a})"

    def test_corpus_is_large(self):
        assert len(statements()) >= 50

    @pytest.mark.parametrize("source", statements())
    def test_round_trip(self, source):
        tree = parse(source)
        printed = format_program(tree)

        assert parse(printed) == tree
        assert format_program(parse(printed)) == printed

    def test_whole_program_round_trip(self):
        tree = parse(CORPUS)

        assert parse(format_program(tree)) == tree

    def test_long_chains_print_without_recursion_limits(self):
        chain = " + ".join(["{a}"] * 1500)
        products = " * ".join(["u'"] * 1500)
        quotes = "u" + "'" * 1500

        assert format_expr(parse_expression(chain)) == chain
        assert format_expr(parse_expression(products)) == products
        assert format_expr(parse_expression(quotes)) == quotes

    def test_mixed_chain_keeps_parentheses(self):
        source = "(u + v) * w * x + y + z"

        assert format_expr(parse_expression(source)) == source
