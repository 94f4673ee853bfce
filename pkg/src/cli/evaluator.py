"""
Statement evaluation for the ring expression language.

A Session holds the current ground set, the mode (powerset or fincof) and the
name bindings. evaluate() runs one statement and returns a Report; errors
leave the session unchanged and carry the statement's source span.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple, Union

from pydantic import BaseModel

from src.config import config
from src.error_handling.exceptions import (
    BoolRingBaseException,
    ExceptionFactory,
    InvalidInputException,
    NameResolutionException,
    OutOfRangeException,
)
from src.fincof.algebra import (
    FinCofElem,
    fc_add,
    fc_complement,
    fc_in_fin,
    fc_in_mx,
    fc_member_point,
    fc_mul,
    fc_one,
    fc_zero,
    fin_escape_witness,
    finite,
    witness_nonzero,
)
from src.homomorphisms.generic_ring import GenericBoolRing, find_atoms, maximal_principal_from_atom, stone_iso
from src.homomorphisms.quotient import QuotientMap, project, quotient, to_function_table
from src.ideals.ideal import Ideal, describe, ideal_from_generators, member
from src.ideals.predicates import is_maximal, is_primary, is_prime, radical
from src.powerset.core import GroundSet, RingElem, add, atoms, complement, elem, mul, new_ground
from src.schemas import DecompositionModel, ReportModel, SpanModel, validate_payload
from src.spectrum.decomposition import decompose, lemma11_find, maximal_ideals, unique_decomposition_search
from src.spectrum.integers import format_integer_demo, integer_demo, integer_radicals
from src.verification.suite import run_suite
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
from .parser import format_statement

logger = logging.getLogger("boolring.cli")

POWERSET = "powerset"
FINCOF = "fincof"

Value = Union[RingElem, Ideal, FinCofElem]


@dataclass
class Session:
    ground: Optional[GroundSet] = None
    mode: str = POWERSET
    bindings: Dict[str, Value] = field(default_factory=dict)
    quotient: Optional[QuotientMap] = None

    def reset_bindings(self) -> None:
        self.bindings.clear()
        self.quotient = None


@dataclass
class Report:
    statement: str
    text: str
    data: Optional[Dict[str, Any]] = None
    ok: bool = True
    exit_code: int = 0
    span: Optional[Any] = None
    model: Optional[BaseModel] = None

    def to_model(self) -> ReportModel:
        span = SpanModel(**self.span.to_dict()) if self.span is not None else None
        return ReportModel(statement=self.statement, ok=self.ok, text=self.text, data=self.data, span=span)


def error_report(statement: str, error: BoolRingBaseException) -> Report:
    """Report for a failed statement; JSON mode prints it instead of a traceback."""
    span = error.context.span
    report = Report(statement, str(error), ok=False, exit_code=error.exit_code, span=span)
    return report


def error_model(report: Report, error: BoolRingBaseException) -> ReportModel:
    model = report.to_model()
    model.error = {
        "code": error.error_code,
        "category": error.category.value,
        "exit_code": error.exit_code,
        "message": error.message,
        **({"expected": error.context.additional_data["expected"]} if "expected" in error.context.additional_data else {}),
    }
    return model


# Expression evaluation

def _require_ground(session: Session) -> GroundSet:
    if session.ground is None:
        raise NameResolutionException("No ground set declared; start with 'ground <labels>'", name="ground")
    return session.ground


def _lookup(session: Session, name: str) -> Value:
    try:
        return session.bindings[name]
    except KeyError:
        raise NameResolutionException(f"Name '{name}' is not bound", name=name) from None


def _fold(
    expr: Expr,
    leaf: Callable[[Expr], Any],
    add_op: Callable[[Any, Any], Any],
    mul_op: Callable[[Any, Any], Any],
    complement_op: Callable[[Any], Any],
) -> Any:
    """
    Evaluate the left spine of a +/* chain and runs of complements in a loop;
    only operands on the right and parenthesised groups recurse.
    """
    spine: List[BinOp] = []
    while isinstance(expr, BinOp):
        spine.append(expr)
        expr = expr.left
    quotes = 0
    while isinstance(expr, Complement):
        quotes += 1
        expr = expr.operand
    value = leaf(expr)
    if quotes % 2:
        value = complement_op(value)
    for node in reversed(spine):
        op = add_op if node.op == "+" else mul_op
        value = op(value, leaf(node.right))
    return value


def eval_element(session: Session, expr: Expr) -> RingElem:
    """Evaluate an expression in P(X)."""
    if isinstance(expr, (BinOp, Complement)):
        return _fold(expr, lambda e: eval_element(session, e), add, mul, complement)
    if isinstance(expr, Name):
        value = _lookup(session, expr.name)
        if not isinstance(value, RingElem):
            raise NameResolutionException(f"'{expr.name}' is not an element of P(X)", name=expr.name)
        return value
    g = _require_ground(session)
    if isinstance(expr, SetLiteral):
        return elem(g, expr.labels)
    if isinstance(expr, Zero):
        return g.zero()
    if isinstance(expr, One):
        return g.one()
    raise InvalidInputException(f"'{expr.text}' is a number, not a set", field="expression")


def eval_fincof(session: Session, expr: Expr) -> FinCofElem:
    """Evaluate an expression in the finite-cofinite algebra; set literals hold naturals."""
    if isinstance(expr, (BinOp, Complement)):
        return _fold(expr, lambda e: eval_fincof(session, e), fc_add, fc_mul, fc_complement)
    if isinstance(expr, Name):
        value = _lookup(session, expr.name)
        if not isinstance(value, FinCofElem):
            raise NameResolutionException(f"'{expr.name}' is not a finite-cofinite element", name=expr.name)
        return value
    if isinstance(expr, SetLiteral):
        return finite(_natural(label) for label in expr.labels)
    if isinstance(expr, Zero):
        return fc_zero()
    if isinstance(expr, One):
        return fc_one()
    raise InvalidInputException(f"'{expr.text}' is a number, not a set", field="expression")


def eval_value(session: Session, expr: Expr) -> Union[RingElem, FinCofElem]:
    if session.mode == FINCOF:
        return eval_fincof(session, expr)
    return eval_element(session, expr)


def eval_ideal(session: Session, arg: Argument) -> Ideal:
    if isinstance(arg, IdealExpr):
        g = _require_ground(session)
        return ideal_from_generators(g, [eval_element(session, e) for e in arg.generators])
    if isinstance(arg, Name):
        value = _lookup(session, arg.name)
        if not isinstance(value, Ideal):
            raise NameResolutionException(f"'{arg.name}' is not an ideal", name=arg.name)
        return value
    raise InvalidInputException("Expected an ideal name or ideal(...)", field="ideal")


def _natural(text: str) -> int:
    if not text.isdigit():
        raise InvalidInputException(f"'{text}' is not a natural number", field="point")
    return int(text)


def eval_int(arg: Argument) -> int:
    if isinstance(arg, Number):
        return arg.value
    if isinstance(arg, Zero):
        return 0
    if isinstance(arg, One):
        return 1
    raise InvalidInputException("Expected a natural number", field="argument")


def _word(arg: Argument) -> str:
    if isinstance(arg, Name):
        return arg.name
    raise InvalidInputException("Expected a keyword", field="argument")


def _arity(args: Sequence[Argument], low: int, high: Optional[int], usage: str) -> None:
    if len(args) < low or (high is not None and len(args) > high):
        raise InvalidInputException(f"usage: {usage}", field="arguments")


def _show(value: Any) -> str:
    if isinstance(value, Ideal):
        return describe(value)
    return str(value)


def _payload(value: Any) -> Dict[str, Any]:
    if isinstance(value, Ideal):
        return validate_payload("ideal", value.to_dict())
    if isinstance(value, FinCofElem):
        return validate_payload("fincof", value.to_dict())
    return validate_payload("element", value.to_dict())


def _bool(flag: bool) -> str:
    return "true" if flag else "false"


# Verbs

Handler = Callable[[Session, Command], Tuple[str, Union[None, Dict[str, Any], BaseModel]]]


def verb_decompose(session: Session, cmd: Command):
    _arity(cmd.args, 1, 1, "decompose I")
    d = decompose(eval_ideal(session, cmd.args[0]))
    lines = [str(d)] + [f"  {f}" for f in d.factors]
    lines.append(f"reduced={_bool(d.reduced)} verified={_bool(d.verified)}")
    return "\n".join(lines), DecompositionModel.model_validate(d.to_dict())


def verb_radical(session: Session, cmd: Command):
    _arity(cmd.args, 1, 1, "radical I")
    ideal = eval_ideal(session, cmd.args[0])
    r = radical(ideal)
    return f"sqrt{ideal} = {r}", {"radical": _payload(r)}


def verb_member(session: Session, cmd: Command):
    _arity(cmd.args, 2, 2, "member u I")
    u = eval_element(session, cmd.args[0])
    result = member(u, eval_ideal(session, cmd.args[1]))
    return _bool(result), {"member": result}


def _predicate(name: str, test: Callable[[Ideal], bool]) -> Handler:
    def handler(session: Session, cmd: Command):
        _arity(cmd.args, 1, 1, f"{name} I")
        result = test(eval_ideal(session, cmd.args[0]))
        return _bool(result), {name: result}

    return handler


def verb_unique(session: Session, cmd: Command):
    _arity(cmd.args, 1, 1, "unique I")
    found = unique_decomposition_search(eval_ideal(session, cmd.args[0]))
    return f"{len(found)} reduced decomposition: {found[0]}", {"count": len(found), "points": found[0].points()}


def verb_lemma11(session: Session, cmd: Command):
    _arity(cmd.args, 1, None, "lemma11 P I1 I2 ...")
    prime = eval_ideal(session, cmd.args[0])
    family = [eval_ideal(session, a) for a in cmd.args[1:]]
    k = lemma11_find(prime, family)
    return f"factor {k + 1} {family[k]} ⊆ {prime}", {"index": k}


def verb_spectrum(session: Session, cmd: Command):
    _arity(cmd.args, 0, 0, "spectrum")
    spectrum = maximal_ideals(_require_ground(session))
    return "\n".join(str(d) for d in spectrum), {"maximal_ideals": [d.to_dict() for d in spectrum]}


def verb_quotient(session: Session, cmd: Command):
    _arity(cmd.args, 1, 1, "quotient A")
    g = _require_ground(session)
    q = quotient(g, eval_element(session, cmd.args[0]))
    session.quotient = q
    return str(q), validate_payload("quotient", q.to_dict())


def verb_project(session: Session, cmd: Command):
    _arity(cmd.args, 1, 1, "project u")
    if session.quotient is None:
        raise NameResolutionException("No quotient in effect; run 'quotient A' first", name="quotient")
    v = project(session.quotient, eval_element(session, cmd.args[0]))
    return str(v), _payload(v)


def verb_table(session: Session, cmd: Command):
    _arity(cmd.args, 1, 1, "table u")
    u = eval_element(session, cmd.args[0])
    table = [int(b) for b in to_function_table(u)]
    return " ".join(f"{x}:{b}" for x, b in zip(u.ground.labels, table)), {"table": table}


def verb_atoms(session: Session, cmd: Command):
    _arity(cmd.args, 0, 1, "atoms [n]")
    if cmd.args:
        found = [str(a) for a in find_atoms(GenericBoolRing(eval_int(cmd.args[0])))]
    else:
        found = [str(a) for a in atoms(_require_ground(session))]
    return " ".join(found), {"atoms": found}


def _arg_text(arg: Argument) -> str:
    if isinstance(arg, Number):
        return arg.text
    if isinstance(arg, (Zero, One)):
        return "0" if isinstance(arg, Zero) else "1"
    raise InvalidInputException("Expected a 0/1 coordinate string", field="element")


def verb_stone(session: Session, cmd: Command):
    _arity(cmd.args, 1, 2, "stone n [coordinates]")
    ring = GenericBoolRing(eval_int(cmd.args[0]))
    stone = stone_iso(ring)
    data: Dict[str, Any] = stone.to_dict()
    lines = [f"Z2^{ring.dimension} ≅ P({{{','.join(stone.target.labels)}}})"]
    if len(cmd.args) == 2:
        b = ring.parse(_arg_text(cmd.args[1]))
        image = stone.apply(b)
        lines.append(f"{b} -> {image}")
        data["image"] = image.members()
        if b.popcount() == 1:
            generator = maximal_principal_from_atom(ring, b)
            lines.append(f"maximal principal ideal ({generator})")
            data["maximal_generator"] = str(generator)
    return "\n".join(lines), data


def verb_intdemo(session: Session, cmd: Command):
    _arity(cmd.args, 1, 1, "intdemo m")
    m = eval_int(cmd.args[0])
    factors = integer_demo(m)
    return format_integer_demo(m, factors), {"m": m, "factors": factors, "radicals": integer_radicals(m)}


def _points(args: Sequence[Argument]) -> List[int]:
    return [eval_int(a) for a in args]


def verb_fincof(session: Session, cmd: Command):
    _arity(cmd.args, 1, None, "fincof witness|member|fin|mx|escape ...")
    sub, rest = _word(cmd.args[0]), cmd.args[1:]
    if sub == "witness":
        w = witness_nonzero(_points(rest))
        return f"{w} is nonzero and lies in every requested m_x", {"witness": w.to_dict()}
    if sub == "member":
        _arity(rest, 2, 2, "fincof member x u")
        bit = fc_member_point(eval_int(rest[0]), eval_fincof(session, rest[1]))
        return str(bit), {"member": bit}
    if sub == "fin":
        _arity(rest, 1, 1, "fincof fin u")
        result = fc_in_fin(eval_fincof(session, rest[0]))
        return _bool(result), {"in_fin": result}
    if sub == "mx":
        _arity(rest, 2, 2, "fincof mx x u")
        result = fc_in_mx(eval_int(rest[0]), eval_fincof(session, rest[1]))
        return _bool(result), {"in_mx": result}
    if sub == "escape":
        w = fin_escape_witness([eval_fincof(session, a) for a in rest])
        return f"{w} is in Fin but outside the ideal generated", {"witness": w.to_dict()}
    raise InvalidInputException(f"Unknown fincof command '{sub}'", field="fincof")


def verb_verify(session: Session, cmd: Command):
    _arity(cmd.args, 1, 1, "verify all")
    if _word(cmd.args[0]) != "all":
        raise InvalidInputException("usage: verify all", field="verify")
    suite = run_suite()
    return suite.summary(), suite.to_dict()


def verb_show(session: Session, cmd: Command):
    _arity(cmd.args, 1, 1, "show name")
    arg = cmd.args[0]
    if isinstance(arg, IdealExpr):
        value: Value = eval_ideal(session, arg)
    elif isinstance(arg, Name) and isinstance(session.bindings.get(arg.name), Ideal):
        value = session.bindings[arg.name]
    else:
        value = eval_value(session, arg)
    return _show(value), _payload(value)


def verb_help(session: Session, cmd: Command):
    lines = ["statements: ground <labels> | let u = expr | ideal I = (e, ...) | mode powerset|fincof"]
    lines += [f"  {usage}" for usage in USAGE.values()]
    return "\n".join(lines), None


VERBS: Dict[str, Handler] = {
    "decompose": verb_decompose,
    "radical": verb_radical,
    "member": verb_member,
    "prime": _predicate("prime", is_prime),
    "maximal": _predicate("maximal", is_maximal),
    "primary": _predicate("primary", is_primary),
    "unique": verb_unique,
    "lemma11": verb_lemma11,
    "spectrum": verb_spectrum,
    "quotient": verb_quotient,
    "project": verb_project,
    "table": verb_table,
    "atoms": verb_atoms,
    "stone": verb_stone,
    "intdemo": verb_intdemo,
    "fincof": verb_fincof,
    "verify": verb_verify,
    "show": verb_show,
    "help": verb_help,
}

USAGE = {
    "decompose": "decompose I",
    "radical": "radical I",
    "member": "member u I",
    "prime": "prime I",
    "maximal": "maximal I",
    "primary": "primary I",
    "unique": "unique I",
    "lemma11": "lemma11 P I1 I2 ...",
    "spectrum": "spectrum",
    "quotient": "quotient A",
    "project": "project u",
    "table": "table u",
    "atoms": "atoms [n]",
    "stone": "stone n [coordinates]",
    "intdemo": "intdemo m",
    "fincof": "fincof witness x1 x2 ... | member x u | fin u | mx x u | escape u v ...",
    "verify": "verify all",
    "show": "show name",
    "help": "help",
}


# Statements

def _declare_ground(session: Session, stmt: GroundDecl) -> Tuple[str, Dict[str, Any]]:
    if len(stmt.labels) > config.GROUND_MAX:
        raise OutOfRangeException(
            f"Ground set has {len(stmt.labels)} labels, more than the limit of {config.GROUND_MAX}",
            value=len(stmt.labels),
            field="ground",
        )
    session.ground = new_ground(stmt.labels)
    session.reset_bindings()
    return f"X = {{{','.join(stmt.labels)}}}", {"ground": list(stmt.labels)}


def _bind(session: Session, name: str, value: Value) -> Tuple[str, Dict[str, Any]]:
    session.bindings[name] = value
    return f"{name} = {_show(value)}", {"name": name, "value": _payload(value)}


def _dispatch(session: Session, stmt: Statement) -> Tuple[str, Union[None, Dict[str, Any], BaseModel]]:
    if isinstance(stmt, GroundDecl):
        return _declare_ground(session, stmt)
    if isinstance(stmt, ModeDecl):
        if stmt.mode not in (POWERSET, FINCOF):
            raise InvalidInputException(f"Unknown mode '{stmt.mode}'; use powerset or fincof", field="mode")
        session.mode = stmt.mode
        session.reset_bindings()
        return f"mode {stmt.mode}", {"mode": stmt.mode}
    if isinstance(stmt, LetElem):
        return _bind(session, stmt.name, eval_value(session, stmt.expr))
    if isinstance(stmt, LetIdeal):
        if session.mode != POWERSET:
            raise InvalidInputException("Ideals are only available in powerset mode", field="mode")
        g = _require_ground(session)
        return _bind(session, stmt.name, ideal_from_generators(g, [eval_element(session, e) for e in stmt.generators]))
    handler = VERBS.get(stmt.verb)
    if handler is None:
        raise NameResolutionException(f"Unknown command '{stmt.verb}'", name=stmt.verb)
    return handler(session, stmt)


def evaluate(session: Session, stmt: Statement) -> Report:
    """Run one statement; module errors are re-raised with the statement's span."""
    try:
        text = format_statement(stmt)
        output, data = _dispatch(session, stmt)
    except BoolRingBaseException as e:
        raise e.with_span(stmt.span)
    except Exception as e:
        raise ExceptionFactory.from_exception(e).with_span(stmt.span) from e
    logger.debug(f"Evaluated: {text}")
    model = None
    if isinstance(data, BaseModel):
        model, data = data, data.model_dump(mode="json")
    report = Report(text, output, data, span=stmt.span, model=model)
    if isinstance(stmt, Command) and stmt.verb == "verify" and data and data.get("failed"):
        report.ok = False
        report.exit_code = 3
    return report
