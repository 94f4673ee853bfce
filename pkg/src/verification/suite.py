"""
Property checks run by `verify all`.

Each check returns the number of cases it examined and raises on the first
counterexample. Exhaustive checks stay within the configured oracle bounds;
randomized ones draw from a generator seeded with RANDOM_SEED.
"""

import logging
import time
from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from typing import Callable, Dict, List, Optional, Sequence

import numpy as np

from src.config import config
from src.error_handling.decorators import log_execution
from src.error_handling.exceptions import BoolRingBaseException, ExceptionFactory, VerificationFailedException
from src.fincof.algebra import (
    fc_add,
    fc_in_fin,
    fc_in_mx,
    fc_member_point,
    fc_mul,
    fc_one,
    fc_zero,
    fin_escape_witness,
    finite,
    random_element,
    probe_window,
    witness_nonzero,
)
from src.homomorphisms.generic_ring import (
    GenericBoolRing,
    find_atoms,
    maximal_principal_from_atom,
    stone_iso,
    vec_add,
    vec_mul,
    zero_is_intersection_of_maximals,
)
from src.homomorphisms.quotient import (
    evaluation_agrees,
    evaluation_kernel,
    from_function_table,
    kernel,
    lift,
    project,
    quotient,
    to_function_table,
)
from src.ideals.ideal import (
    ideal_from_generators,
    ideal_leq,
    intersect_all,
    member,
    membership_certificate,
    principal_ideal,
    reduction_witness,
    unit_ideal,
    zero_ideal,
)
from src.ideals.oracle import (
    definitional_radical,
    element_set,
    oracle_is_maximal,
    oracle_is_primary,
    oracle_is_prime,
    principal_closure,
)
from src.ideals.predicates import (
    containing_maximal,
    covering_combination,
    enumerate_ideals,
    is_maximal,
    is_primary,
    is_prime,
    is_proper,
    maximal_ideal_at,
)
from src.powerset.core import GroundSet, RingElem, add, elements, mul, new_ground
from src.spectrum.decomposition import decompose, lemma11_find, unique_decomposition_search
from src.spectrum.integers import integer_demo

logger = logging.getLogger("boolring.verification")


def _require(condition: bool, message: str, check: str) -> None:
    if not condition:
        raise VerificationFailedException(message, check=check)


def _ground(n: int) -> GroundSet:
    return new_ground([f"x{i}" for i in range(n)])


def _oracle_sizes() -> range:
    return range(1, min(config.ORACLE_MAX, config.ORACLE_HARD_CAP) + 1)


def _random_elems(rng: np.random.Generator, g: GroundSet, count: int) -> List[RingElem]:
    ring = GenericBoolRing(g.size)
    return [RingElem(g, v.bits) for v in ring.random_elements(rng, count)]


# Checks

def check_integer_demo(rng: np.random.Generator) -> int:
    _require(integer_demo(360) == [8, 9, 5], "(360) != (8) ∩ (9) ∩ (5)", "integer_demo")
    return 1


def check_zero_ideal_finite(rng: np.random.Generator) -> int:
    cases = 0
    for n in range(1, 11):
        g = _ground(n)
        d = decompose(zero_ideal(g))
        _require(len(d.factors) == n and d.verified and d.reduced, f"(0) over {n} points", "zero_ideal_finite")
        generators = [f.ideal.principal_gen.bits for f in d.factors]
        for u in range(1 << n):
            in_all = all(u & p == u for p in generators)
            _require(in_all == (u == 0), f"{u:#x} in every m_x over {n} points", "zero_ideal_finite")
        cases += 1 << n
    return cases


def check_oracle_equivalence(rng: np.random.Generator) -> int:
    cases = 0
    for n in _oracle_sizes():
        g = _ground(n)
        for ideal in enumerate_ideals(g):
            if is_proper(ideal):
                d = decompose(ideal)
                _require(intersect_all(g, d.factor_ideals()) == ideal, f"decompose {ideal}", "oracle_equivalence")
            _require(definitional_radical(ideal) == element_set(ideal), f"radical of {ideal}", "oracle_equivalence")
            _require(is_prime(ideal) == oracle_is_prime(ideal), f"prime {ideal}", "oracle_equivalence")
            _require(is_primary(ideal) == oracle_is_primary(ideal), f"primary {ideal}", "oracle_equivalence")
            _require(is_maximal(ideal) == oracle_is_maximal(ideal), f"maximal {ideal}", "oracle_equivalence")
            cases += 1
    return cases


def check_unique_decomposition(rng: np.random.Generator) -> int:
    cases = 0
    for n in _oracle_sizes():
        for ideal in enumerate_ideals(_ground(n)):
            if is_proper(ideal):
                _require(len(unique_decomposition_search(ideal)) == 1, f"unique {ideal}", "unique_decomposition")
                cases += 1
    return cases


def check_maximal_containment(rng: np.random.Generator) -> int:
    cases = 0
    for n in _oracle_sizes():
        g = _ground(n)
        for ideal in enumerate_ideals(g):
            if is_proper(ideal):
                _, m = containing_maximal(ideal)
                _require(ideal_leq(ideal, m) and is_maximal(m), f"maximal over {ideal}", "maximal_containment")
            cases += 1
        _require(covering_combination(unit_ideal(g)).total.is_one(), "covering sum", "maximal_containment")
    return cases


def check_ring_laws(rng: np.random.Generator) -> int:
    trials = config.RANDOM_TRIALS
    g = _ground(64)
    xs, ys = _random_elems(rng, g, trials), _random_elems(rng, g, trials)
    for a, b in zip(xs, ys):
        _require(add(a, a).is_zero(), f"{a} + {a} != 0", "ring_laws")
        _require(mul(a, a) == a, f"{a} not idempotent", "ring_laws")
        _require(mul(a, b) == mul(b, a), "multiplication not commutative", "ring_laws")
    cases = trials
    for dimension in (1, 2, 3, 8, 16, 32, 64):
        ring = GenericBoolRing(dimension)
        sample = ring.random_elements(rng, max(1, trials // 64))
        for a, b in zip(sample, reversed(sample)):
            _require(vec_add(a, a).is_zero(), f"{a} + {a} != 0", "ring_laws")
            _require(vec_mul(a, a) == a, f"{a} not idempotent", "ring_laws")
            _require(vec_mul(a, b) == vec_mul(b, a), "multiplication not commutative", "ring_laws")
            cases += 1
    return cases


def check_reduction_soundness(rng: np.random.Generator) -> int:
    trials = min(1000, config.RANDOM_TRIALS)
    exhaustive = min(config.ORACLE_MAX, config.ORACLE_HARD_CAP)
    for _ in range(trials):
        n = int(rng.integers(1, 17))
        g = _ground(n)
        gens = _random_elems(rng, g, int(rng.integers(0, 7)))
        ideal = ideal_from_generators(g, gens)
        membership_certificate(ideal)
        _require(all(member(x, ideal) for x in gens), "generator outside its ideal", "reduction_soundness")
        if len(gens) >= 2:
            a, b = _random_elems(rng, g, 2)
            reduction_witness(gens[0], gens[1], a, b)
        if n <= exhaustive:
            _require(
                principal_closure(g, gens) == element_set(ideal),
                f"span of {[str(x) for x in gens]} differs from {ideal}",
                "reduction_soundness",
            )
    return trials


def check_lemma11(rng: np.random.Generator) -> int:
    cases = 0
    for n in range(1, min(3, config.ORACLE_MAX) + 1):
        g = _ground(n)
        ideals = enumerate_ideals(g)
        for prime in (maximal_ideal_at(g, i) for i in range(n)):
            for size in range(1, 4):
                for family in combinations_with_replacement(ideals, size):
                    if not ideal_leq(intersect_all(g, family), prime):
                        continue
                    k = lemma11_find(prime, family)
                    _require(ideal_leq(family[k], prime), f"factor {k} not in {prime}", "lemma11")
                    cases += 1
    return cases


def check_quotients(rng: np.random.Generator) -> int:
    cases = 0
    for n in _oracle_sizes():
        g = _ground(n)
        everything = list(elements(g))
        for a in everything:
            q = quotient(g, a)
            kernel(q)
            images = {project(q, u).bits for u in everything}
            _require(len(images) == 1 << q.target.size, f"projection mod {a} not surjective", "quotients")
            for u in everything:
                _require(member(add(lift(q, project(q, u)), u), principal_ideal(a)), "coset lift", "quotients")
                for v in everything:
                    pu, pv = project(q, u), project(q, v)
                    _require(project(q, add(u, v)) == add(pu, pv), "projection not additive", "quotients")
                    _require(project(q, mul(u, v)) == mul(pu, pv), "projection not multiplicative", "quotients")
                    same = pu == pv
                    _require(same == member(add(u, v), principal_ideal(a)), "coset criterion", "quotients")
            cases += 1
    return cases


def check_function_tables(rng: np.random.Generator) -> int:
    cases = 0
    for n in _oracle_sizes():
        g = _ground(n)
        everything = list(elements(g))
        for a in everything:
            table = to_function_table(a)
            _require(from_function_table(g, table) == a and evaluation_agrees(a), f"table of {a}", "function_tables")
            for b in everything:
                other = to_function_table(b)
                _require(np.array_equal(to_function_table(add(a, b)), table ^ other), "χ not additive", "function_tables")
                _require(np.array_equal(to_function_table(mul(a, b)), table & other), "χ not multiplicative", "function_tables")
                cases += 1
        for label in g.labels:
            evaluation_kernel(g, label)
    return cases


def check_stone(rng: np.random.Generator) -> int:
    cases = 0
    for dimension in range(1, config.STONE_EXHAUSTIVE_MAX + 1):
        ring = GenericBoolRing(dimension)
        cases += stone_iso(ring).verify()
        if dimension <= 3:
            for atom in find_atoms(ring):
                maximal_principal_from_atom(ring, atom)
        _require(zero_is_intersection_of_maximals(ring), f"(0) in Z2^{dimension}", "stone")
    return cases


def check_fincof_soundness(rng: np.random.Generator) -> int:
    trials = config.RANDOM_TRIALS
    for _ in range(trials):
        a, b = random_element(rng), random_element(rng)
        s, p = fc_add(a, b), fc_mul(a, b)
        _require(fc_add(a, a) == fc_zero() and fc_mul(a, a) == a and p == fc_mul(b, a), "ring laws", "fincof")
        for x in probe_window(a, b):
            ma, mb = fc_member_point(x, a), fc_member_point(x, b)
            _require(fc_member_point(x, s) == ma ^ mb, f"{a} + {b} at {x}", "fincof")
            _require(fc_member_point(x, p) == ma & mb, f"{a} * {b} at {x}", "fincof")
            if fc_in_mx(x, p) and not fc_in_mx(x, a):
                _require(fc_in_mx(x, b), f"m_{x} not prime at {a}, {b}", "fincof")
    return trials


def check_fin_ideal(rng: np.random.Generator) -> int:
    trials = min(1000, config.RANDOM_TRIALS)
    _require(not fc_in_fin(fc_one()), "1 in Fin", "fin_ideal")
    for _ in range(trials):
        a = finite(random_element(rng).support)
        b = finite(random_element(rng).support)
        r = random_element(rng)
        _require(fc_in_fin(fc_add(a, b)) and fc_in_fin(fc_mul(r, a)), "Fin not an ideal", "fin_ideal")
        escape = fin_escape_witness([a, b])
        _require(fc_in_fin(escape), "escape witness outside Fin", "fin_ideal")
    return trials


def check_infinite_witness(rng: np.random.Generator) -> int:
    trials = min(1000, config.RANDOM_TRIALS)
    for _ in range(trials):
        size = int(rng.integers(0, 101))
        points = [int(p) for p in rng.choice(200, size=size, replace=False)]
        witness = witness_nonzero(points)
        _require(not witness.is_zero() and all(fc_in_mx(x, witness) for x in points), "witness", "infinite_witness")
    return trials


CHECKS: Dict[str, Callable[[np.random.Generator], int]] = {
    "integer_demo": check_integer_demo,
    "zero_ideal_finite": check_zero_ideal_finite,
    "oracle_equivalence": check_oracle_equivalence,
    "unique_decomposition": check_unique_decomposition,
    "maximal_containment": check_maximal_containment,
    "ring_laws": check_ring_laws,
    "reduction_soundness": check_reduction_soundness,
    "lemma11": check_lemma11,
    "quotients": check_quotients,
    "function_tables": check_function_tables,
    "stone": check_stone,
    "fincof_soundness": check_fincof_soundness,
    "fin_ideal": check_fin_ideal,
    "infinite_witness": check_infinite_witness,
}


@dataclass
class CheckResult:
    name: str
    passed: bool
    cases: int = 0
    duration: float = 0.0
    error: Optional[str] = None

    def to_dict(self) -> Dict[str, object]:
        return {
            "name": self.name,
            "passed": self.passed,
            "cases": self.cases,
            "duration": round(self.duration, 3),
            "error": self.error,
        }


@dataclass
class SuiteReport:
    results: List[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> int:
        return sum(1 for r in self.results if r.passed)

    @property
    def failed(self) -> int:
        return len(self.results) - self.passed

    def summary(self) -> str:
        lines = [
            f"{'PASS' if r.passed else 'FAIL'} {r.name} ({r.cases} cases)" + (f": {r.error}" if r.error else "")
            for r in self.results
        ]
        lines.append(f"{self.passed} passed, {self.failed} failed")
        return "\n".join(lines)

    def to_dict(self) -> Dict[str, object]:
        return {
            "passed": self.passed,
            "failed": self.failed,
            # durations vary run to run
            "checks": [{k: v for k, v in r.to_dict().items() if k != "duration"} for r in self.results],
        }


@log_execution(level=logging.INFO)
def run_suite(names: Optional[Sequence[str]] = None, seed: Optional[int] = None) -> SuiteReport:
    """Run the named checks (all by default) with one seeded generator each."""
    selected = list(CHECKS) if names is None else list(names)
    report = SuiteReport()
    for name in selected:
        if name not in CHECKS:
            raise VerificationFailedException(f"Unknown check '{name}'", check=name)
        rng = np.random.default_rng(config.RANDOM_SEED if seed is None else seed)
        started = time.perf_counter()
        try:
            cases = CHECKS[name](rng)
            result = CheckResult(name, True, cases)
        except Exception as e:
            error = e if isinstance(e, BoolRingBaseException) else ExceptionFactory.from_exception(e)
            logger.error(f"Check {name} failed: {error}")
            result = CheckResult(name, False, error=str(error))
        result.duration = time.perf_counter() - started
        logger.info(f"{name}: {'pass' if result.passed else 'fail'} in {result.duration:.3f}s")
        report.results.append(result)
    return report
