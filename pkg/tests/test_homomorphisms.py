import numpy as np
import pytest
from hypothesis import given, strategies as st

from src.error_handling import (
    GroundMismatchException,
    InvalidInputException,
    LengthMismatchException,
    NotAnAtomException,
    OracleBoundExceededException,
    ZeroRingException,
)
from src.homomorphisms import (
    GenericBoolRing,
    atom_labels,
    evaluation_agrees,
    evaluation_kernel,
    find_atoms,
    from_function_table,
    is_atom,
    kernel,
    lift,
    maximal_principal_from_atom,
    project,
    quotient,
    stone_iso,
    to_function_table,
    vec_add,
    vec_complement,
    vec_leq,
    vec_mul,
    zero_is_intersection_of_maximals,
)
from src.ideals import element_set, ideal_from_generators
from src.powerset import RingElem, add, elem, mul, new_ground

G5 = new_ground(["a", "b", "c", "d", "e"])
subsets5 = st.integers(min_value=0, max_value=G5.full_mask).map(lambda bits: RingElem(G5, bits))


class TestQuotient:
    """P(X)/(A) as P(X - A)"""

    def test_target_ground(self, g3):
        q = quotient(g3, elem(g3, "a"))

        assert q.target.labels == ("b", "c")
        assert q.to_dict()["target"] == ["b", "c"]

    def test_project(self, g3):
        q = quotient(g3, elem(g3, "a"))

        assert project(q, elem(g3, "ab")).members() == ["b"]
        assert project(q, elem(g3, "a")).is_zero()

    def test_lift_is_a_section(self, g3):
        q = quotient(g3, elem(g3, "b"))
        for v in (q.target.zero(), q.target.one()):
            assert project(q, lift(q, v)) == v

    def test_kernel_is_the_ideal(self, g3):
        a = elem(g3, "ac")
        q = quotient(g3, a)

        assert kernel(q) == element_set(ideal_from_generators(g3, [a]))

    def test_quotient_by_zero_and_one(self, g3):
        assert quotient(g3, g3.zero()).target.labels == g3.labels
        assert quotient(g3, g3.one()).target.size == 0

    def test_ground_mismatch(self, g3):
        with pytest.raises(GroundMismatchException):
            quotient(g3, elem(new_ground(["a"]), "a"))

    def test_kernel_bound(self):
        g6 = new_ground([f"x{i}" for i in range(6)])

        with pytest.raises(OracleBoundExceededException):
            kernel(quotient(g6, g6.zero()))

    @pytest.mark.property
    @given(subsets5, subsets5, subsets5)
    def test_projection_is_a_homomorphism(self, a, u, v):
        q = quotient(G5, a)

        assert project(q, add(u, v)) == add(project(q, u), project(q, v))
        assert project(q, mul(u, v)) == mul(project(q, u), project(q, v))
        assert project(q, G5.one()).is_one()


class TestFunctionTables:
    """P(X) ≅ Fun(X, Z2)"""

    def test_to_table(self, g3):
        table = to_function_table(elem(g3, "ac"))

        assert table.dtype == np.uint8
        assert table.tolist() == [1, 0, 1]

    def test_from_table(self, g3):
        assert from_function_table(g3, [0, 1, 1]) == elem(g3, "bc")
        assert from_function_table(g3, np.array([1, 0, 0], dtype=np.uint8)) == elem(g3, "a")

    def test_length_mismatch(self, g3):
        with pytest.raises(LengthMismatchException) as exc_info:
            from_function_table(g3, [1, 0])

        assert exc_info.value.exit_code == 14

    def test_not_bits(self, g3):
        with pytest.raises(InvalidInputException):
            from_function_table(g3, [1, 2, 0])

    def test_evaluation(self, g3):
        assert evaluation_agrees(elem(g3, "b"))

    def test_evaluation_kernel_is_maximal(self, g3):
        assert evaluation_kernel(g3, "a") == frozenset({0b000, 0b010, 0b100, 0b110})

    @pytest.mark.property
    @given(subsets5, subsets5)
    def test_table_arithmetic(self, u, v):
        assert from_function_table(G5, to_function_table(u) ^ to_function_table(v)) == add(u, v)
        assert from_function_table(G5, to_function_table(u) & to_function_table(v)) == mul(u, v)


class TestGenericRing:
    """Z2^n with coordinate strings"""

    def test_parse_and_print(self):
        r = GenericBoolRing(3)
        b = r.parse("100")

        assert b.bits == 1
        assert str(b) == "100"
        assert str(r.element(0b110)) == "011"

    def test_parse_rejects_bad_text(self):
        with pytest.raises(InvalidInputException):
            GenericBoolRing(3).parse("12")

    def test_arithmetic(self):
        r = GenericBoolRing(3)
        a, b = r.parse("110"), r.parse("011")

        assert str(vec_add(a, b)) == "101"
        assert str(vec_mul(a, b)) == "010"
        assert str(vec_complement(a)) == "001"
        assert vec_leq(r.parse("010"), a)

    def test_units_and_field(self):
        assert GenericBoolRing(1).is_field()
        assert not GenericBoolRing(2).is_field()
        for dimension in range(1, 5):
            assert GenericBoolRing(dimension).units() == [GenericBoolRing(dimension).one()]
        with pytest.raises(OracleBoundExceededException):
            GenericBoolRing(5).units()

    def test_mismatched_rings(self):
        with pytest.raises(GroundMismatchException):
            vec_add(GenericBoolRing(2).one(), GenericBoolRing(3).one())

    def test_random_elements_are_seeded(self):
        r = GenericBoolRing(12)
        first = r.random_elements(np.random.default_rng(7), 20)
        second = r.random_elements(np.random.default_rng(7), 20)

        assert first == second
        assert all(b.bits <= r.full_mask for b in first)


class TestAtoms:
    def test_find_atoms(self):
        assert [str(a) for a in find_atoms(GenericBoolRing(3))] == ["100", "010", "001"]
        assert [str(a) for a in find_atoms(GenericBoolRing(1))] == ["1"]

    def test_zero_ring(self):
        with pytest.raises(ZeroRingException):
            find_atoms(GenericBoolRing(0))

    def test_dimension_bound(self, restore_config):
        restore_config.override(STONE_MAX=4)

        with pytest.raises(OracleBoundExceededException) as exc_info:
            find_atoms(GenericBoolRing(5))

        assert exc_info.value.exit_code == 9
        assert len(find_atoms(GenericBoolRing(5), bound=5)) == 5

    def test_huge_dimension_is_refused_before_building_atoms(self):
        with pytest.raises(OracleBoundExceededException):
            find_atoms(GenericBoolRing(3_000_000))

    def test_is_atom(self):
        r = GenericBoolRing(3)

        assert is_atom(r.parse("010"))
        assert not is_atom(r.parse("110"))
        assert not is_atom(r.zero())

    def test_atom_labels(self):
        assert atom_labels(GenericBoolRing(3)) == ["e1", "e2", "e3"]


class TestStone:
    """b -> {atoms under b}"""

    def test_apply(self):
        stone = stone_iso(GenericBoolRing(3))

        assert stone.apply(stone.ring.parse("101")).members() == ["e1", "e3"]
        assert stone.apply(stone.ring.one()).is_one()

    def test_dimension_two_unit(self):
        stone = stone_iso(GenericBoolRing(2))

        assert stone.apply(stone.ring.parse("11")).members() == ["e1", "e2"]

    @pytest.mark.parametrize("dimension", [1, 2, 3, 4, 8, 16])
    def test_verifies(self, dimension):
        stone = stone_iso(GenericBoolRing(dimension))

        assert stone.verify(trials=100, seed=1) > 0

    def test_bound(self):
        with pytest.raises(OracleBoundExceededException):
            stone_iso(GenericBoolRing(17))

    def test_to_dict(self):
        assert stone_iso(GenericBoolRing(2)).to_dict() == {"dimension": 2, "atoms": ["10", "01"]}

    def test_maximal_principal_from_atom(self):
        r = GenericBoolRing(3)

        assert str(maximal_principal_from_atom(r, r.parse("100"))) == "011"
        r1 = GenericBoolRing(1)
        assert str(maximal_principal_from_atom(r1, r1.parse("1"))) == "0"

    def test_not_an_atom(self):
        r = GenericBoolRing(3)

        with pytest.raises(NotAnAtomException) as exc_info:
            maximal_principal_from_atom(r, r.parse("110"))

        assert exc_info.value.exit_code == 15

    @pytest.mark.parametrize("dimension", [1, 2, 4, 10])
    def test_zero_is_intersection_of_maximals(self, dimension):
        assert zero_is_intersection_of_maximals(GenericBoolRing(dimension))
