import numpy as np
import pytest
from hypothesis import given, strategies as st

from src.error_handling import HypothesisFailedException, InvalidInputException
from src.fincof import (
    FinCofElem,
    Kind,
    cofinite,
    fc_add,
    fc_complement,
    fc_in_fin,
    fc_in_mx,
    fc_leq,
    fc_member_point,
    fc_mul,
    fc_one,
    fc_zero,
    fin_escape_witness,
    finite,
    least_fresh_point,
    probe_window,
    random_element,
    witness_nonzero,
)

supports = st.frozensets(st.integers(min_value=0, max_value=40), max_size=8)
fincof_elems = st.builds(FinCofElem, st.sampled_from(list(Kind)), supports)


class TestElements:
    def test_zero_and_one(self):
        assert fc_zero().is_zero()
        assert fc_one().is_one()
        assert str(fc_zero()) == "F{}"
        assert str(fc_one()) == "C{}"

    def test_negative_point_rejected(self):
        with pytest.raises(InvalidInputException):
            finite([-1])

    def test_dict_round_trip(self):
        u = cofinite([3, 1])

        assert u.to_dict() == {"kind": "cofinite", "support": [1, 3]}
        assert FinCofElem.from_dict(u.to_dict()) == u

    def test_bad_kind(self):
        with pytest.raises(InvalidInputException):
            FinCofElem.from_dict({"kind": "countable", "support": []})


class TestOperations:
    """Kind-case arithmetic"""

    def test_add_finite(self):
        assert fc_add(finite([1, 2]), finite([2, 3])) == finite([1, 3])

    def test_add_cofinite(self):
        assert fc_add(cofinite([1]), cofinite([2])) == finite([1, 2])

    def test_add_mixed(self):
        assert fc_add(finite([1]), cofinite([2])) == cofinite([1, 2])

    def test_mul(self):
        assert fc_mul(cofinite([1]), cofinite([2])) == cofinite([1, 2])
        assert fc_mul(cofinite([7]), finite([1, 7])) == finite([1])
        assert fc_mul(finite([1, 2]), finite([2, 3])) == finite([2])

    def test_complement(self):
        assert fc_complement(finite([5])) == cofinite([5])
        assert fc_complement(fc_one()) == fc_zero()

    def test_leq(self):
        assert fc_leq(finite([1]), cofinite([2]))
        assert not fc_leq(cofinite([2]), finite([1]))

    def test_operators(self):
        a, b = finite([1, 2]), cofinite([2])

        assert a + b == fc_add(a, b)
        assert a * b == fc_mul(a, b)


class TestMembership:
    def test_member_point(self):
        assert fc_member_point(3, cofinite([1, 2])) == 1
        assert fc_member_point(1, cofinite([1, 2])) == 0
        assert fc_member_point(2, finite([2])) == 1

    def test_in_fin(self):
        assert fc_in_fin(finite([1, 2, 3]))
        assert not fc_in_fin(fc_one())
        assert fc_in_fin(fc_mul(cofinite([7]), finite([1, 7])))

    def test_in_mx(self):
        assert fc_in_mx(1, finite([2, 3]))
        assert not fc_in_mx(1, cofinite([2]))
        assert fc_in_mx(1, fc_zero())


class TestWitnesses:
    """No finite family of m_x meets in zero; Fin is not finitely generated"""

    def test_witness_examples(self):
        assert witness_nonzero({1, 2}) == finite([3])
        assert witness_nonzero(set()) == finite([0])
        assert witness_nonzero(range(100)) == finite([100])

    def test_least_fresh_point(self):
        assert least_fresh_point([]) == 0
        assert least_fresh_point([0, 5]) == 6

    @given(st.frozensets(st.integers(min_value=0, max_value=500), max_size=100))
    def test_witness_is_common_nonzero_member(self, points):
        witness = witness_nonzero(points)

        assert not witness.is_zero()
        assert all(fc_in_mx(x, witness) for x in points)

    def test_escape_witness(self):
        gens = [finite([1, 2]), finite([4])]
        escape = fin_escape_witness(gens)

        assert fc_in_fin(escape)
        assert escape == finite([5])
        assert not fc_leq(escape, finite([1, 2, 4]))

    def test_escape_witness_needs_fin(self):
        with pytest.raises(HypothesisFailedException):
            fin_escape_witness([finite([1]), cofinite([])])

    def test_escape_witness_of_nothing(self):
        assert fin_escape_witness([]) == finite([0])


@pytest.mark.property
class TestAlgebraLaws:
    @given(fincof_elems, fincof_elems)
    def test_pointwise_soundness(self, a, b):
        for x in probe_window(a, b):
            assert fc_member_point(x, fc_add(a, b)) == fc_member_point(x, a) ^ fc_member_point(x, b)
            assert fc_member_point(x, fc_mul(a, b)) == fc_member_point(x, a) & fc_member_point(x, b)

    @given(fincof_elems)
    def test_boolean_ring_laws(self, a):
        assert fc_add(a, a).is_zero()
        assert fc_mul(a, a) == a
        assert fc_add(a, fc_complement(a)).is_one()

    @given(fincof_elems, fincof_elems)
    def test_commutative(self, a, b):
        assert fc_add(a, b) == fc_add(b, a)
        assert fc_mul(a, b) == fc_mul(b, a)

    @given(fincof_elems, fincof_elems, st.integers(min_value=0, max_value=45))
    def test_mx_is_prime(self, a, b, x):
        if fc_in_mx(x, fc_mul(a, b)) and not fc_in_mx(x, a):
            assert fc_in_mx(x, b)

    @given(supports, supports, fincof_elems)
    def test_fin_is_an_ideal(self, s, t, r):
        a, b = finite(s), finite(t)

        assert fc_in_fin(fc_add(a, b))
        assert fc_in_fin(fc_mul(r, a))

    def test_random_elements_are_seeded(self):
        rng_a, rng_b = np.random.default_rng(3), np.random.default_rng(3)

        assert [random_element(rng_a) for _ in range(20)] == [random_element(rng_b) for _ in range(20)]
