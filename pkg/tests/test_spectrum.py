from itertools import combinations
from math import gcd

import pytest

from src.error_handling import (
    HypothesisFailedException,
    ImproperIdealException,
    NotPrimeException,
    OracleBoundExceededException,
    OutOfRangeException,
    UnverifiedDecompositionException,
    ZeroRingException,
)
from src.ideals import (
    ideal_from_generators,
    intersect_all,
    principal_ideal,
    unit_ideal,
    zero_ideal,
)
from src.powerset import RingElem, elem, new_ground
from src.spectrum import (
    assemble,
    check_window,
    decompose,
    divisibility_agrees,
    format_integer_demo,
    integer_demo,
    integer_radicals,
    lemma11_find,
    max_ideal,
    maximal_ideals,
    maximal_ideals_containing,
    unique_decomposition_search,
    verify_reduced,
)


def ground(n):
    return new_ground([chr(ord("a") + i) for i in range(n)])


def ideal_of(g, members):
    return principal_ideal(elem(g, members))


class TestMaximalIdeals:
    """The maximal spectrum m_x = P(X - {x})"""

    def test_spectrum_of_three_points(self, g3):
        spectrum = maximal_ideals(g3)

        assert [d.point for d in spectrum] == ["a", "b", "c"]
        assert [str(d.ideal) for d in spectrum] == ["({b,c})", "({a,c})", "({a,b})"]
        assert str(spectrum[0]) == "m_a = ({b,c})"

    def test_single_point(self):
        g1 = new_ground(["x"])

        assert maximal_ideals(g1)[0].ideal == zero_ideal(g1)

    def test_zero_ring(self):
        with pytest.raises(ZeroRingException):
            maximal_ideals(new_ground([]))

    def test_containing(self, g3):
        assert [d.point for d in maximal_ideals_containing(ideal_of(g3, "a"))] == ["b", "c"]
        assert maximal_ideals_containing(unit_ideal(g3)) == []

    def test_descriptor_dict(self, g3):
        assert max_ideal(g3, "b").to_dict() == {
            "point": "b",
            "principal": {"ground": ["a", "b", "c"], "members": ["a", "c"]},
        }


class TestDecompose:
    """Reduced primary decomposition of proper ideals"""

    def test_zero_ideal(self, g3):
        d = decompose(zero_ideal(g3))

        assert d.points() == ["a", "b", "c"]
        assert d.verified and d.reduced
        assert str(d) == "({}) = m_a ∩ m_b ∩ m_c"

    def test_two_point_ideal_in_four(self):
        g4 = ground(4)

        assert decompose(ideal_of(g4, "ab")).points() == ["c", "d"]

    def test_maximal_is_its_own_decomposition(self, g3):
        assert decompose(max_ideal(g3, "a").ideal).points() == ["a"]

    def test_single_point_ground(self):
        g1 = new_ground(["x"])
        d = decompose(zero_ideal(g1))

        assert d.points() == ["x"]
        assert d.reduced

    def test_unit_ideal_rejected(self, g3):
        with pytest.raises(ImproperIdealException) as exc_info:
            decompose(unit_ideal(g3))

        assert exc_info.value.exit_code == 8

    def test_zero_ring_rejected(self):
        with pytest.raises(ZeroRingException):
            decompose(zero_ideal(new_ground([])))

    def test_to_dict_shape(self, g3):
        data = decompose(ideal_of(g3, "a")).to_dict()

        assert set(data) == {"target", "factors", "reduced", "verified"}
        assert [f["point"] for f in data["factors"]] == ["b", "c"]

    @pytest.mark.parametrize("n", range(1, 9))
    def test_factor_count_law(self, n):
        g = ground(n)
        for bits in range(0, g.full_mask, max(1, g.full_mask // 17)):
            ideal = principal_ideal(RingElem(g, bits))

            assert len(decompose(ideal).factors) == n - bin(bits).count("1")


class TestVerifyReduced:
    def test_duplicate_factor(self, g3):
        m_a, m_b = max_ideal(g3, "a"), max_ideal(g3, "b")
        d = assemble(ideal_of(g3, "c"), [m_a, m_a, m_b])

        assert d.verified
        assert not verify_reduced(d)
        assert not d.reduced

    def test_wrong_target_is_unverified(self, g3):
        d = assemble(ideal_of(g3, "c"), maximal_ideals(g3))

        assert not d.verified
        with pytest.raises(UnverifiedDecompositionException) as exc_info:
            verify_reduced(d)

        assert exc_info.value.exit_code == 10

    def test_distinct_maximals_are_irredundant(self, g3):
        d = assemble(zero_ideal(g3), list(reversed(maximal_ideals(g3))))

        assert d.verified
        assert verify_reduced(d)
        assert d.reduced


class TestLemma11:
    def test_first_factor(self, g3):
        m_a, m_b = max_ideal(g3, "a").ideal, max_ideal(g3, "b").ideal

        assert lemma11_find(m_a, [m_a, m_b]) == 0
        assert lemma11_find(m_b, [m_a, m_b]) == 1

    def test_zero_ideal_family(self, g3):
        assert lemma11_find(max_ideal(g3, "b").ideal, [zero_ideal(g3)]) == 0

    def test_hypothesis_failed(self, g3):
        m_a, m_b, m_c = (d.ideal for d in maximal_ideals(g3))

        with pytest.raises(HypothesisFailedException):
            lemma11_find(m_c, [m_a, m_b])

    def test_not_prime(self, g3):
        with pytest.raises(NotPrimeException) as exc_info:
            lemma11_find(ideal_of(g3, "a"), [zero_ideal(g3)])

        assert exc_info.value.exit_code == 11

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_exhaustive(self, n):
        g = ground(n)
        ideals = [principal_ideal(RingElem(g, bits)) for bits in range(1 << n)]
        primes = [d.ideal for d in maximal_ideals(g)]
        for prime in primes:
            for size in (1, 2, 3):
                for family in combinations(ideals, size):
                    meet = intersect_all(g, list(family))
                    if meet.principal_gen.bits & ~prime.principal_gen.bits:
                        continue
                    k = lemma11_find(prime, list(family))

                    assert family[k].principal_gen.bits & ~prime.principal_gen.bits == 0


class TestUniqueness:
    def test_zero_ideal(self, g3):
        found = unique_decomposition_search(zero_ideal(g3))

        assert len(found) == 1
        assert found[0].points() == ["a", "b", "c"]

    def test_single_generator(self):
        g2 = ground(2)

        assert unique_decomposition_search(ideal_of(g2, "a"))[0].points() == ["b"]
        assert unique_decomposition_search(max_ideal(g2, "a").ideal)[0].points() == ["a"]

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_every_proper_ideal(self, n):
        g = ground(n)
        for bits in range(g.full_mask):
            assert len(unique_decomposition_search(principal_ideal(RingElem(g, bits)))) == 1

    def test_every_ideal_is_meet_of_containing_maximals(self):
        g = ground(4)
        for bits in range(1 << 4):
            ideal = principal_ideal(RingElem(g, bits))
            containing = [d.ideal for d in maximal_ideals_containing(ideal)]

            assert intersect_all(g, containing) == ideal

    def test_bound(self):
        with pytest.raises(OracleBoundExceededException):
            unique_decomposition_search(zero_ideal(ground(6)))

    def test_improper(self, g3):
        with pytest.raises(ImproperIdealException):
            unique_decomposition_search(ideal_from_generators(g3, [g3.one()]))


class TestIntegerDemo:
    """(m) as an intersection of prime-power ideals"""

    @pytest.mark.parametrize("m,expected", [(360, [8, 9, 5]), (7, [7]), (100, [4, 25]), (2, [2])])
    def test_examples(self, m, expected):
        assert integer_demo(m) == expected

    def test_format(self):
        assert format_integer_demo(360, [8, 9, 5]) == "(360) = (8) ∩ (9) ∩ (5)"

    def test_radicals(self):
        assert integer_radicals(360) == [2, 3, 5]

    def test_out_of_range(self):
        with pytest.raises(OutOfRangeException):
            integer_demo(1)
        with pytest.raises(OutOfRangeException):
            integer_demo(10 ** 12 + 1)

    def test_large_value_skips_window_check(self):
        m = 2 ** 20 * 3 ** 10

        assert integer_demo(m) == [2 ** 20, 3 ** 10]

    def test_factors_coprime(self):
        for m in range(2, 500):
            factors = integer_demo(m)
            product = 1
            for q in factors:
                product *= q

            assert product == m
            assert all(gcd(p, q) == 1 for p, q in combinations(factors, 2))

    def test_divisibility_window(self):
        assert divisibility_agrees(12, [4, 3], 1000)
        assert not divisibility_agrees(12, [2, 3], 1000)

    def test_window_covers_multiples_of_m(self):
        assert check_window(360) == 10 ** 4
        assert check_window(50_000) == 150_000

    def test_wrong_factors_caught_above_default_window(self):
        m = 50_000

        assert divisibility_agrees(m, [16, 3125], check_window(m))
        assert not divisibility_agrees(m, [32, 3125], check_window(m))

    def test_cross_check_uses_the_widened_window(self, monkeypatch):
        import src.spectrum.integers as integers

        windows = []
        real = integers.divisibility_agrees

        def spy(m, factors, window):
            windows.append(window)
            return real(m, factors, window)

        monkeypatch.setattr(integers, "divisibility_agrees", spy)

        assert integer_demo(999_983) == [999_983]
        assert windows == [3 * 999_983]
