from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from dumont.series import (
    SeriesError,
    TruncatedSeries as S,
    catalan_series,
    q_recurrence,
    q_summation,
    series_arith,
    sqrt_series,
)

coeff_st = st.lists(st.builds(Fraction, st.integers(-50, 50), st.integers(1, 7)), min_size=6, max_size=6)


def ser(cs):
    return S.from_coeffs(cs, 5)


class TestArithmetic:
    def test_product(self):
        assert series_arith(S.from_coeffs([1, 1], 4), S.from_coeffs([1, -1], 4), "mul").integers() == [1, 0, -1, 0, 0]

    def test_geometric(self):
        assert (1 / S.from_coeffs([1, -1], 4)).integers() == [1, 1, 1, 1, 1]

    def test_zero_constant_divisor(self):
        with pytest.raises(SeriesError):
            series_arith(S.constant(1, 3), S.monomial(1, 3), "div")

    def test_order_mismatch(self):
        with pytest.raises(SeriesError):
            S.constant(1, 3) + S.constant(1, 4)

    def test_unknown_op(self):
        with pytest.raises(ValueError):
            series_arith(S.constant(1, 2), S.constant(1, 2), "pow")

    def test_rational_exact(self):
        s = S.rational([1], [3, -1], 3)
        assert list(s) == [Fraction(1, 3), Fraction(1, 9), Fraction(1, 27), Fraction(1, 81)]
        with pytest.raises(SeriesError):
            s.integers()

    def test_json_round_trip(self):
        s = S.rational([1, 2], [3, -1], 6)
        assert S.from_json(s.to_json()) == s

    def test_substitutions(self):
        s = S.from_coeffs([1, 2, 3, 4], 3)
        assert s.shift(2).integers() == [0, 0, 1, 2]
        assert s.scale_argument(2).integers() == [1, 0, 2, 0]
        assert s.reflect().integers() == [1, -2, 3, -4]
        assert (s.even_part() + s.odd_part()) == s

    def test_power(self):
        s = S.from_coeffs([1, 1], 5)
        assert (s ** 3).integers() == [1, 3, 3, 1, 0, 0]
        assert (s ** 0).integers() == [1, 0, 0, 0, 0, 0]

    @settings(max_examples=40)
    @given(coeff_st, coeff_st, coeff_st)
    def test_ring_laws(self, a, b, c):
        a, b, c = ser(a), ser(b), ser(c)
        assert a * (b + c) == a * b + a * c
        assert (a * b) * c == a * (b * c)
        assert a - a == S.constant(0, 5)

    @settings(max_examples=40)
    @given(coeff_st, coeff_st)
    def test_division_inverts_multiplication(self, a, b):
        a, b = ser(a), ser(b)
        if b[0] != 0:
            assert (a / b) * b == a


class TestSqrt:
    def test_one_minus_4x(self):
        s = sqrt_series(S.from_coeffs([1, -4], 3))
        assert s.integers() == [1, -2, -2, -4]
        assert (s * s).integers() == [1, -4, 0, 0]

    def test_one(self):
        assert sqrt_series(S.constant(1, 4)) == S.constant(1, 4)

    def test_constant_rule(self):
        a = S.from_coeffs([1, 1, 1], 6)
        assert sqrt_series(a) ** 2 == a
        with pytest.raises(SeriesError):
            sqrt_series(S.from_coeffs([4, 1], 3))


class TestCatalan:
    def test_values(self):
        assert catalan_series(4).integers() == [1, 1, 2, 5, 14]
        assert catalan_series(0).integers() == [1]

    def test_functional_equation(self):
        c = catalan_series(20)
        assert c == 1 + (c * c).shift(1)

    def test_closed_form(self):
        # C(x) = (1 - sqrt(1-4x)) / (2x), so 1 - 2x C = sqrt(1-4x)
        c = catalan_series(15)
        assert 1 - 2 * c.shift(1) == sqrt_series(S.from_coeffs([1, -4], 15))


class TestQ:
    def test_f2(self):
        assert q_recurrence(2, "F", 6).integers() == [1, 0, 1, 0, 0, 0, 0]

    def test_f3(self):
        assert q_recurrence(3, "F", 8) == S.rational([1, 0, 0, 0, 1], [1, 0, -1], 8)
        assert q_recurrence(3, "F", 6).integers() == [1, 0, 1, 0, 2, 0, 2]

    def test_g2(self):
        assert q_recurrence(2, "G", 10) == S.rational([1], [1, 0, -1], 10)

    def test_g4(self):
        even = q_recurrence(4, "G", 20).integers()[::2]
        assert even[:6] == [1, 1, 2, 5, 11, 23]
        assert all(even[n] == 3 * 2 ** (n - 2) - 1 for n in range(2, 11))

    def test_initial(self):
        assert q_recurrence(0, "F", 3).integers() == [0, 0, 0, 0]
        assert q_recurrence(1, "F", 3).integers() == [1, 0, 0, 0]
        assert q_recurrence(0, "G", 3).integers() == [1, 0, 0, 0]

    def test_errors(self):
        with pytest.raises(SeriesError):
            q_recurrence(-1, "F", 3)
        with pytest.raises(ValueError):
            q_recurrence(2, "H", 3)
        with pytest.raises(SeriesError):
            q_summation(0, "F", 3)

    @pytest.mark.parametrize("init", ["F", "G"])
    @pytest.mark.parametrize("r", range(2, 11))
    def test_resubstitution(self, init, r):
        N = 30
        x2 = S.monomial(2, N)
        one = S.constant(1, N)
        prev, prev2 = q_recurrence(r - 1, init, N), q_recurrence(r - 2, init, N)
        rhs = series_arith(one, series_arith(series_arith(x2, prev, "mul"), series_arith(one, series_arith(x2, prev2, "mul"), "sub"), "div"), "add")
        assert q_recurrence(r, init, N) == rhs

    @pytest.mark.parametrize("init", ["F", "G"])
    @pytest.mark.parametrize("r", range(0, 11))
    def test_even(self, init, r):
        s = q_recurrence(r, init, 30)
        assert s.odd_part() == S.constant(0, 30)
        assert all(c.denominator == 1 for c in s)

    @pytest.mark.parametrize("init", ["F", "G"])
    @pytest.mark.parametrize("r", range(1, 7))
    def test_summation_form(self, init, r):
        assert q_summation(r, init, 20) == q_recurrence(r, init, 20)

    @pytest.mark.parametrize("init", ["F", "G"])
    def test_stabilizes_to_catalan(self, init):
        c2 = catalan_series(24).scale_argument(2)
        for d in range(0, 25, 2):
            tail = [q_recurrence(r, init, 24)[d] for r in range(d // 2 + 2, d // 2 + 6)]
            assert tail == [c2[d]] * 4, d

    def test_catalan_values(self):
        assert [comb(2 * n, n) // (n + 1) for n in range(8)] == catalan_series(7).integers()
