"""Exact Laurent/Puiseux series arithmetic and the named q-expansions."""

from fractions import Fraction

import pytest

from thetainterp import qseries as qs


def coeffs(s, lo, hi):
    return [qs.coefficient(s, e) for e in range(lo, hi)]


class TestArithmetic:
    def test_add_aligns_exponents(self):
        a = qs.make_series(-1, [1, 2, 3], 2)
        b = qs.make_series(0, [5, 7], 2)
        assert coeffs(qs.series_add(a, b), -1, 2) == [1, 7, 10]

    def test_mul_small_example(self):
        # (p^-1 + 1) * (p - p^2) = 1 - p^2, truncated consistently
        a = qs.make_series(-1, [1, 1], 5)
        b = qs.make_series(1, [1, -1], 5)
        prod = qs.series_mul(a, b)
        assert coeffs(prod, 0, 3) == [1, 0, -1]

    def test_scale_and_shift(self):
        a = qs.make_series(0, [1, 2], 4)
        s = qs.series_shift(qs.series_scale(a, Fraction(1, 2)), 3)
        assert qs.coefficient(s, 3) == Fraction(1, 2)
        assert qs.coefficient(s, 4) == 1

    def test_invert_roundtrip(self):
        a = qs.make_series(-2, [3, 1, 4, 1, 5, 9], 8)
        one = qs.series_mul(a, qs.series_invert(a))
        assert qs.coefficient(one, 0) == 1
        for e in range(1, 5):
            assert qs.coefficient(one, e) == 0

    def test_pow_matches_repeated_mul(self):
        a = qs.make_series(0, [1, 1, 1], 9)
        p3 = qs.series_pow(a, 3)
        m3 = qs.series_mul(qs.series_mul(a, a), a)
        assert coeffs(p3, 0, 6) == coeffs(m3, 0, 6)

    def test_coefficient_beyond_order_raises(self):
        a = qs.make_series(0, [1], 3)
        with pytest.raises(qs.SeriesError):
            qs.coefficient(a, 3)

    def test_invert_zero_leading_raises(self):
        with pytest.raises(qs.SeriesError):
            qs.series_invert(qs.zero_series(4))


class TestNamedSeries:
    def test_theta3(self):
        s = qs.modular_series("theta3", 10)
        assert coeffs(s, 0, 10) == [1, 2, 0, 0, 2, 0, 0, 0, 0, 2]

    def test_theta2_fourth_power(self):
        s = qs.modular_series("theta2_4", 8)
        assert coeffs(s, 0, 8) == [0, 16, 0, 64, 0, 96, 0, 128]

    def test_theta4_fourth_power(self):
        s = qs.modular_series("theta4_4", 6)
        assert coeffs(s, 0, 6) == [1, -8, 24, -32, 24, -48]

    def test_lambda_and_j(self):
        lam = qs.modular_series("lambda", 5)
        assert coeffs(lam, 1, 5) == [16, -128, 704, -3072]
        j = qs.modular_series("J", 5)
        assert coeffs(j, 1, 5) == [1, -24, 300, -2624]

    def test_j_inverse(self):
        jinv = qs.modular_series("J_inv", 3)
        assert coeffs(jinv, -1, 3) == [1, 24, 276, 2048]
        one = qs.series_mul(qs.modular_series("J", 6), jinv)
        assert qs.coefficient(one, 0) == 1
        assert qs.coefficient(one, 1) == 0

    def test_jacobi_identity_to_order_64(self):
        order = 64
        t3 = qs.modular_series("theta3", order)
        t3_4 = qs.series_pow(t3, 4)
        rhs = qs.series_add(
            qs.modular_series("theta2_4", order), qs.modular_series("theta4_4", order)
        )
        diff = qs.series_add(t3_4, qs.series_scale(rhs, -1))
        for e in range(0, order):
            assert qs.coefficient(diff, e) == 0

    def test_one_minus_2lambda_squared(self):
        # (1 - 2 lambda)^2 = 1 - 64 J
        s = qs.modular_series("one_minus_2lambda", 12)
        sq = qs.series_mul(s, s)
        j = qs.modular_series("J", 12)
        want = qs.series_add(qs.constant_series(1, 12), qs.series_scale(j, -64))
        for e in range(0, 12):
            assert qs.coefficient(sq, e) == qs.coefficient(want, e)

    def test_unknown_name_raises(self):
        with pytest.raises(qs.SeriesError):
            qs.modular_series("nope", 4)


class TestJson:
    def test_roundtrip(self):
        a = qs.make_series(-3, [Fraction(1, 3), 0, 5, Fraction(-7, 2)], 4)
        b = qs.series_from_json(qs.series_to_json(a))
        assert b.min_exp == a.min_exp
        assert b.order == a.order
        assert coeffs(b, -3, 4) == coeffs(a, -3, 4)

    def test_exactness_survives(self):
        a = qs.make_series(0, [Fraction(10**30, 3)], 1)
        b = qs.series_from_json(qs.series_to_json(a))
        assert qs.coefficient(b, 0) == Fraction(10**30, 3)
