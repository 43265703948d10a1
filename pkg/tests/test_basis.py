"""Evaluation of the interpolation basis functions."""

import math

import pytest

from thetainterp import basis
from thetainterp.modular import theta_constants


class TestDeltaProperty:
    def test_even_plus_examples(self):
        assert abs(basis.eval_b("+", 2, math.sqrt(2)).value - 1) < 1e-10
        assert abs(basis.eval_b("+", 2, math.sqrt(5)).value) < 1e-10
        assert abs(basis.eval_b("+", 0, 0.0).value - 1) < 1e-10

    def test_even_minus_examples(self):
        assert abs(basis.eval_b("-", 3, math.sqrt(3)).value - 1) < 1e-10
        assert abs(basis.eval_b("-", 3, 1.0).value) < 1e-10

    def test_odd_examples(self):
        r2 = math.sqrt(2)
        assert abs(basis.eval_d("+", 2, r2).value - r2) < 1e-10
        assert abs(basis.eval_d("-", 1, 1.0).value - 1) < 1e-10
        assert abs(basis.eval_d("-", 1, 2.0).value) < 1e-10

    def test_even_minus_n0_is_zero(self):
        rep = basis.eval_b("-", 0, 1.234)
        assert rep.value == 0.0
        assert rep.method == "closed_form"


class TestSymmetry:
    def test_evenness(self):
        a = basis.eval_b("+", 1, 0.77).value
        b = basis.eval_b("+", 1, -0.77).value
        assert a == b

    def test_oddness(self):
        a = basis.eval_d("+", 1, 0.77).value
        b = basis.eval_d("+", 1, -0.77).value
        assert a == -b

    def test_d_vanishes_at_origin(self):
        assert basis.eval_d("-", 3, 0.0).value == 0.0


class TestMethods:
    def test_contour_laplace_agreement(self):
        for n in range(0, 9):
            x = math.sqrt(n + 3.5)
            c = basis.eval_b("+", n, x, abs_tol=1e-9, method="contour")
            l = basis.eval_b("+", n, x, abs_tol=1e-9, method="laplace")
            assert abs(c.value - l.value) < 1e-7
            assert c.method == "contour"
            assert l.method == "laplace"

    def test_laplace_requires_decay(self):
        with pytest.raises(basis.BasisError):
            basis.eval_b("+", 4, 1.0, method="laplace")

    def test_automatic_method_selection(self):
        assert basis.eval_b("+", 1, 0.5).method == "contour"
        assert basis.eval_b("+", 1, 3.0).method == "laplace"

    def test_imag_residual_is_small(self):
        rep = basis.eval_b("+", 3, 1.3, abs_tol=1e-10)
        assert rep.imag_residual < 1e-8

    def test_error_estimate_honest(self):
        # the delta property gives an exact reference value
        rep = basis.eval_b("+", 5, math.sqrt(5), abs_tol=1e-8)
        assert abs(rep.value - 1) <= max(rep.abs_error_estimate, 1e-8)

    def test_invalid_eps(self):
        with pytest.raises(basis.BasisError):
            basis.eval_b("x", 1, 0.5)
        with pytest.raises(basis.BasisError):
            basis.eval_d("-", 0, 0.5)


class TestClosedForm:
    def test_d0_values(self):
        assert basis.d0_closed_form(0.0) == 0.0
        x = 0.5
        want = math.sin(math.pi * x * x) / math.sinh(math.pi * x)
        assert abs(basis.d0_closed_form(x) - want) == 0.0
        assert basis.d0_closed_form(300.0) == 0.0  # underflow guard

    def test_contour_matches_closed_form(self):
        for x in (0.3, 0.9, 1.6, 2.4):
            rep = basis.eval_d("+", 0, x, abs_tol=1e-11, method="contour")
            assert abs(rep.value - basis.d0_closed_form(x)) < 1e-10

    def test_small_x_limit(self):
        # d_0^+(x)/x -> pi * 0 / pi = ... the ratio sin(pi x^2)/sinh(pi x)
        # behaves like x for small x
        x = 1e-3
        assert abs(basis.d0_closed_form(x) / x - 1.0) < 1e-5


class TestCombinations:
    def test_eval_a_values_at_node(self):
        a, ahat = basis.eval_a(2, math.sqrt(2), abs_tol=1e-10)
        assert abs(a.value - 1) < 1e-9
        assert abs(ahat.value) < 1e-9

    def test_eval_a_at_zero(self):
        a, ahat = basis.eval_a(0, 0.0, abs_tol=1e-10)
        assert abs(a.value - 0.5) < 1e-9
        assert abs(ahat.value - 0.5) < 1e-9


class TestGeneratingFunctions:
    def test_f_minus_at_zero_is_one_minus_theta(self):
        tau = 1.3j
        got = basis.generating_F("even", "-", tau, 0.0, 60, abs_tol=1e-9)
        want = 1 - theta_constants(tau).t3
        assert abs(complex(got) - want) < 1e-8

    def test_f_plus_at_zero_is_one(self):
        got = basis.generating_F("even", "+", 1.5j, 0.0, 60, abs_tol=1e-9)
        assert abs(complex(got) - 1) < 1e-8

    def test_tail_bound_reported(self):
        got = basis.generating_F("even", "+", 2j, 0.7, 40, abs_tol=1e-8)
        assert got.tail_bound < 1e-6
        assert got.terms_evaluated <= 41

    def test_requires_upper_half_plane(self):
        with pytest.raises(basis.BasisError):
            basis.generating_F("even", "+", 1.0 + 0j, 0.5, 10)


class TestGrowth:
    def test_growth_constant_modest(self):
        C = basis.growth_constant("even")
        assert 0.1 < C < 3.0
