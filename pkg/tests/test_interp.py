"""Reconstruction from sqrt(n) samples."""

import cmath
import math

import pytest

from thetainterp import interp


class TestSampleSet:
    def test_validation(self):
        with pytest.raises(interp.InterpError):
            interp.SampleSet("even", 3, (1, 2, 3), (1, 2, 3, 4))
        with pytest.raises(interp.InterpError):
            interp.SampleSet("odd", 2, (1, 2), (1, 2))  # missing deriv_pair
        with pytest.raises(interp.InterpError):
            interp.SampleSet("sideways", 1, (1, 2), (1, 2))

    def test_json_roundtrip_even(self):
        s = interp.gaussian_samples("even", 0.3 + 1.1j, 12)
        t = interp.sampleset_from_json(interp.sampleset_to_json(s))
        assert t.parity == "even" and t.N == 12
        assert max(abs(a - b) for a, b in zip(s.f_samples, t.f_samples)) == 0
        assert max(abs(a - b) for a, b in zip(s.fhat_samples, t.fhat_samples)) == 0

    def test_json_roundtrip_odd(self):
        s = interp.gaussian_samples("odd", 2j, 6)
        t = interp.sampleset_from_json(interp.sampleset_to_json(s))
        assert t.deriv_pair is not None
        assert abs(t.deriv_pair[0] - s.deriv_pair[0]) == 0
        assert abs(t.deriv_pair[1] - s.deriv_pair[1]) == 0

    def test_linear_combinations(self):
        a = interp.gaussian_samples("even", 1j, 8)
        b = interp.gaussian_samples("even", 2j, 8)
        c = a.scaled(2.0) + b.scaled(-1j)
        assert abs(c.f_samples[3] - (2 * a.f_samples[3] - 1j * b.f_samples[3])) == 0


class TestEvenReconstruction:
    def test_gaussian_node_exactness(self):
        s = interp.gaussian_samples("even", 1j, 40)
        for n in (0, 1, 2, 5):
            got = interp.reconstruct_even(s, math.sqrt(n), abs_tol=1e-8)
            assert abs(got.value - s.f_samples[n]) < 1e-7

    def test_gaussian_off_node(self):
        tau = 0.5j
        s = interp.gaussian_samples("even", tau, 40)
        for x in (0.4, 1.3, 2.2):
            want = cmath.exp(1j * math.pi * tau * x * x)
            got = interp.reconstruct_even(s, x, abs_tol=1e-8)
            assert abs(got.value - want) < 1e-7

    def test_linearity(self):
        a = interp.gaussian_samples("even", 1j, 30)
        b = interp.gaussian_samples("even", 1.5j, 30)
        x = 0.8
        va = interp.reconstruct_even(a, x, abs_tol=1e-10).value
        vb = interp.reconstruct_even(b, x, abs_tol=1e-10).value
        vc = interp.reconstruct_even(a.scaled(3.0) + b.scaled(-2j), x,
                                     abs_tol=1e-10).value
        assert abs(vc - (3 * va - 2j * vb)) < 1e-8

    def test_parity_mismatch(self):
        s = interp.gaussian_samples("odd", 1j, 10)
        with pytest.raises(interp.InterpError):
            interp.reconstruct_even(s, 0.5)


class TestOddReconstruction:
    def test_gaussian_off_node(self):
        tau = 1j + 0.4
        s = interp.gaussian_samples("odd", tau, 40)
        for x in (0.4, 1.3, 2.2):
            want = x * cmath.exp(1j * math.pi * tau * x * x)
            got = interp.reconstruct_odd(s, x, abs_tol=1e-8)
            assert abs(got.value - want) < 1e-7

    def test_value_at_zero_is_zero(self):
        s = interp.gaussian_samples("odd", 1j, 20)
        got = interp.reconstruct_odd(s, 0.0, abs_tol=1e-9)
        assert abs(got.value) < 1e-8

    def test_parity_mismatch(self):
        s = interp.gaussian_samples("even", 1j, 10)
        with pytest.raises(interp.InterpError):
            interp.reconstruct_odd(s, 0.5)


class TestGaussianSamples:
    def test_transform_consistency(self):
        # fhat samples must be the closed-form transform of the f samples
        tau = 0.7 + 0.9j
        s = interp.gaussian_samples("even", tau, 5)
        fac = (-1j * tau) ** (-0.5)
        for n in range(6):
            want = fac * cmath.exp(1j * math.pi * (-1 / tau) * n)
            assert abs(s.fhat_samples[n] - want) < 1e-15

    def test_requires_upper_half_plane(self):
        with pytest.raises(interp.InterpError):
            interp.gaussian_samples("even", 1.0 + 0j, 5)


class TestR3Identity:
    def test_odd_gaussian_closed_form_derivatives(self):
        tau = 1j
        fac = -1j * (-1j * tau) ** (-1.5)
        f = lambda x: x * cmath.exp(1j * math.pi * tau * x * x)
        fh = lambda x: fac * x * cmath.exp(1j * math.pi * (-1 / tau) * x * x)
        res = interp.r3_identity_check(f, fh, 40, deriv_pair=(1.0, fac))
        assert res < 1e-9

    def test_numeric_derivative_fallback(self):
        tau = 2j
        fac = -1j * (-1j * tau) ** (-1.5)
        f = lambda x: x * cmath.exp(1j * math.pi * tau * x * x)
        fh = lambda x: fac * x * cmath.exp(1j * math.pi * (-1 / tau) * x * x)
        res = interp.r3_identity_check(f, fh, 40)
        assert res < 1e-6
