"""Theta constants, Hauptmoduls, reduction and automorphy factors."""

import cmath
import math
import random

import pytest

from thetainterp import modular as md


def direct_thetas(z, terms=120):
    t3 = 1 + 2 * sum(cmath.exp(1j * math.pi * z * n * n) for n in range(1, terms))
    t4 = 1 + 2 * sum(
        (-1) ** n * cmath.exp(1j * math.pi * z * n * n) for n in range(1, terms)
    )
    t2 = 2 * sum(cmath.exp(1j * math.pi * z * (n + 0.5) ** 2) for n in range(terms))
    return t2, t3, t4


class TestReduction:
    def test_sl2_roundtrip_and_domain(self):
        rng = random.Random(7)
        for _ in range(50):
            z = complex(rng.uniform(-8, 8), rng.uniform(0.02, 5.0))
            u, w = md.reduce_sl2(z)
            assert abs(w.apply(u) - z) < 1e-9 * (1 + abs(z))
            assert abs(u) >= 1 - 1e-9
            assert abs(u.real) <= 0.5 + 1e-9

    def test_gamma_theta_roundtrip_and_domain(self):
        rng = random.Random(8)
        for _ in range(50):
            z = complex(rng.uniform(-8, 8), rng.uniform(0.02, 5.0))
            u, w = md.reduce_gamma_theta(z)
            assert abs(w.apply(u) - z) < 1e-9 * (1 + abs(z))
            assert abs(u) >= 1 - 1e-9
            assert abs(u.real) <= 1 + 1e-9
            for gen, exp in w.letters:
                assert gen == "S" or exp % 2 == 0

    def test_lower_half_plane_rejected(self):
        with pytest.raises(md.ReductionError):
            md.reduce_sl2(1 - 1j)
        with pytest.raises(md.ReductionError):
            md.reduce_gamma_theta(-2j)

    def test_word_determinant_enforced(self):
        with pytest.raises(ValueError):
            md.MoebiusWord((), (1, 1, 1, 1))


class TestThetaValues:
    def test_matches_direct_summation(self):
        # freeze the sign convention of the S/T push-through
        for z in (2j, 0.3 + 0.8j, -1.4 + 0.6j, 0.05 + 0.21j, 1.9 + 0.1j):
            t = md.theta_constants(z)
            d2, d3, d4 = direct_thetas(z)
            scale = max(abs(d2), abs(d3), abs(d4))
            assert abs(t.t2 - d2) < 1e-11 * scale
            assert abs(t.t3 - d3) < 1e-11 * scale
            assert abs(t.t4 - d4) < 1e-11 * scale

    def test_s_transform_plus_signs(self):
        z = 0.4 + 1.1j
        a = md.theta_constants(z)
        b = md.theta_constants(-1 / z)
        root = cmath.sqrt(-1j * z)
        assert abs(b.t3 - root * a.t3) < 1e-12
        assert abs(b.t2 - root * a.t4) < 1e-12
        assert abs(b.t4 - root * a.t2) < 1e-12

    def test_jacobi_residual_small_everywhere(self):
        rng = random.Random(9)
        for _ in range(60):
            z = complex(rng.uniform(-3, 3), math.exp(rng.uniform(math.log(0.02), math.log(8))))
            assert md.theta_constants(z).residual < 1e-12

    def test_high_precision_agrees_with_double(self):
        t53 = md.theta_constants(0.7 + 0.9j)
        t200 = md.theta_constants(0.7 + 0.9j, prec=200)
        assert abs(complex(t200.t3) - t53.t3) < 1e-13


class TestHauptmoduls:
    def test_special_values_at_i(self):
        m = md.eval_modular(1j)
        assert abs(m.lam - 0.5) < 1e-13
        assert abs(m.J - 1 / 64) < 1e-14
        assert abs(m.one_minus_2lambda) < 1e-13

    def test_lambda_s_and_t_laws(self):
        z = 0.23 + 0.71j
        a = md.eval_modular(z)
        assert abs(md.eval_modular(-1 / z).lam - (1 - a.lam)) < 1e-12
        assert abs(md.eval_modular(z + 1).lam - a.lam / (a.lam - 1)) < 1e-12

    def test_j_invariance(self):
        z = -0.37 + 0.44j
        a = md.eval_modular(z)
        assert abs(md.eval_modular(z + 2).J - a.J) < 1e-13
        assert abs(md.eval_modular(-1 / z).J - a.J) < 1e-13

    def test_j_relation_to_lambda(self):
        z = 0.1 + 1.3j
        m = md.eval_modular(z)
        assert abs(m.J - m.lam * (1 - m.lam) / 16) < 1e-14
        assert abs(m.one_minus_2lambda ** 2 - (1 - 64 * m.J)) < 1e-13

    def test_unit_circle_contour_modulus_bound(self):
        # on the contour z = e^{i pi (1-t)}, Re(lambda) = 1/2 so |J| >= 1/64
        for t in (0.1, 0.25, 0.5, 0.7, 0.9):
            z = cmath.exp(1j * math.pi * (1 - t))
            m = md.eval_modular(z)
            assert abs(m.lam.real - 0.5) < 1e-10
            assert abs(m.J) >= 1 / 64 - 1e-12


class TestAutomorphy:
    def test_identity_word(self):
        w = md.MoebiusWord.identity()
        assert md.automorphy_jtheta(1.3j, w) == 1

    def test_even_translation_is_trivial(self):
        w = md.MoebiusWord.identity().append("T", 2)
        assert abs(md.automorphy_jtheta(0.3 + 0.9j, w) - 1) < 1e-15

    def test_s_at_i(self):
        w = md.MoebiusWord.identity().append("S", 1)
        # j(z, S) = (-iz)^{-1/2} equals 1 at z = i
        assert abs(md.automorphy_jtheta(1j, w) - 1) < 1e-15

    def test_consistency_with_theta(self):
        # theta(w u) = j_theta(u, w)^{-1} theta(u)
        rng = random.Random(10)
        for _ in range(25):
            z = complex(rng.uniform(-4, 4), rng.uniform(0.05, 3.0))
            u, w = md.reduce_gamma_theta(z)
            j = md.automorphy_jtheta(u, w)
            tu = md.theta_constants(u).t3
            tz = md.theta_constants(z).t3
            assert abs(tz - tu / j) < 1e-10 * (1 + abs(tz))
