"""Numeric backends and quadrature.

Evaluating the contour integrals that define the interpolation basis
requires working precision that grows with the pole order of the modular
form: the integrand reaches magnitude ~ e^{pi n} on the semicircle while
the result is polynomially bounded, so the cancellation eats about
4.6*n bits.  The float backend (complex/cmath) is used whenever 53 bits
suffice; otherwise computations run on gmpy2 mpc/mpfr at a requested
precision.
"""

from __future__ import annotations

import cmath
import math
from contextlib import contextmanager, nullcontext
from fractions import Fraction

import gmpy2
import numpy as np


class QuadratureError(Exception):
    """Adaptive quadrature failed to converge; carries the best estimate."""

    def __init__(self, message, best=None, err=None):
        super().__init__(message)
        self.best = best
        self.err = err


class FloatBackend:
    """Double-precision backend on top of complex/cmath."""

    bits = 53

    def ctx(self):
        return nullcontext()

    def mpc(self, re, im=0.0):
        return complex(re, im)

    def real(self, x):
        return float(x)

    def complexify(self, z):
        return complex(z)

    def from_fraction(self, fr: Fraction):
        return fr.numerator / fr.denominator

    def exp(self, z):
        return cmath.exp(z) if isinstance(z, complex) else math.exp(z)

    def sqrt(self, z):
        return cmath.sqrt(z)

    def sin(self, x):
        return math.sin(x)

    @property
    def pi(self):
        return math.pi

    def to_complex(self, z):
        return complex(z)

    def abs(self, z) -> float:
        return abs(z)

    def leggauss(self, npts):
        return _leggauss_float(npts)

    # magnitude below which theta-series tails are negligible
    @property
    def tail_eps(self):
        return 1e-19


class MPBackend:
    """gmpy2 backend at a fixed precision (in bits).

    All arithmetic must happen inside ``with backend.ctx():`` so the
    thread-local gmpy2 context carries the right precision.
    """

    def __init__(self, bits: int):
        self.bits = int(bits)
        self._context = gmpy2.context(precision=self.bits, allow_complex=True)

    @contextmanager
    def ctx(self):
        old = gmpy2.get_context()
        gmpy2.set_context(self._context.copy())
        try:
            yield
        finally:
            gmpy2.set_context(old)

    def mpc(self, re, im=0.0):
        return gmpy2.mpc(gmpy2.mpfr(re), gmpy2.mpfr(im))

    def real(self, x):
        return gmpy2.mpfr(x)

    def complexify(self, z):
        # keep the full precision of gmpy2 inputs; re-round to this context
        if isinstance(z, gmpy2.mpc):
            return gmpy2.mpc(z)
        if isinstance(z, complex):
            return gmpy2.mpc(gmpy2.mpfr(z.real), gmpy2.mpfr(z.imag))
        return gmpy2.mpc(gmpy2.mpfr(z))

    def from_fraction(self, fr: Fraction):
        return gmpy2.mpfr(gmpy2.mpq(fr.numerator, fr.denominator))

    def exp(self, z):
        return gmpy2.exp(z)

    def sqrt(self, z):
        return gmpy2.sqrt(z)

    def sin(self, x):
        return gmpy2.sin(x)

    @property
    def pi(self):
        return gmpy2.const_pi()

    def to_complex(self, z):
        if isinstance(z, gmpy2.mpc):
            return complex(float(z.real), float(z.imag))
        return complex(float(z))

    def abs(self, z) -> float:
        return float(abs(z))

    def leggauss(self, npts):
        return _leggauss_mp(npts, self.bits)

    @property
    def tail_eps(self):
        return float(gmpy2.mpfr(2) ** (-self.bits - 8))


def backend_for_bits(bits: int):
    return FloatBackend() if bits <= 53 else MPBackend(bits)


# ---------------------------------------------------------------------------
# Gauss-Legendre nodes
# ---------------------------------------------------------------------------

_GL_FLOAT_CACHE: dict[int, tuple] = {}
_GL_MP_CACHE: dict[tuple[int, int], tuple] = {}


def _leggauss_float(npts):
    if npts not in _GL_FLOAT_CACHE:
        x, w = np.polynomial.legendre.leggauss(npts)
        _GL_FLOAT_CACHE[npts] = (tuple(float(v) for v in x), tuple(float(v) for v in w))
    return _GL_FLOAT_CACHE[npts]


def _legendre_and_derivative(n, x):
    """P_n(x) and P_n'(x) by the three-term recurrence (any numeric type)."""
    p0, p1 = x * 0 + 1, x
    for k in range(2, n + 1):
        p0, p1 = p1, ((2 * k - 1) * x * p1 - (k - 1) * p0) / k
    dp = n * (x * p1 - p0) / (x * x - 1)
    return p1, dp


def _leggauss_mp(npts, bits):
    key = (npts, bits)
    if key in _GL_MP_CACHE:
        return _GL_MP_CACHE[key]
    seeds, _ = _leggauss_float(npts)
    # Newton refinement from the double-precision seeds; each step doubles
    # the correct digits
    steps = max(2, int(math.ceil(math.log2(bits / 50.0))) + 2)
    nodes = []
    weights = []
    for s in seeds:
        x = gmpy2.mpfr(s)
        for _ in range(steps):
            p, dp = _legendre_and_derivative(npts, x)
            x = x - p / dp
        _, dp = _legendre_and_derivative(npts, x)
        nodes.append(x)
        weights.append(2 / ((1 - x * x) * dp * dp))
    result = (tuple(nodes), tuple(weights))
    _GL_MP_CACHE[key] = result
    return result


# ---------------------------------------------------------------------------
# adaptive composite Gauss-Legendre quadrature
# ---------------------------------------------------------------------------

def gl_panel(f, a, b, nodes, weights, half):
    """Single Gauss-Legendre panel over [a, b]."""
    mid = (a + b) * half
    rad = (b - a) * half
    total = None
    for x, w in zip(nodes, weights):
        v = w * f(mid + rad * x)
        total = v if total is None else total + v
    return total * rad


def adaptive_gauss_legendre(f, a, b, abs_tol, backend, npts=15, max_panels=40000):
    """Integrate f over [a, b] by bisection-adaptive composite GL panels.

    Accepts a panel once the coarse estimate and the two-half refinement
    agree to the panel's share of abs_tol.  Returns (value, error_estimate);
    raises QuadratureError (carrying the best estimate) on nonconvergence.
    """
    with backend.ctx():
        nodes, weights = backend.leggauss(npts)
        half = backend.real("0.5")
        a = backend.real(a)
        b = backend.real(b)
        length = float(b - a)
        coarse0 = gl_panel(f, a, b, nodes, weights, half)
        stack = [(a, b, coarse0)]
        total = backend.mpc(0)
        err_total = 0.0
        panels = 0
        while stack:
            lo, hi, coarse = stack.pop()
            panels += 1
            if panels > max_panels:
                best = backend.to_complex(total + coarse)
                raise QuadratureError(
                    "quadrature did not converge within %d panels" % max_panels,
                    best=best,
                    err=float("inf"),
                )
            mid = (lo + hi) * half
            left = gl_panel(f, lo, mid, nodes, weights, half)
            right = gl_panel(f, mid, hi, nodes, weights, half)
            fine = left + right
            err = backend.abs(fine - coarse)
            share = abs_tol * max(float(hi - lo) / length, 1e-6)
            if err <= share:
                total = total + fine
                err_total += err
            else:
                stack.append((lo, mid, left))
                stack.append((mid, hi, right))
        return total, err_total
