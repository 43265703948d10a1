"""Numerical evaluation of the interpolation basis on the nodes sqrt(n).

The even basis functions are

    b_n(x) = 1/2 * integral over [-1, 1] of g_n(z) e^{i pi x^2 z} dz,

taken along the upper unit semicircle z(t) = e^{i pi (1 - t)}; the odd
basis functions d_n(x) carry an extra factor x under the integral.  Two
evaluation strategies are used:

* ``contour``: adaptive Gauss-Legendre on the semicircle.  The integrand
  reaches magnitude ~ (n+2) e^{pi (n - x^2)} while the result is
  polynomially bounded, so working precision is scaled with the expected
  cancellation (roughly 4.6 n bits on top of the target accuracy).
* ``laplace``: for x^2 > n + 2 the contour is pushed to the vertical line
  through 1, giving sin(pi x^2) * integral over t > 0 of
  g(1 + i t) e^{-pi x^2 t} dt with a real, cancellation-free integrand.

Results are cached per (family, eps, n, x, method) together with their
error estimates, so repeated grid evaluations are cheap.
"""

from __future__ import annotations

import cmath
import math
import threading
from dataclasses import dataclass

from ._backend import adaptive_gauss_legendre, backend_for_bits
from .forms import FormError, build_form, eval_form


class BasisError(Exception):
    """Invalid basis-function request."""


@dataclass(frozen=True)
class EvalReport:
    """One evaluated basis value.

    `value` is the (real) basis value; `abs_error_estimate` is an honest
    bound combining quadrature convergence, endpoint clipping, truncation
    and rounding allowances; `method` is one of contour / laplace /
    closed_form / series_tail; `imag_residual` is the magnitude of the
    discarded imaginary part (the integrals are real in exact arithmetic,
    so this is a free consistency check).
    """

    value: float
    abs_error_estimate: float
    method: str
    imag_residual: float


_LOCK = threading.Lock()
_CACHE: dict[tuple, EvalReport] = {}

_MIN_TOL = 1e-13


def _bits_for(scale: float, abs_tol: float) -> int:
    need = math.log2(max(scale, 1.0) / abs_tol) + 20
    return max(53, int(math.ceil(need)))


def _find_clip(integrand, nm, start: float, abs_tol: float,
               floor: float = 1e-8) -> tuple[float, float]:
    """Choose an endpoint clip distance for an integrand with an
    essential zero exp(-c/t) at t = 0 modulated by a decaying factor
    exp(-b t).  Returns (delta, clipped_mass_bound).  Halves delta until
    the three samples at delta, 3 delta/4, delta/2 decrease toward the
    cusp (so the single interior peak of exp(-c/t - b t) lies above
    delta) and the mass bound is below a quarter of the budget.

    Deep inside the cusp the theta constants underflow (and quantities
    derived from them overflow to inf/nan); a probe that fails or comes
    back non-finite is treated as an underflowed zero, since the true
    integrand there is double-exponentially small."""

    def probe(t):
        try:
            v = float(nm.abs(integrand(nm.real(t))))
        except (ZeroDivisionError, OverflowError, ValueError):
            return 0.0
        return v if math.isfinite(v) else 0.0

    delta = start
    while True:
        e1 = probe(delta)
        e2 = probe(0.75 * delta)
        e3 = probe(0.5 * delta)
        bound = 8 * max(e1, e2, e3) * delta
        if (e3 <= e2 <= e1 and bound < abs_tol / 4) or delta <= floor:
            return delta, bound
        delta *= 0.5


def _half_contour_integral(parity: str, eps: str, n: int, x: float,
                           abs_tol: float) -> EvalReport:
    """1/2 * integral of form(z) e^{i pi x^2 z} dz over the semicircle."""
    spec = build_form(parity, eps, n)
    scale = (n + 2) * math.exp(math.pi * max(0.0, n - x * x))
    # the Horner evaluation of the degree-n polynomial at 1/J (which
    # reaches 64 at z = i) cancels internally by ~2^{1.8 n}, on top of the
    # e^{pi(n - x^2)} cancellation of the oscillatory integral itself
    horner_bits = int(math.ceil(1.8 * n)) + 4
    bits = _bits_for(scale, abs_tol) + horner_bits
    nm = backend_for_bits(bits)
    prec = None if bits <= 53 else bits
    with nm.ctx():
        i_pi = nm.mpc(0, nm.pi)
        x2 = nm.real(x) * nm.real(x)

        def integrand(t):
            z = nm.exp(i_pi * (1 - t))
            return eval_form(spec, z, prec=prec) * nm.exp(i_pi * x2 * z) * (-i_pi * z) / 2

        # clip the endpoints: the integrand behaves like exp(-c/t - b t)
        # toward the cusps at t = 0 and t = 1 (and |F(t)| = |F(1-t)| by
        # conjugate symmetry).  That profile has a single interior peak at
        # sqrt(c/b), which for large x sits close to the cusp while the
        # edge value is already tiny -- so a small edge value alone does
        # not justify clipping.  Accept delta only where the samples are
        # monotonically decreasing toward the cusp (i.e. we are past the
        # peak) and the clipped-mass bound fits the budget.
        delta, clip_bound = _find_clip(integrand, nm, 0.125, abs_tol)
        total, quad_err = adaptive_gauss_legendre(
            integrand, delta, 1 - delta, abs_tol / 2, nm
        )
        value = nm.to_complex(total)
    rounding = scale * 2.0 ** (-(bits - horner_bits - 12))
    return EvalReport(
        value=value.real,
        abs_error_estimate=quad_err + clip_bound + rounding,
        method="contour",
        imag_residual=abs(value.imag),
    )


def _laplace_integral(parity: str, eps: str, n: int, x: float,
                      abs_tol: float) -> EvalReport:
    """sin(pi x^2) * integral over t > 0 of form(1 + i t) e^{-pi x^2 t} dt,
    valid for x^2 > n."""
    spec = build_form(parity, eps, n)
    rate = math.pi * (x * x - n)
    if rate <= 0:
        raise BasisError("laplace representation requires x^2 > n")
    bits = _bits_for(float(n + 2), abs_tol)
    nm = backend_for_bits(bits)
    prec = None if bits <= 53 else bits
    # truncate where the geometric tail 2(n+2)e^{-rate t}/rate drops below
    # a quarter of the budget
    T = max(1.0, math.log(8 * (n + 2) / (abs_tol * rate)) / rate)
    tail = 2 * (n + 2) * math.exp(-rate * T) / rate
    with nm.ctx():
        pi_x2 = nm.real(x) * nm.real(x) * nm.pi

        def integrand(t):
            z = nm.mpc(1, 0) + nm.mpc(0, 1) * t
            return eval_form(spec, z, prec=prec) * nm.exp(-pi_x2 * t)

        # same exp(-c/t - b t) cusp profile as on the contour: clip only
        # past the interior peak (see _find_clip)
        t0, clip_bound = _find_clip(integrand, nm, min(0.125, T / 4), abs_tol)
        total, quad_err = adaptive_gauss_legendre(
            integrand, t0, T, abs_tol / 2, nm
        )
        s = nm.sin(nm.real(x) * nm.real(x) * nm.pi)
        value = nm.to_complex(total)
        s = float(s)
    rounding = (n + 2) * 2.0 ** (-(bits - 12))
    return EvalReport(
        value=s * value.real,
        abs_error_estimate=abs(s) * (quad_err + clip_bound) + tail + rounding,
        method="laplace",
        imag_residual=abs(s) * abs(value.imag),
    )


def _exact_zero() -> EvalReport:
    return EvalReport(0.0, 0.0, "closed_form", 0.0)


def _evaluate(parity: str, eps: str, n: int, x: float, abs_tol: float,
              method: str | None) -> EvalReport:
    if method is None:
        method = "laplace" if x * x > n + 2 else "contour"
    if method not in ("contour", "laplace"):
        raise BasisError("method must be 'contour' or 'laplace', got %r" % (method,))
    key = (parity, eps, n, x, method)
    with _LOCK:
        hit = _CACHE.get(key)
    if hit is not None and hit.abs_error_estimate <= abs_tol:
        return hit
    if method == "contour":
        rep = _half_contour_integral(parity, eps, n, x, abs_tol)
    else:
        rep = _laplace_integral(parity, eps, n, x, abs_tol)
    with _LOCK:
        old = _CACHE.get(key)
        if old is None or rep.abs_error_estimate < old.abs_error_estimate:
            _CACHE[key] = rep
    return rep


def eval_b(eps: str, n: int, x: float, abs_tol: float = 1e-9,
           method: str | None = None) -> EvalReport:
    """Even basis function b_n^eps(x), real, with b_n^eps(sqrt(m)) =
    delta_{n,m}.  eps = '-' with n = 0 is identically zero."""
    if eps not in ("+", "-"):
        raise BasisError("eps must be '+' or '-', got %r" % (eps,))
    if eps == "-" and n == 0:
        return _exact_zero()
    x = abs(float(x))  # b is even
    abs_tol = max(float(abs_tol), _MIN_TOL)
    return _evaluate("even", eps, n, x, abs_tol, method)


def eval_d(eps: str, n: int, x: float, abs_tol: float = 1e-9,
           method: str | None = None) -> EvalReport:
    """Odd basis function d_n^eps(x), real and odd, with
    d_n^eps(sqrt(m)) = delta_{n,m} sqrt(m)."""
    if eps not in ("+", "-"):
        raise BasisError("eps must be '+' or '-', got %r" % (eps,))
    if eps == "-" and n == 0:
        raise BasisError("the odd family requires n >= 1 for eps='-'")
    x = float(x)
    if x == 0.0:
        return _exact_zero()  # the integrand carries the factor x
    abs_tol = max(float(abs_tol), _MIN_TOL)
    inner_tol = abs_tol / abs(x) if abs(x) > 1 else abs_tol
    rep = _evaluate("odd", eps, n, abs(x), inner_tol, method)
    return EvalReport(
        value=x * rep.value,
        abs_error_estimate=abs(x) * rep.abs_error_estimate,
        method=rep.method,
        imag_residual=abs(x) * rep.imag_residual,
    )


def eval_a(n: int, x: float, abs_tol: float = 1e-9) -> tuple[EvalReport, EvalReport]:
    """The combinations a_n = (b_n^+ + b_n^-)/2 and
    a-hat_n = (b_n^+ - b_n^-)/2 used by the even interpolation formula."""
    bp = eval_b("+", n, x, abs_tol=abs_tol)
    bm = eval_b("-", n, x, abs_tol=abs_tol)
    err = (bp.abs_error_estimate + bm.abs_error_estimate) / 2
    imag = (bp.imag_residual + bm.imag_residual) / 2
    a = EvalReport((bp.value + bm.value) / 2, err, bp.method, imag)
    ahat = EvalReport((bp.value - bm.value) / 2, err, bp.method, imag)
    return a, ahat


def d0_closed_form(x: float) -> float:
    """The elementary member of the odd family:
    d_0^+(x) = sin(pi x^2)/sinh(pi x), with d_0^+(0) = 0 (limit value)."""
    x = float(x)
    if x == 0.0:
        return 0.0
    px = math.pi * x
    if abs(px) > 700.0:  # sinh would overflow; the value underflows to 0
        return 0.0
    return math.sin(math.pi * x * x) / math.sinh(px)


# ---------------------------------------------------------------------------
# growth envelope and generating functions
# ---------------------------------------------------------------------------

_GROWTH: dict[str, float] = {}
_GROWTH_CAL_N = 8
_GROWTH_GRID = [0.5 * k for k in range(17)]  # by parity, |x| <= 8 suffices


def _envelope(parity: str, n: int) -> float:
    # b_n = O(n^2), d_n = O(n^{5/2})
    return 1.0 + n * n if parity == "even" else (1.0 + n) ** 2.5


def growth_constant(parity: str = "even") -> float:
    """Envelope constant C = max over n <= 8 and the calibration grid of
    |basis value| / envelope(n); cached after the first call."""
    with _LOCK:
        if parity in _GROWTH:
            return _GROWTH[parity]
    evalf = eval_b if parity == "even" else eval_d
    best = 0.0
    for eps in ("+", "-"):
        for n in range((0 if eps == "+" else 1), _GROWTH_CAL_N + 1):
            env = _envelope(parity, n)
            for x in _GROWTH_GRID:
                rep = evalf(eps, n, x, abs_tol=1e-6)
                best = max(best, abs(rep.value) / env)
    with _LOCK:
        _GROWTH[parity] = best
    return best


@dataclass(frozen=True)
class SeriesValue:
    """Partial sum of a generating series with a reported tail bound
    (the bound uses the heuristic calibrated growth envelope)."""

    value: complex
    tail_bound: float
    terms_evaluated: int

    def __complex__(self) -> complex:
        return complex(self.value)


def generating_F(parity: str, eps: str, tau: complex, x: float, N: int,
                 abs_tol: float = 1e-8) -> SeriesValue:
    """Partial sum of the generating function

        F_eps(tau, x)  = sum_n b_n^eps(x) e^{i pi n tau}   (parity 'even')
        G_eps(tau, x)  = sum_n d_n^eps(x) e^{i pi n tau}   (parity 'odd').

    Requires Im tau > 0 (absolute convergence follows from the polynomial
    growth of the basis values).  Terms whose envelope bound is below the
    per-term budget are skipped and charged to the tail bound, so the cost
    is governed by Im tau rather than by N.
    """
    tau = complex(tau)
    if not tau.imag > 0:
        raise BasisError("generating function requires Im tau > 0")
    if N < 1:
        raise BasisError("N must be >= 1")
    evalf = eval_b if parity == "even" else eval_d
    n0 = 0 if eps == "+" else 1
    C = growth_constant(parity)
    r = math.exp(-math.pi * tau.imag)
    share = abs_tol / (2.0 * (N + 1))
    total = 0.0 + 0.0j
    slop = 0.0
    evaluated = 0
    for n in range(n0, N + 1):
        w = r ** n
        bound = C * _envelope(parity, n) * w
        if bound < share:
            slop += bound
            continue
        rep = evalf(eps, n, x, abs_tol=max(share / w, _MIN_TOL))
        total += rep.value * cmath.exp(1j * math.pi * n * tau)
        slop += rep.abs_error_estimate * w
        evaluated += 1
    geo = r * (1.0 + (N + 2) ** 2) / (1.0 + (N + 1) ** 2)
    if geo < 1.0:
        tail = 2.0 * C * _envelope(parity, N + 1) * r ** (N + 1) / (1.0 - geo)
    else:
        tail = math.inf
    return SeriesValue(total, tail_bound=slop + tail, terms_evaluated=evaluated)
