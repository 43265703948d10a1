"""Weakly holomorphic modular forms for the theta group with prescribed
principal parts at the cusp at infinity.

Two families are constructed, one of weight 3/2 (used for the even
interpolation basis) and one of weight 1/2 (odd basis).  Each family is
indexed by a sign eps in {+, -} and an integer n, and is the unique form

    base(z) * (1 - 2*lambda(z))^s * P(J(z)^{-1}),

base = theta^3 (weight 3/2, parity 'even') or theta (weight 1/2, parity
'odd'), s = 0 for eps = '+' and s = 1 for eps = '-', with P monic of
degree n (no constant term when eps = '-'), whose q-expansion in
p = e^{i pi z} is

    p^{-n} + O(p)    for eps = '+',
    p^{-n} + O(1)    for eps = '-'.

The coefficients of P are exact rationals obtained by a forward triangular
solve against the exact q-expansions from :mod:`.qseries`.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction

from . import qseries as qs
from ._backend import FloatBackend, backend_for_bits
from .modular import eval_modular

_FLOAT = FloatBackend()


class FormError(Exception):
    """Invalid form index or an evaluation failure (e.g. kernel pole)."""


_PARITIES = ("even", "odd")
_SIGNS = ("+", "-")


def _validate_index(parity: str, eps: str, n: int) -> None:
    if parity not in _PARITIES:
        raise FormError("parity must be 'even' or 'odd', got %r" % (parity,))
    if eps not in _SIGNS:
        raise FormError("eps must be '+' or '-', got %r" % (eps,))
    n_min = 0 if eps == "+" else 1
    if not isinstance(n, int) or n < n_min:
        raise FormError("index n must be an integer >= %d for eps=%r" % (n_min, eps))


@dataclass(frozen=True)
class FormSpec:
    """One weakly holomorphic form: parity ('even' -> weight 3/2, 'odd' ->
    weight 1/2), sign eps, pole order n, and the exact monic polynomial
    `poly` (poly[k] = coefficient of x^k, x standing for 1/J)."""

    parity: str
    eps: str
    n: int
    poly: tuple[Fraction, ...]

    def __post_init__(self):
        _validate_index(self.parity, self.eps, self.n)
        if len(self.poly) != self.n + 1 or self.poly[self.n] != 1:
            raise FormError("poly must be monic of degree n")
        if self.eps == "-" and self.poly[0] != 0:
            raise FormError("poly must have zero constant term for eps='-'")

    @property
    def weight(self) -> Fraction:
        return Fraction(3, 2) if self.parity == "even" else Fraction(1, 2)


# ---------------------------------------------------------------------------
# exact construction
# ---------------------------------------------------------------------------

_LOCK = threading.Lock()

# (parity, eps) -> (order, [B_0, B_1, ...]) with
# B_k = base * (1-2lambda)^s * J^{-k}, each accurate below `order`
_BASIS_CACHE: dict[tuple[str, str], tuple[int, list]] = {}

# (parity, eps, n) -> FormSpec
_FORM_CACHE: dict[tuple[str, str, int], FormSpec] = {}

# (parity, eps, n, bits) -> polynomial coefficients converted to the
# backend's number type (the exact rationals get large for big n, so the
# conversion is worth caching across quadrature nodes)
_COEFF_CACHE: dict[tuple[str, str, int, int], tuple] = {}


def _basis_series(parity: str, eps: str, n: int, order: int) -> list:
    """q-expansions of base*(1-2lambda)^s*J^{-k} for k = 0..n, accurate
    below `order` (B_k starts at p^{-k} with leading coefficient 1)."""
    key = (parity, eps)
    with _LOCK:
        cached = _BASIS_CACHE.get(key)
        if cached is not None and cached[0] >= order and len(cached[1]) > n:
            return [qs.truncate(b, order) for b in cached[1][: n + 1]]
        # rebuild with headroom so nearby requests hit the cache
        build_order = max(order, cached[0] if cached else 0) + 8
        top = max(n, (len(cached[1]) - 1) if cached else 0) + 8
        base_name = "theta3_cubed" if parity == "even" else "theta3"
        # the k-th power of J^{-1} loses truncation accuracy at the high
        # end, so everything is built at a guard order
        guard = build_order + 2 * top + 8
        base = qs.modular_series(base_name, guard)
        if eps == "-":
            base = qs.series_mul(base, qs.modular_series("one_minus_2lambda", guard))
        j_inv = qs.modular_series("J_inv", guard)
        table = [qs.truncate(base, build_order)]
        acc = base
        for _ in range(top):
            acc = qs.series_mul(acc, j_inv)
            table.append(qs.truncate(acc, build_order))
        _BASIS_CACHE[key] = (build_order, table)
        return [qs.truncate(b, order) for b in table[: n + 1]]


def build_form(parity: str, eps: str, n: int) -> FormSpec:
    """Construct the form of pole order n by a forward triangular solve:
    the q-expansion coefficients of p^e for e = -n+1 .. 0 (eps = '+') or
    -n+1 .. -1 (eps = '-') are forced to vanish, determining the
    polynomial coefficients one at a time."""
    _validate_index(parity, eps, n)
    key = (parity, eps, n)
    spec = _FORM_CACHE.get(key)
    if spec is not None:
        return spec
    basis = _basis_series(parity, eps, n, 2)
    c = [Fraction(0)] * (n + 1)
    c[n] = Fraction(1)
    e_max = 0 if eps == "+" else -1
    for e in range(-n + 1, e_max + 1):
        k = -e
        s = Fraction(0)
        for j in range(k + 1, n + 1):
            cj = c[j]
            if cj:
                s += cj * qs.coefficient(basis[j], e)
        c[k] = -s
    spec = FormSpec(parity, eps, n, tuple(c))
    _FORM_CACHE[key] = spec
    return spec


def form_q_expansion(spec: FormSpec, order: int) -> qs.PuiseuxSeries:
    """Exact q-expansion of the form, accurate below `order`."""
    if order < 1:
        raise FormError("order must be >= 1")
    basis = _basis_series(spec.parity, spec.eps, spec.n, order)
    out = qs.zero_series(order)
    for k, ck in enumerate(spec.poly):
        if ck:
            out = out + qs.series_scale(basis[k], ck)
    return out


def eval_form(spec: FormSpec, z: complex, prec: int | None = None):
    """Numerical value of the form at z (Im z > 0).

    With `prec` set (bits), arithmetic runs on gmpy2 at that precision
    (z may be a gmpy2 complex, in which case its full precision is used)
    and the returned value is a gmpy2 complex; otherwise Python complex.
    """
    nm = _FLOAT if prec is None else backend_for_bits(prec)
    key = (spec.parity, spec.eps, spec.n, nm.bits)
    coeffs = _COEFF_CACHE.get(key)
    if coeffs is None:
        with nm.ctx():
            coeffs = tuple(nm.from_fraction(ck) for ck in reversed(spec.poly))
        _COEFF_CACHE[key] = coeffs
    mp = eval_modular(z, prec=prec)
    with nm.ctx():
        u = 1 / mp.J
        acc = nm.mpc(0)
        for ck in coeffs:  # Horner in u = 1/J
            acc = acc * u + ck
        base = mp.theta_cubed if spec.parity == "even" else mp.theta
        if spec.eps == "-":
            base = base * mp.one_minus_2lambda
        return base * acc


# ---------------------------------------------------------------------------
# generating-function kernels
# ---------------------------------------------------------------------------

_POLE_TOL = 1e-10


def eval_kernel(parity: str, eps: str, tau: complex, z: complex,
                prec: int | None = None):
    """Value of the two-variable generating kernel

        sum_n form_n(z) e^{i pi n tau}

    for the given family.  For parity 'even':

        K_+(tau, z) = theta(tau)(1-2lambda(tau)) theta^3(z) J(z) / (J(z)-J(tau)),
        K_-(tau, z) = theta(tau) J(tau) theta^3(z)(1-2lambda(z)) / (J(z)-J(tau)).

    For parity 'odd' the kernels are -K_-(z, tau) (eps = '+') and
    -K_+(z, tau) (eps = '-').  Raises FormError near the pole J(z) = J(tau).
    """
    if parity not in _PARITIES:
        raise FormError("parity must be 'even' or 'odd', got %r" % (parity,))
    if eps not in _SIGNS:
        raise FormError("eps must be '+' or '-', got %r" % (eps,))
    if parity == "odd":
        # odd kernels are the even ones with arguments switched and negated
        other = "-" if eps == "+" else "+"
        return -eval_kernel("even", other, z, tau, prec=prec)
    nm = _FLOAT if prec is None else backend_for_bits(prec)
    mt = eval_modular(tau, prec=prec)
    mz = eval_modular(z, prec=prec)
    with nm.ctx():
        denom = mz.J - mt.J
        if nm.abs(denom) < _POLE_TOL * (nm.abs(mz.J) + nm.abs(mt.J)):
            raise FormError(
                "kernel evaluated too close to its pole J(z) = J(tau) "
                "(tau=%r, z=%r)" % (tau, z)
            )
        if eps == "+":
            num = mt.theta * mt.one_minus_2lambda * mz.theta_cubed * mz.J
        else:
            num = mt.theta * mt.J * mz.theta_cubed * mz.one_minus_2lambda
        return num / denom
