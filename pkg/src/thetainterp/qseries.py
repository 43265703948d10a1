"""Exact truncated Laurent series in p = e^{i pi z}.

All q-expansions used by this package live on an integer exponent grid in
the variable p = q^{1/2}.  Coefficients are exact rationals, and every
series carries an explicit truncation order: a series with ``order = N`` is
accurate for all exponents strictly below N.  Arithmetic propagates the
truncation order pessimistically, so no operation ever claims accuracy it
cannot guarantee.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

Rational = Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


class SeriesError(Exception):
    """Raised on invalid series operations (inversion of zero, coefficient
    queries beyond the truncation order, unknown series names)."""


@dataclass(frozen=True)
class PuiseuxSeries:
    """A truncated Laurent series sum_{e >= min_exp} c_e p^e, exact below `order`.

    Invariants: ``len(coeffs) == order - min_exp``; if the series is nonzero
    the first stored coefficient is nonzero; the zero series is stored with
    ``min_exp == order`` and no coefficients.
    """

    min_exp: int
    coeffs: tuple[Fraction, ...]
    order: int

    def __post_init__(self):
        if len(self.coeffs) != self.order - self.min_exp:
            raise SeriesError(
                "coefficient count %d does not match order window [%d, %d)"
                % (len(self.coeffs), self.min_exp, self.order)
            )

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "PuiseuxSeries") -> "PuiseuxSeries":
        return series_add(self, other)

    def __sub__(self, other: "PuiseuxSeries") -> "PuiseuxSeries":
        return series_add(self, series_scale(other, Fraction(-1)))

    def __mul__(self, other: "PuiseuxSeries") -> "PuiseuxSeries":
        return series_mul(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PuiseuxSeries):
            return NotImplemented
        return (
            self.min_exp == other.min_exp
            and self.order == other.order
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.min_exp, self.coeffs, self.order))

    def __repr__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            terms.append("%s*p^%d" % (c, self.min_exp + k))
            if len(terms) >= 6:
                terms.append("...")
                break
        body = " + ".join(terms) if terms else "0"
        return "PuiseuxSeries(%s + O(p^%d))" % (body, self.order)


def make_series(min_exp: int, coeffs: Iterable[Fraction | int], order: int) -> PuiseuxSeries:
    """Build a normalized series from raw data, truncating at `order`."""
    cs = [Fraction(c) for c in coeffs]
    # truncate to the order window, pad with zeros up to it
    cs = cs[: max(0, order - min_exp)]
    cs.extend([_ZERO] * (order - min_exp - len(cs)))
    # strip leading zeros
    lead = 0
    while lead < len(cs) and cs[lead] == 0:
        lead += 1
    if lead == len(cs):
        return PuiseuxSeries(order, (), order)
    return PuiseuxSeries(min_exp + lead, tuple(cs[lead:]), order)


def zero_series(order: int) -> PuiseuxSeries:
    return PuiseuxSeries(order, (), order)


def constant_series(c: Fraction | int, order: int) -> PuiseuxSeries:
    return make_series(0, [Fraction(c)], order)


def monomial(e: int, order: int, c: Fraction | int = 1) -> PuiseuxSeries:
    return make_series(e, [Fraction(c)], order)


def series_add(a: PuiseuxSeries, b: PuiseuxSeries) -> PuiseuxSeries:
    order = min(a.order, b.order)
    if a.is_zero and b.is_zero:
        return zero_series(order)
    lo = min(a.min_exp, b.min_exp, order)
    out = [_ZERO] * (order - lo)
    for k, c in enumerate(a.coeffs):
        e = a.min_exp + k
        if e < order:
            out[e - lo] += c
    for k, c in enumerate(b.coeffs):
        e = b.min_exp + k
        if e < order:
            out[e - lo] += c
    return make_series(lo, out, order)


def series_scale(a: PuiseuxSeries, c: Fraction | int) -> PuiseuxSeries:
    c = Fraction(c)
    if c == 0 or a.is_zero:
        return zero_series(a.order)
    return make_series(a.min_exp, [c * x for x in a.coeffs], a.order)


def series_shift(a: PuiseuxSeries, e: int) -> PuiseuxSeries:
    """Multiply by the exact monomial p^e."""
    if a.is_zero:
        return zero_series(a.order + e)
    return PuiseuxSeries(a.min_exp + e, a.coeffs, a.order + e)


def series_mul(a: PuiseuxSeries, b: PuiseuxSeries) -> PuiseuxSeries:
    order = min(a.order + b.min_exp, b.order + a.min_exp)
    if a.is_zero or b.is_zero:
        return zero_series(order)
    lo = a.min_exp + b.min_exp
    n = order - lo
    out = [_ZERO] * n
    for i, ca in enumerate(a.coeffs):
        if ca == 0:
            continue
        jmax = min(len(b.coeffs), n - i)
        for j in range(jmax):
            cb = b.coeffs[j]
            if cb != 0:
                out[i + j] += ca * cb
    return make_series(lo, out, order)


def series_invert(a: PuiseuxSeries) -> PuiseuxSeries:
    """Multiplicative inverse; the result has min_exp = -a.min_exp and is
    accurate to order a.order - 2*a.min_exp."""
    if a.is_zero:
        raise SeriesError("cannot invert the zero series")
    m = a.min_exp
    n = a.order - m  # number of known unit-part coefficients
    u = a.coeffs
    inv = [_ZERO] * n
    lead = u[0]
    inv[0] = 1 / lead
    for k in range(1, n):
        s = _ZERO
        for j in range(1, min(k, len(u) - 1) + 1):
            s += u[j] * inv[k - j]
        inv[k] = -s / lead
    return make_series(-m, inv, a.order - 2 * m)


def series_pow(a: PuiseuxSeries, k: int) -> PuiseuxSeries:
    """Integer power by repeated multiplication; k is small in practice."""
    if k < 0:
        return series_pow(series_invert(a), -k)
    if k == 0:
        return constant_series(1, a.order - a.min_exp)
    result = a
    for _ in range(k - 1):
        result = series_mul(result, a)
    return result


def coefficient(a: PuiseuxSeries, e: int) -> Fraction:
    if e >= a.order:
        raise SeriesError(
            "coefficient of p^%d is not determined at truncation order %d" % (e, a.order)
        )
    if e < a.min_exp:
        return _ZERO
    return a.coeffs[e - a.min_exp]


def truncate(a: PuiseuxSeries, order: int) -> PuiseuxSeries:
    if order > a.order:
        raise SeriesError("cannot extend a series from order %d to %d" % (a.order, order))
    return make_series(a.min_exp, a.coeffs, order)


# ---------------------------------------------------------------------------
# named modular q-expansions (all on the integer p-grid)
# ---------------------------------------------------------------------------

def _theta3_series(order: int) -> PuiseuxSeries:
    # sum over n in Z of p^(n^2)
    cs = [_ZERO] * max(order, 1)
    if order > 0:
        cs[0] = _ONE
    n = 1
    while n * n < order:
        cs[n * n] += 2
        n += 1
    return make_series(0, cs, order)


def _theta2_4_series(order: int) -> PuiseuxSeries:
    # Theta2 = 2 p^{1/4} sum_{k>=0} p^{k(k+1)}, so Theta2^4 = 16 p (sum ...)^4
    inner_order = max(order - 1, 1)
    cs = [_ZERO] * inner_order
    k = 0
    while k * (k + 1) < inner_order:
        cs[k * (k + 1)] = _ONE
        k += 1
    s = make_series(0, cs, inner_order)
    s2 = series_mul(s, s)
    s4 = series_mul(s2, s2)
    return series_scale(series_shift(s4, 1), 16)


def _theta4_4_series(order: int) -> PuiseuxSeries:
    cs = [_ZERO] * max(order, 1)
    if order > 0:
        cs[0] = _ONE
    n = 1
    while n * n < order:
        cs[n * n] += 2 if n % 2 == 0 else -2
        n += 1
    t4 = make_series(0, cs, order)
    t4_2 = series_mul(t4, t4)
    return series_mul(t4_2, t4_2)


_SERIES_NAMES = (
    "theta3",
    "theta3_cubed",
    "theta2_4",
    "theta4_4",
    "lambda",
    "one_minus_2lambda",
    "J",
    "J_inv",
)


def modular_series(name: str, order: int) -> PuiseuxSeries:
    """Return the named modular q-expansion, accurate below `order`.

    Supported names: theta3, theta3_cubed, theta2_4, theta4_4, lambda,
    one_minus_2lambda, J, J_inv.
    """
    if order < 1:
        raise SeriesError("order must be >= 1")
    # internal guard so the returned series reaches the requested order
    N = order + 4
    if name == "theta3":
        return truncate(_theta3_series(N), order)
    if name == "theta3_cubed":
        t = _theta3_series(N)
        return truncate(series_mul(series_mul(t, t), t), order)
    if name == "theta2_4":
        return truncate(_theta2_4_series(N), order)
    if name == "theta4_4":
        return truncate(_theta4_4_series(N), order)
    if name in ("lambda", "one_minus_2lambda", "J", "J_inv"):
        t = _theta3_series(N)
        t2_ = series_mul(t, t)
        t3_4 = series_mul(t2_, t2_)
        inv_t3_4 = series_invert(t3_4)
        if name == "lambda":
            lam = series_mul(_theta2_4_series(N), inv_t3_4)
            return truncate(lam, order)
        if name == "one_minus_2lambda":
            diff = _theta4_4_series(N) - _theta2_4_series(N)
            return truncate(series_mul(diff, inv_t3_4), order)
        lam = series_mul(_theta2_4_series(N), inv_t3_4)
        one_minus_lam = constant_series(1, N) - lam
        j = series_scale(series_mul(lam, one_minus_lam), Fraction(1, 16))
        if name == "J":
            return truncate(j, order)
        return truncate(series_invert(j), order)
    raise SeriesError("unknown series name %r (expected one of %s)" % (name, ", ".join(_SERIES_NAMES)))


# ---------------------------------------------------------------------------
# JSON serialization
# ---------------------------------------------------------------------------

def series_to_json(a: PuiseuxSeries) -> str:
    return json.dumps(
        {
            "min_exp": a.min_exp,
            "order": a.order,
            "coeffs": ["%d/%d" % (c.numerator, c.denominator) for c in a.coeffs],
        }
    )


def series_from_json(text: str) -> PuiseuxSeries:
    data = json.loads(text)
    coeffs = [Fraction(s) for s in data["coeffs"]]
    return make_series(data["min_exp"], coeffs, data["order"])
