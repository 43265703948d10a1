"""Reconstruction of even/odd Schwartz functions from samples at sqrt(n).

Even functions are recovered from f(sqrt(n)) and fhat(sqrt(n)):

    f(x) = sum_n a_n(x) f(sqrt(n)) + sum_n ahat_n(x) fhat(sqrt(n)),

odd functions from the scaled samples f(sqrt(n))/sqrt(n) plus the pair
(f'(0), fhat'(0)):

    f(x) = d0(x) (f'(0) + i fhat'(0))/2
           + sum_{n>=1} c_n(x) f(sqrt(n))/sqrt(n)
           - sum_{n>=1} chat_n(x) fhat(sqrt(n))/sqrt(n),

with c_n = (d_n^+ + d_n^-)/2 and chat_n = (-i)(d_n^+ - d_n^-)/2 (so the
second sum contributes +i (d_n^+ - d_n^-)/2 * fhat-sample).  Closed-form
sample generators for the Gaussian families e_tau(x) = e^{i pi tau x^2}
and o_tau(x) = x e^{i pi tau x^2} are provided for testing and demos.
"""

from __future__ import annotations

import cmath
import json
import math
from dataclasses import dataclass

from . import oracle
from .basis import (
    _MIN_TOL,
    _envelope,
    d0_closed_form,
    eval_a,
    eval_d,
    growth_constant,
)


class InterpError(Exception):
    """Invalid sample set or parity mismatch."""


@dataclass(frozen=True)
class SampleSet:
    """Samples of a function on the interpolation nodes.

    For parity 'even': f_samples[n] = f(sqrt(n)) and fhat_samples[n] =
    fhat(sqrt(n)) for n = 0..N.  For parity 'odd': f_samples[n-1] =
    f(sqrt(n))/sqrt(n) for n = 1..N (same for fhat_samples), and
    deriv_pair = (f'(0), fhat'(0)).
    """

    parity: str
    N: int
    f_samples: tuple
    fhat_samples: tuple
    deriv_pair: tuple | None = None

    def __post_init__(self):
        if self.parity not in ("even", "odd"):
            raise InterpError("parity must be 'even' or 'odd'")
        want = self.N + 1 if self.parity == "even" else self.N
        if len(self.f_samples) != want or len(self.fhat_samples) != want:
            raise InterpError(
                "expected %d samples for parity=%s, N=%d"
                % (want, self.parity, self.N)
            )
        if self.parity == "odd" and self.deriv_pair is None:
            raise InterpError("odd sample sets require deriv_pair")

    def scaled(self, alpha: complex) -> "SampleSet":
        dp = None
        if self.deriv_pair is not None:
            dp = (alpha * self.deriv_pair[0], alpha * self.deriv_pair[1])
        return SampleSet(
            self.parity,
            self.N,
            tuple(alpha * v for v in self.f_samples),
            tuple(alpha * v for v in self.fhat_samples),
            dp,
        )

    def __add__(self, other: "SampleSet") -> "SampleSet":
        if self.parity != other.parity or self.N != other.N:
            raise InterpError("sample sets must share parity and N")
        dp = None
        if self.deriv_pair is not None:
            dp = (
                self.deriv_pair[0] + other.deriv_pair[0],
                self.deriv_pair[1] + other.deriv_pair[1],
            )
        return SampleSet(
            self.parity,
            self.N,
            tuple(a + b for a, b in zip(self.f_samples, other.f_samples)),
            tuple(a + b for a, b in zip(self.fhat_samples, other.fhat_samples)),
            dp,
        )


def _pair(v: complex) -> list:
    v = complex(v)
    return [v.real, v.imag]


def sampleset_to_json(s: SampleSet) -> str:
    data = {
        "parity": s.parity,
        "N": s.N,
        "f": [_pair(v) for v in s.f_samples],
        "fhat": [_pair(v) for v in s.fhat_samples],
    }
    if s.deriv_pair is not None:
        d0, d1 = (complex(v) for v in s.deriv_pair)
        data["deriv_pair"] = [d0.real, d0.imag, d1.real, d1.imag]
    return json.dumps(data)


def sampleset_from_json(text: str) -> SampleSet:
    data = json.loads(text)
    dp = None
    if data.get("deriv_pair") is not None:
        a, b, c, d = data["deriv_pair"]
        dp = (complex(a, b), complex(c, d))
    return SampleSet(
        data["parity"],
        int(data["N"]),
        tuple(complex(re, im) for re, im in data["f"]),
        tuple(complex(re, im) for re, im in data["fhat"]),
        dp,
    )


def gaussian_samples(parity: str, tau: complex, N: int) -> SampleSet:
    """Closed-form samples of the Gaussian e_tau(x) = e^{i pi tau x^2}
    (even) or o_tau(x) = x e^{i pi tau x^2} (odd).

    The transforms follow e_tau-hat = (-i tau)^{-1/2} e_{-1/tau} and
    o_tau-hat = -i (-i tau)^{-3/2} o_{-1/tau} (principal branches).
    """
    tau = complex(tau)
    if not tau.imag > 0:
        raise InterpError("gaussian_samples requires Im tau > 0")
    if N < 1:
        raise InterpError("N must be >= 1")
    tau2 = -1 / tau
    if parity == "even":
        fac = (-1j * tau) ** (-0.5)
        f = tuple(cmath.exp(1j * math.pi * tau * n) for n in range(N + 1))
        fh = tuple(fac * cmath.exp(1j * math.pi * tau2 * n) for n in range(N + 1))
        return SampleSet("even", N, f, fh)
    if parity == "odd":
        fac = -1j * (-1j * tau) ** (-1.5)
        # stored samples are already divided by sqrt(n)
        f = tuple(cmath.exp(1j * math.pi * tau * n) for n in range(1, N + 1))
        fh = tuple(fac * cmath.exp(1j * math.pi * tau2 * n) for n in range(1, N + 1))
        return SampleSet("odd", N, f, fh, deriv_pair=(1.0 + 0j, fac))
    raise InterpError("parity must be 'even' or 'odd'")


@dataclass(frozen=True)
class Reconstruction:
    """Reconstructed value with diagnostics: `tail_bound` is a heuristic
    truncation bound (calibrated growth envelope times extrapolated sample
    decay) plus the accumulated basis-evaluation error."""

    value: complex
    tail_bound: float
    terms_evaluated: int

    def __complex__(self) -> complex:
        return complex(self.value)


def _tail_heuristic(parity: str, C: float, N: int, weights: list[float]) -> float:
    """Geometric extrapolation of the sample decay beyond N."""
    recent = [w for w in weights[-3:] if w > 0]
    if len(recent) < 2:
        return 0.0
    r = (recent[-1] / recent[0]) ** (1.0 / (len(recent) - 1))
    r = min(max(r, 0.0), 0.9)
    return 2.0 * C * _envelope(parity, N + 1) * recent[-1] * r / (1.0 - r)


def reconstruct_even(s: SampleSet, x: float, abs_tol: float = 1e-8) -> Reconstruction:
    """Evaluate the even interpolation formula at x, truncated at s.N."""
    if s.parity != "even":
        raise InterpError("reconstruct_even requires an even sample set")
    C = growth_constant("even")
    share = abs_tol / (2.0 * (s.N + 1))
    total = 0.0 + 0.0j
    slop = 0.0
    weights = []
    evaluated = 0
    for n in range(s.N + 1):
        fn = complex(s.f_samples[n])
        fhn = complex(s.fhat_samples[n])
        w = max(abs(fn), abs(fhn))
        weights.append(w)
        bound = 2.0 * C * _envelope("even", n) * w
        if bound < 2.0 * share:
            slop += bound
            continue
        a, ahat = eval_a(n, x, abs_tol=max(share / (2.0 * w), _MIN_TOL))
        total += a.value * fn + ahat.value * fhn
        slop += (a.abs_error_estimate + ahat.abs_error_estimate) * w
        evaluated += 1
    tail = _tail_heuristic("even", C, s.N, weights)
    return Reconstruction(total, slop + tail, evaluated)


def reconstruct_odd(s: SampleSet, x: float, abs_tol: float = 1e-8) -> Reconstruction:
    """Evaluate the odd interpolation formula at x, truncated at s.N."""
    if s.parity != "odd":
        raise InterpError("reconstruct_odd requires an odd sample set")
    C = growth_constant("odd")
    share = abs_tol / (2.0 * (s.N + 1))
    d0f, d0fh = (complex(v) for v in s.deriv_pair)
    total = d0_closed_form(x) * (d0f + 1j * d0fh) / 2.0
    slop = 0.0
    weights = []
    evaluated = 0
    for n in range(1, s.N + 1):
        fn = complex(s.f_samples[n - 1])
        fhn = complex(s.fhat_samples[n - 1])
        w = max(abs(fn), abs(fhn))
        weights.append(w)
        bound = 2.0 * C * _envelope("odd", n) * w
        if bound < 2.0 * share:
            slop += bound
            continue
        tol = max(share / (2.0 * w), _MIN_TOL)
        dp = eval_d("+", n, x, abs_tol=tol)
        dm = eval_d("-", n, x, abs_tol=tol)
        c = (dp.value + dm.value) / 2.0
        # -chat_n * fhat-sample = +i (d+ - d-)/2 * fhat-sample
        total += c * fn + 1j * (dp.value - dm.value) / 2.0 * fhn
        slop += (dp.abs_error_estimate + dm.abs_error_estimate) * w
        evaluated += 1
    tail = _tail_heuristic("odd", C, s.N, weights)
    return Reconstruction(total, slop + tail, evaluated)


def r3_identity_check(f_evaluator, fhat_evaluator, N: int,
                      deriv_pair: tuple | None = None) -> float:
    """Residual of the odd summation identity

        f'(0) + sum_{n<=N} r3(n) f(sqrt(n))/sqrt(n)
          = i fhat'(0) + sum_{n<=N} r3(n) i fhat(sqrt(n))/sqrt(n),

    where r3 counts representations as a sum of three squares.  If
    deriv_pair = (f'(0), fhat'(0)) is not supplied, the derivatives are
    estimated numerically by Richardson extrapolation.
    """
    if deriv_pair is None:
        df, _ = oracle._derivative_richardson(f_evaluator, 0.05, levels=3)
        dfh, _ = oracle._derivative_richardson(fhat_evaluator, 0.05, levels=3)
    else:
        df, dfh = deriv_pair
    lhs = complex(df)
    rhs = 1j * complex(dfh)
    for n in range(1, N + 1):
        r = oracle.r3(n)
        if r == 0:
            continue
        root = math.sqrt(n)
        lhs += r * complex(f_evaluator(root)) / root
        rhs += r * 1j * complex(fhat_evaluator(root)) / root
    return abs(lhs - rhs)
