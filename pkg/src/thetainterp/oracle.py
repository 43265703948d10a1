"""Independent verification oracles.

These deliberately use different algorithms from the main computational
path (real-axis quadrature for Fourier transforms instead of contour
integration, brute-force lattice counting for r3), so that agreement with
the main path is evidential rather than circular.  The main modules never
call into this one for their own results.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from ._backend import _leggauss_float


class OracleError(Exception):
    """Cutoff invariant violation or quadrature nonconvergence."""


@dataclass(frozen=True)
class TransformRequest:
    """A numerical Fourier transform request for a real function of known
    parity, integrated over [0, cutoff] and evaluated at frequency
    `target`.  The cutoff must land where the function is negligible."""

    parity: str
    integrand: object  # callable x -> real
    cutoff: float
    target: float

    def __post_init__(self):
        if self.parity not in ("even", "odd"):
            raise OracleError("parity must be 'even' or 'odd'")
        if not self.cutoff > 0:
            raise OracleError("cutoff must be positive")


def fourier_numeric(req: TransformRequest, abs_tol: float = 1e-9) -> complex:
    """Fourier transform fhat(xi) = integral of f(x) e^{-2 pi i xi x} dx,
    computed from the parity-reduced real-axis integral:

        even: 2 * integral_0^X f(x) cos(2 pi xi x) dx
        odd: -2i * integral_0^X f(x) sin(2 pi xi x) dx.

    Uses composite 15-point Gauss-Legendre panels, doubling the panel
    count until two levels agree to abs_tol.
    """
    f = req.integrand
    X = float(req.cutoff)
    xi = float(req.target)
    if abs(float(f(X))) >= 1e-12:
        raise OracleError(
            "cutoff invariant violated: |f(%g)| >= 1e-12" % (X,)
        )
    two_pi_xi = 2.0 * math.pi * xi
    if req.parity == "even":
        kernel = lambda x: math.cos(two_pi_xi * x)
    else:
        kernel = lambda x: math.sin(two_pi_xi * x)
    nodes, weights = _leggauss_float(15)

    def composite(npanels: int) -> float:
        h = X / npanels
        total = 0.0
        for k in range(npanels):
            mid = (k + 0.5) * h
            rad = 0.5 * h
            acc = 0.0
            for t, w in zip(nodes, weights):
                xx = mid + rad * t
                acc += w * float(f(xx)) * kernel(xx)
            total += acc * rad
        return total

    npanels = max(8, int(math.ceil(X / 0.5)))
    prev = composite(npanels)
    for _ in range(6):
        npanels *= 2
        cur = composite(npanels)
        if abs(cur - prev) < abs_tol:
            integral = cur
            break
        prev = cur
    else:
        raise OracleError("fourier_numeric did not converge to %g" % abs_tol)
    return 2.0 * integral if req.parity == "even" else -2.0j * integral


def r3(m: int) -> int:
    """Number of representations of m as an ordered sum of three squares
    of integers (with signs), counted by exhaustive search."""
    if m < 0:
        raise OracleError("r3 requires m >= 0")
    count = 0
    a = 0
    while a * a <= m:
        rem_a = m - a * a
        mult_a = 1 if a == 0 else 2
        b = 0
        while b * b <= rem_a:
            c2 = rem_a - b * b
            c = math.isqrt(c2)
            if c * c == c2:
                mult = mult_a * (1 if b == 0 else 2) * (1 if c == 0 else 2)
                count += mult
            b += 1
        a += 1
    return count


def poisson_residual(f_evaluator, fhat_evaluator, N: int) -> float:
    """|sum_{|n|<=N} f(n) - sum_{|n|<=N} fhat(n)|, the truncated Poisson
    summation residual."""
    sf = complex(f_evaluator(0.0))
    sfh = complex(fhat_evaluator(0.0))
    for n in range(1, N + 1):
        sf += complex(f_evaluator(float(n))) + complex(f_evaluator(float(-n)))
        sfh += complex(fhat_evaluator(float(n))) + complex(fhat_evaluator(float(-n)))
    return abs(sf - sfh)


def _derivative_richardson(f, h: float, levels: int = 2) -> tuple[float, float]:
    """Richardson table over central differences D(h/2^k); error of the
    final entry is O(h^{2*levels})."""
    row = []
    for k in range(levels):
        hk = h / (2 ** k)
        d = (complex(f(hk)) - complex(f(-hk))) / (2.0 * hk)
        new_row = [d]
        for j, prev in enumerate(row, start=1):
            fac = 4.0 ** j
            new_row.append((fac * new_row[j - 1] - prev) / (fac - 1.0))
        row = new_row
    estimate = row[-1]
    err = abs(row[-1] - row[-2]) if len(row) > 1 else math.inf
    if abs(estimate.imag) < 1e-15 * (1 + abs(estimate)):
        return estimate.real, err
    return estimate, err


def numeric_derivative_at_zero(f_evaluator, h: float) -> tuple[float, float]:
    """Central-difference derivative at 0 with one Richardson step at h/2;
    returns (estimate, error_estimate)."""
    if not 0 < h <= 0.1:
        raise OracleError("step h must lie in (0, 0.1]")
    return _derivative_richardson(f_evaluator, h, levels=2)
