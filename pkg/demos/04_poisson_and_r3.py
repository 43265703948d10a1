# Poisson summation, sums of three squares, and the oracle layer
# ===============================================================
#
# The package carries an independent "oracle" module that recomputes key
# quantities by completely different algorithms (real-axis quadrature for
# Fourier transforms, exhaustive lattice search for representation
# counts).  Agreement between the two paths is evidence, not circularity.

import cmath
import math

from thetainterp import (
    TransformRequest,
    eval_b,
    fourier_numeric,
    poisson_residual,
    r3,
    r3_identity_check,
)

# ---------------------------------------------------------------------
# The basis functions are Fourier eigenfunctions
# ---------------------------------------------------------------------
#
# b_n^+ transforms to itself, b_n^- to minus itself.  The oracle computes
# the transform by brute-force cosine quadrature on the real axis.

print("Fourier eigenfunction property via real-axis quadrature:")
for eps, sign in (("+", 1.0), ("-", -1.0)):
    f = lambda x, e=eps: eval_b(e, 2, x, abs_tol=1e-9).value
    for xi in (0.4, 1.2):
        got = fourier_numeric(TransformRequest("even", f, 10.0, xi), abs_tol=1e-9)
        print("  eps=%s xi=%.1f: |FT(b_2)(xi) - (%+.0f) b_2(xi)| = %.2e"
              % (eps, xi, sign, abs(got - sign * f(xi))))

# ---------------------------------------------------------------------
# Counting sums of three squares
# ---------------------------------------------------------------------

print("\nr3(m), the number of ways to write m as a sum of three squares:")
print("  m : " + "  ".join("%d" % m for m in range(11)))
print("  r3: " + "  ".join("%d" % r3(m) for m in range(11)))

# ---------------------------------------------------------------------
# A summation formula over the sqrt(n) nodes
# ---------------------------------------------------------------------
#
# For odd Schwartz f:
#   f'(0) + sum r3(n) f(sqrt n)/sqrt(n)
#     = i fhat'(0) + sum r3(n) i fhat(sqrt n)/sqrt(n).
# Checked on an odd Gaussian with closed-form transform.

tau = 1j
fac = -1j * (-1j * tau) ** (-1.5)
f = lambda x: x * cmath.exp(1j * math.pi * tau * x * x)
fh = lambda x: fac * x * cmath.exp(1j * math.pi * (-1 / tau) * x * x)
res = r3_identity_check(f, fh, N=40, deriv_pair=(1.0, fac))
print("\nthree-squares summation identity residual (odd Gaussian, N=40): %.2e"
      % res)

# ---------------------------------------------------------------------
# Classical Poisson summation as a sanity check of the oracle itself
# ---------------------------------------------------------------------

g = lambda x: math.exp(-math.pi * x * x)
print("Poisson residual for the self-dual Gaussian: %.2e"
      % poisson_residual(g, g, 10))
