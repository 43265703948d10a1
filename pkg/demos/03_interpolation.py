# Reconstructing Schwartz functions from their values at sqrt(n)
# ===============================================================
#
# An even Schwartz function is determined by f(sqrt n) and fhat(sqrt n);
# an odd one by f(sqrt n)/sqrt(n) together with f'(0) and fhat'(0).
# Gaussians e^{i pi tau x^2} have closed-form samples *and* closed-form
# transforms, so they make perfect end-to-end tests.

import cmath
import math

from thetainterp import gaussian_samples, reconstruct_even, reconstruct_odd

# ---------------------------------------------------------------------
# Even reconstruction
# ---------------------------------------------------------------------

tau = 0.6 + 1j
samples = gaussian_samples("even", tau, N=40)
print("even Gaussian e^{i pi tau x^2}, tau = %s, N = 40:" % tau)
for x in (0.0, 0.3, 1.0, 1.7, 2.5):
    want = cmath.exp(1j * math.pi * tau * x * x)
    got = reconstruct_even(samples, x, abs_tol=1e-9)
    print("  x=%.2f: |error| = %.2e  (%d basis terms, tail bound %.1e)"
          % (x, abs(got.value - want), got.terms_evaluated, got.tail_bound))

# ---------------------------------------------------------------------
# Odd reconstruction
# ---------------------------------------------------------------------
#
# The odd formula additionally needs the derivative pair (f'(0), fhat'(0))
# and starts from the elementary function d_0^+.

samples = gaussian_samples("odd", 2j, N=40)
print("\nodd Gaussian x e^{-2 pi x^2}, N = 40:")
for x in (0.3, 1.0, 2.2):
    want = x * cmath.exp(1j * math.pi * 2j * x * x)
    got = reconstruct_odd(samples, x, abs_tol=1e-9)
    print("  x=%.2f: |error| = %.2e" % (x, abs(got.value - want)))

# ---------------------------------------------------------------------
# Linearity: superpositions of Gaussians reconstruct too
# ---------------------------------------------------------------------

a = gaussian_samples("even", 1j, 40)
b = gaussian_samples("even", 0.5j, 40)
combo = a.scaled(2.0) + b.scaled(-1.0)
x = 1.4
want = 2 * math.exp(-math.pi * x * x) - math.exp(-0.5 * math.pi * x * x)
got = reconstruct_even(combo, x, abs_tol=1e-9)
print("\nsuperposition 2 e^{-pi x^2} - e^{-pi x^2/2} at x = %.1f:" % x)
print("  reconstructed %+.12f, exact %+.12f, |error| = %.2e"
      % (got.value.real, want, abs(got.value - want)))
