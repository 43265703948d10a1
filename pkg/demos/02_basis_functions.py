# The interpolation basis functions and how they are computed
# ============================================================
#
# The even basis function b_n^eps is a contour integral of the
# corresponding weakly holomorphic form against a Gaussian kernel along
# the upper unit semicircle; for x^2 large the contour is pushed to a
# vertical line, giving a cancellation-free Laplace-type integral.
# Every value comes back with an error estimate and the method used.

import math

from thetainterp import d0_closed_form, eval_a, eval_b, eval_d

# ---------------------------------------------------------------------
# The delta property: b_n^eps(sqrt m) = delta_{nm}
# ---------------------------------------------------------------------

print("b_2^+ sampled on the nodes sqrt(m):")
for m in range(6):
    rep = eval_b("+", 2, math.sqrt(m), abs_tol=1e-10)
    print("  m=%d: %+.12f  (%s, est. err %.1e)"
          % (m, rep.value, rep.method, rep.abs_error_estimate))

print("\nd_1^- sampled on the nodes (values are delta_{nm} sqrt(m)):")
for m in range(1, 6):
    rep = eval_d("-", 1, math.sqrt(m), abs_tol=1e-10)
    print("  m=%d: %+.12f" % (m, rep.value))

# ---------------------------------------------------------------------
# Two routes to the same number
# ---------------------------------------------------------------------
#
# For x^2 > n both the oscillatory contour integral and the Laplace
# representation are valid; they agree to the requested tolerance even
# though the contour integrand is ~e^{pi(n - x^2)} times larger than the
# answer.

x = math.sqrt(6.5)
c = eval_b("+", 3, x, abs_tol=1e-10, method="contour")
l = eval_b("+", 3, x, abs_tol=1e-10, method="laplace")
print("\nb_3^+(%.4f):" % x)
print("  contour: %+.14f" % c.value)
print("  laplace: %+.14f" % l.value)
print("  difference: %.2e" % abs(c.value - l.value))

# ---------------------------------------------------------------------
# An elementary closed form
# ---------------------------------------------------------------------
#
# The first odd basis function is elementary:
#     d_0^+(x) = sin(pi x^2) / sinh(pi x),
# which makes it a sharp end-to-end test of the contour machinery.

print("\nd_0^+ against sin(pi x^2)/sinh(pi x):")
for x in (0.5, 1.25, 2.0, 3.5):
    rep = eval_d("+", 0, x, abs_tol=1e-11, method="contour")
    print("  x=%.2f: contour %+.13f   closed form %+.13f"
          % (x, rep.value, d0_closed_form(x)))

# ---------------------------------------------------------------------
# The combinations used by the even interpolation formula
# ---------------------------------------------------------------------
#
# a_n = (b_n^+ + b_n^-)/2 multiplies f(sqrt n); ahat_n = (b_n^+ - b_n^-)/2
# multiplies fhat(sqrt n).  At x = 0 they specialize to the weights of
# the classical Poisson summation formula over sqrt(n) nodes:
# a_0(0) = 1/2, a_{k^2}(0) = -1, ahat_{k^2}(0) = 1, all others 0.

print("\na_n(0) and ahat_n(0):")
for n in range(10):
    a, ahat = eval_a(n, 0.0, abs_tol=1e-10)
    print("  n=%d: a=%+.10f  ahat=%+.10f" % (n, a.value, ahat.value))
