# Theta constants, Hauptmoduls and the exact form tables
# =======================================================
#
# Everything downstream rests on two layers: exact q-expansions over the
# rationals, and fast numerical theta constants obtained by reducing a
# point into a fundamental domain and pushing the values back through
# the recorded Moebius word.  This script walks through both.

from fractions import Fraction

from thetainterp import (
    build_form,
    coefficient,
    eval_modular,
    form_q_expansion,
    modular_series,
    theta_constants,
)

# ---------------------------------------------------------------------
# Exact q-expansions (p = e^{i pi z})
# ---------------------------------------------------------------------

print("q-expansions (coefficients are exact rationals):")
for name in ("theta3", "lambda", "J", "J_inv"):
    s = modular_series(name, 5)
    terms = ["%s p^%d" % (coefficient(s, e), e)
             for e in range(s.min_exp, 5) if coefficient(s, e)]
    print("  %-6s = %s + O(p^5)" % (name, " + ".join(terms[:4])))

# The Hauptmodul J = lambda(1 - lambda)/16 takes the value 1/64 at z = i,
# the maximum of |J| on the relevant contour.
m = eval_modular(1j)
print("\nvalues at z = i:")
print("  lambda(i) = %.15f  (exactly 1/2)" % m.lam.real)
print("  J(i)      = %.15f  (exactly 1/64 = %.15f)" % (m.J.real, 1 / 64))

# ---------------------------------------------------------------------
# Theta constants anywhere in the upper half-plane
# ---------------------------------------------------------------------

z = 0.37 + 0.024j  # deliberately close to the real axis
t = theta_constants(z)
print("\ntheta constants at %s:" % z)
print("  Theta2 = %s" % t.t2)
print("  Theta3 = %s" % t.t3)
print("  Theta4 = %s" % t.t4)
print("  Jacobi identity residual: %.2e" % t.residual)

# ---------------------------------------------------------------------
# The weakly holomorphic forms behind the interpolation basis
# ---------------------------------------------------------------------
#
# For each parity (weight 3/2 for even, 1/2 for odd), sign eps and pole
# order n there is a unique form  base * (1-2 lambda)^s * P(1/J)  whose
# q-expansion is p^{-n} + O(p) (eps = '+') or p^{-n} + O(1) (eps = '-').
# The polynomial P is found by an exact triangular solve.

print("\nmonic polynomials P (coefficients of powers of 1/J):")
for parity in ("even", "odd"):
    for eps in ("+", "-"):
        for n in range((0 if eps == "+" else 1), 4):
            spec = build_form(parity, eps, n)
            print("  %-4s %s n=%d: %s"
                  % (parity, eps, n, [str(c) for c in spec.poly]))

# The defining q-structure, checked exactly:
spec = build_form("even", "-", 3)
s = form_q_expansion(spec, 3)
print("\nq-expansion of the (even, -, 3) form:")
for e in range(-3, 3):
    print("  p^%+d: %s" % (e, coefficient(s, e)))
assert coefficient(s, -3) == 1
assert coefficient(s, -2) == coefficient(s, -1) == Fraction(0)
print("structure p^-3 + O(1) confirmed exactly.")
