"""Numerical evaluation of theta constants and Hauptmoduls on the upper
half-plane.

Points are first reduced into a fundamental domain (where the theta sums
converge after a handful of terms) and the values are pushed back through
the recorded Moebius word using the S- and T-transformation laws.

Sign convention: direct summation gives

    Theta3(-1/z) = sqrt(-iz) Theta3(z),
    Theta2(-1/z) = sqrt(-iz) Theta4(z),
    Theta4(-1/z) = sqrt(-iz) Theta2(z),

with sqrt(-iz) the principal branch (positive on the imaginary axis).
These signs are calibrated once against direct summation at z = 2i and
frozen by a test.
"""

from __future__ import annotations

from dataclasses import dataclass

from ._backend import FloatBackend, backend_for_bits

_FLOAT = FloatBackend()

_MAX_REDUCTION_STEPS = 10_000
_DOMAIN_TOL = 1e-12


class ReductionError(Exception):
    """Fundamental-domain reduction failed (e.g. point not in the upper
    half-plane)."""


@dataclass(frozen=True)
class MoebiusWord:
    """A word in Moebius-group generators together with its matrix.

    `letters` is a sequence of (generator, exponent) pairs, generator one of
    "S" (exponent 1) or "T" (any nonzero integer exponent; even exponents
    for theta-group words).  `matrix` is (a, b, c, d), the ordered product
    of the letter matrices.
    """

    letters: tuple[tuple[str, int], ...]
    matrix: tuple[int, int, int, int]

    def __post_init__(self):
        a, b, c, d = self.matrix
        if a * d - b * c != 1:
            raise ValueError("word matrix must have determinant 1")

    @staticmethod
    def identity() -> "MoebiusWord":
        return MoebiusWord((), (1, 0, 0, 1))

    @staticmethod
    def letter_matrix(gen: str, exp: int) -> tuple[int, int, int, int]:
        if gen == "T":
            return (1, exp, 0, 1)
        if gen == "S":
            if exp != 1:
                raise ValueError("S letters must carry exponent 1")
            return (0, -1, 1, 0)
        raise ValueError("unknown generator %r" % gen)

    def append(self, gen: str, exp: int) -> "MoebiusWord":
        a, b, c, d = self.matrix
        e, f, g, h = self.letter_matrix(gen, exp)
        return MoebiusWord(
            self.letters + ((gen, exp),),
            (a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h),
        )

    def apply(self, z):
        a, b, c, d = self.matrix
        return (a * z + b) / (c * z + d)

    def apply_inverse(self, z):
        a, b, c, d = self.matrix
        return (d * z - b) / (-c * z + a)


@dataclass(frozen=True)
class ThetaTriple:
    """Values of the three theta constants at a point, with the Jacobi
    identity residual |t3^4 - t2^4 - t4^4| / max(|t2^4|, |t3^4|, |t4^4|)
    as a consistency check."""

    t2: complex
    t3: complex
    t4: complex
    z: complex
    residual: float


def reduce_sl2(z: complex) -> tuple[complex, MoebiusWord]:
    """Reduce z into the standard SL2(Z) fundamental domain.

    Returns (z', w) with w(z') = z and |z'| >= 1 - 1e-12, |Re z'| <= 1/2 + 1e-12.
    """
    z = complex(z)
    if not z.imag > 0:
        raise ReductionError("point %r is not in the upper half-plane" % (z,))
    u = z
    word = MoebiusWord.identity()
    for _ in range(_MAX_REDUCTION_STEPS):
        n = round(u.real)
        if n != 0:
            u = u - n
            word = word.append("T", n)
        if abs(u) < 1.0 - _DOMAIN_TOL:
            u = -1.0 / u
            word = word.append("S", 1)
        else:
            return u, word
    raise ReductionError("reduction of %r did not converge" % (z,))


def reduce_gamma_theta(tau: complex) -> tuple[complex, MoebiusWord]:
    """Reduce tau into the theta-group fundamental domain
    {|tau| >= 1 - 1e-12, Re tau in [-1 - 1e-12, 1 + 1e-12]}.

    The word uses only S and even powers of T.
    """
    tau = complex(tau)
    if not tau.imag > 0:
        raise ReductionError("point %r is not in the upper half-plane" % (tau,))
    u = tau
    word = MoebiusWord.identity()
    for _ in range(_MAX_REDUCTION_STEPS):
        k = round(u.real / 2.0)
        if k != 0:
            u = u - 2 * k
            word = word.append("T", 2 * k)
        if abs(u) < 1.0 - _DOMAIN_TOL:
            u = -1.0 / u
            word = word.append("S", 1)
        else:
            return u, word
    raise ReductionError("theta-group reduction of %r did not converge" % (tau,))


def _theta_sums(zr, nm):
    """Direct theta sums at a reduced point (terms added until negligible)."""
    i_pi = nm.mpc(0, nm.pi)
    p = nm.exp(i_pi * zr)
    cut = nm.tail_eps
    one = nm.mpc(1)

    # Theta3 = 1 + 2 sum p^(n^2);  Theta4 with alternating signs
    t3 = one
    t4 = one
    pn = one  # p^(n^2), updated incrementally
    podd = p  # p^(2n-1)
    p2 = p * p
    n = 1
    while True:
        pn = pn * podd
        term = 2 * pn
        t3 = t3 + term
        t4 = t4 + (term if n % 2 == 0 else -term)
        if nm.abs(term) < cut:
            break
        podd = podd * p2
        n += 1

    # Theta2 = 2 p^{1/4} sum_{k>=0} p^{k(k+1)}
    s = one
    pk = one  # p^{k(k+1)}
    peven = p2  # p^{2k+2}
    k = 0
    while True:
        pk = pk * peven
        s = s + pk
        if nm.abs(pk) < cut:
            break
        peven = peven * p2
        k += 1
    t2 = 2 * nm.exp(i_pi * zr / 4) * s
    return t2, t3, t4


def _push_through_word(t2, t3, t4, u, letters, nm):
    """Given theta values at u, return values at w(u) by applying the
    letters right-to-left."""
    for gen, exp in reversed(letters):
        if gen == "T":
            if exp % 2 != 0:
                t3, t4 = t4, t3
            phase = nm.exp(nm.mpc(0, nm.pi * nm.real(exp) / 4))
            t2 = phase * t2
            u = u + exp
        else:  # S
            root = nm.sqrt(nm.mpc(0, -1) * u)
            t2, t4 = root * t4, root * t2
            t3 = root * t3
            u = -1 / u
    return t2, t3, t4, u


def theta_constants(z: complex, prec: int | None = None):
    """Theta constants at z (Im z > 0), accurate to ~1e-12 * max(1, |Theta3|)
    in the default double-precision mode.

    With `prec` set (bits), returns gmpy2 complex values at that precision;
    otherwise Python complex.
    """
    nm = _FLOAT if prec is None else backend_for_bits(prec)
    zf = complex(z)
    _, word = reduce_sl2(zf)
    with nm.ctx():
        # the reduction word is found in double precision, but the reduced
        # point is recomputed from the full-precision input
        zz = nm.complexify(z)
        zr = word.apply_inverse(zz)
        t2, t3, t4 = _theta_sums(zr, nm)
        t2, t3, t4, _ = _push_through_word(t2, t3, t4, zr, word.letters, nm)
        t2_4, t3_4, t4_4 = t2 ** 4, t3 ** 4, t4 ** 4
        # relative residual of Theta3^4 = Theta2^4 + Theta4^4, normalized
        # by the largest term: near the cusps at +-1 the smallest term is
        # exponentially below the other two, so the identity can only hold
        # up to rounding in the large terms
        denom = max(nm.abs(t2_4), nm.abs(t3_4), nm.abs(t4_4))
        residual = float(nm.abs(t3_4 - t2_4 - t4_4) / denom) if denom else 0.0
        return ThetaTriple(t2, t3, t4, zf, residual)


@dataclass(frozen=True)
class ModularPoint:
    """Values of the standard modular quantities at one point."""

    theta: complex
    theta_cubed: complex
    lam: complex
    one_minus_2lambda: complex
    J: complex


def eval_modular(z: complex, prec: int | None = None) -> ModularPoint:
    """theta, theta^3, lambda, 1 - 2*lambda and J at z (Im z > 0)."""
    nm = _FLOAT if prec is None else backend_for_bits(prec)
    trip = theta_constants(z, prec=prec)
    with nm.ctx():
        t2, t3 = trip.t2, trip.t3
        lam = (t2 / t3) ** 4
        one = nm.mpc(1)
        j = lam * (one - lam) / 16
        return ModularPoint(
            theta=t3,
            theta_cubed=t3 ** 3,
            lam=lam,
            one_minus_2lambda=one - 2 * lam,
            J=j,
        )


def automorphy_jtheta(z: complex, word: MoebiusWord) -> complex:
    """The weight-1/2 automorphy factor j_theta(z, w) for a theta-group word.

    Uses the cocycle rule j(z, g1 g2) = j(z, g2) * j(g2 z, g1) with
    j(z, S) = (-iz)^{-1/2} (principal branch) and j(z, T^{2k}) = 1.
    """
    u = complex(z)
    if not u.imag > 0:
        raise ReductionError("point %r is not in the upper half-plane" % (z,))
    acc = 1.0 + 0.0j
    for gen, exp in reversed(word.letters):
        if gen == "S":
            acc *= (-1j * u) ** (-0.5)
            u = -1.0 / u
        elif gen == "T":
            if exp % 2 != 0:
                raise ValueError("theta-group words may only contain even T powers")
            u = u + exp
        else:
            raise ValueError("unknown generator %r" % gen)
    return acc
