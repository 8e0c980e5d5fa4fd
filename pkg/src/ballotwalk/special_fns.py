"""High-precision constants and special values used by the asymptotic formulas.

Values are ``mpmath.mpf`` computed at ``dps`` significant digits (default 30)
plus a few guard digits.  Two independent routes are kept for the Dirichlet beta
and odd zeta values: a closed/Hurwitz route and an accelerated alternating series.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath
from mpmath import mp, mpf

from ballotwalk.closed_form import HalfInteger
from ballotwalk.errors import PoleError

DEFAULT_DPS = 30
_GUARD = 10


def bernoulli(k: int) -> Fraction:
    """Bernoulli number ``B_k`` with ``B_1 = -1/2``."""
    p, q = mpmath.bernfrac(k)
    return Fraction(int(p), int(q))


def alternating_sum(term, dps: int = DEFAULT_DPS):
    """``sum_{k>=0} (-1)**k term(k)`` by Cohen-Villegas-Zagier acceleration.

    Valid for completely monotone ``term``; error about ``5.8**-n`` with ``n`` terms.
    """
    with mp.workdps(dps + _GUARD):
        n = int(1.31 * (dps + _GUARD)) + 5
        d = (3 + mpmath.sqrt(8)) ** n
        d = (d + 1 / d) / 2
        b = mpf(-1)
        c = -d
        s = mpf(0)
        for k in range(n):
            c = b - c
            s += c * term(k)
            b = (k + n) * (k - n) * b / ((k + mpf(1) / 2) * (k + 1))
        return +(s / d)


def dirichlet_beta(s: int, dps: int = DEFAULT_DPS):
    """``beta(s) = sum_k (-1)**k (2k+1)**-s`` at an integer ``s``.

    ``s >= 2`` uses the Hurwitz-zeta difference, ``s = 1`` the digamma limit of
    that difference, and ``s <= 0`` the Euler numbers ``beta(-k) = E_k / 2``.
    """
    s = int(s)
    with mp.workdps(dps + _GUARD):
        if s <= 0:
            return mpf(mpmath.eulernum(-s)) / 2
        if s == 1:
            return (mpmath.digamma(mpf(3) / 4) - mpmath.digamma(mpf(1) / 4)) / 4
        q = mpf(1) / 4
        return (mpmath.zeta(s, q) - mpmath.zeta(s, 3 * q)) / mpf(4) ** s


def dirichlet_beta_series(s: int, dps: int = DEFAULT_DPS):
    """``beta(s)`` for ``s >= 1`` straight from its alternating series, accelerated."""
    if s < 1:
        raise ValueError("series route needs s >= 1")
    return alternating_sum(lambda k: mpf(2 * k + 1) ** -s, dps)


def beta_reflected(s: int, dps: int = DEFAULT_DPS):
    """Right side of the reflection formula, ``(pi/2)**-s sin(pi s/2) Gamma(s) beta(s)``.

    Equals ``beta(1 - s)``.
    """
    with mp.workdps(dps + _GUARD):
        return (mp.pi / 2) ** -s * mpmath.sinpi(mpf(s) / 2) * mpmath.gamma(s) * dirichlet_beta(s, dps)


def zeta_int(s: int, dps: int = DEFAULT_DPS):
    """Riemann zeta at an integer other than 1."""
    s = int(s)
    if s == 1:
        raise PoleError("zeta has a pole at s = 1")
    with mp.workdps(dps + _GUARD):
        if s <= 0:
            k = -s
            b = bernoulli(k + 1)
            val = (-1) ** k * b / (k + 1)
            return mpf(val.numerator) / val.denominator
        if s % 2 == 0:
            b = bernoulli(s)
            k = s // 2
            coef = (-1) ** (k + 1) * b / (2 * math.factorial(s))
            return mpf(coef.numerator) / coef.denominator * (2 * mp.pi) ** s
        return mpmath.zeta(s)


def zeta_series(s: int, dps: int = DEFAULT_DPS):
    """``zeta(s)`` for ``s >= 2`` via the accelerated eta series ``eta(s) / (1 - 2**(1-s))``."""
    if s < 2:
        raise ValueError("series route needs s >= 2")
    eta = alternating_sum(lambda k: mpf(k + 1) ** -s, dps)
    with mp.workdps(dps + _GUARD):
        return eta / (1 - mpf(2) ** (1 - s))


def euler_gamma(dps: int = DEFAULT_DPS):
    with mp.workdps(dps + _GUARD):
        return +mp.euler


def catalan(dps: int = DEFAULT_DPS):
    return dirichlet_beta(2, dps)


def gamma_half(x, dps: int = DEFAULT_DPS):
    """``Gamma(x)`` at a positive half-integer, from ``Gamma(1/2) = sqrt(pi)`` and ``Gamma(x+1) = x Gamma(x)``."""
    m = HalfInteger.of(x)
    with mp.workdps(dps + _GUARD):
        if m.is_integer:
            return mpf(mpmath.factorial(m.twice // 2 - 1))
        g = mpmath.sqrt(mp.pi)
        for i in range(1, m.twice // 2 + 1):
            g *= mpf(2 * i - 1) / 2
        return g


def digamma_half(x, dps: int = DEFAULT_DPS):
    """``psi(x)`` at a positive half-integer via harmonic-type partial sums."""
    m = HalfInteger.of(x)
    with mp.workdps(dps + _GUARD):
        gamma = mp.euler
        if m.is_integer:
            n = m.twice // 2
            return sum((mpf(1) / i for i in range(1, n)), mpf(0)) - gamma
        j = m.twice // 2
        return -gamma - 2 * mp.ln2 + sum((mpf(2) / (2 * i - 1) for i in range(1, j + 1)), mpf(0))


class Family(enum.Enum):
    T_CASE = "T"
    U_CASE = "U"


class Parity(enum.Enum):
    INTEGER_M = "integer"
    HALF_INTEGER_M = "half-integer"

    @classmethod
    def of(cls, m) -> "Parity":
        return cls.INTEGER_M if HalfInteger.of(m).is_integer else cls.HALF_INTEGER_M


@dataclass(frozen=True)
class KappaCase:
    family: Family
    parity: Parity


def _zeta(s, dps: int):
    f = Fraction(s)
    if f.denominator == 1:
        return zeta_int(int(f), dps)
    with mp.workdps(dps + _GUARD):
        return mpmath.zeta(mpf(f.numerator) / f.denominator)


def kappa(case: KappaCase, s, dps: int = DEFAULT_DPS):
    """Parity-restricted zeta sum over ``h + 1`` (T family) or ``h + 2`` (U family).

    Integer ``m``: ``2**-s zeta(s)``.  Half-integer ``m``: ``(1 - 2**-s) zeta(s)``,
    minus 1 in the U family because the sum starts at 3.
    """
    if Fraction(s) == 1:
        raise PoleError("kappa has a pole at s = 1")
    z = _zeta(s, dps)
    with mp.workdps(dps + _GUARD):
        two_s = mpf(2) ** (-mpf(Fraction(s).numerator) / Fraction(s).denominator)
        if case.parity is Parity.INTEGER_M:
            return two_s * z
        val = (1 - two_s) * z
        if case.family is Family.U_CASE:
            val -= 1
        return val
