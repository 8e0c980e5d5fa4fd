"""Stirling coefficients and the shifted central binomial expansion.

``C(2n, n - a) ~ 4**n / sqrt(n pi) * exp(-a**2 / n) * S(a, n)`` with
``S(a, n) = sum c[l, j] a**(2j) / n**l``.  The coefficients ``c`` are the exact
``a**(2j) n**-l`` coefficients of a product of five series (three Stirling
factors, the ``(1 - a**2/n**2)**-1/2`` factor and the exponential remainder of
the entropy term), multiplied out as truncated bivariate series.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

import mpmath
from mpmath import mp, mpf

from ballotwalk.closed_form import HalfInteger
from ballotwalk.errors import ValidityError
from ballotwalk.special_fns import DEFAULT_DPS, bernoulli

# (power of alpha, power of 1/n) -> coefficient
Bivariate = dict[tuple[int, int], Fraction]


@lru_cache(maxsize=None)
def _stirling_table(order: int) -> tuple[Fraction, ...]:
    # exp of log n! - log(sqrt(2 pi n)(n/e)**n) = sum B_2k / (2k(2k-1) n**(2k-1))
    g = [Fraction(0)] * (order + 1)
    for k in range(1, order // 2 + 2):
        if 2 * k - 1 <= order:
            g[2 * k - 1] = bernoulli(2 * k) / (2 * k * (2 * k - 1))
    e = [Fraction(1)] + [Fraction(0)] * order
    for k in range(1, order + 1):
        e[k] = sum((i * g[i] * e[k - i] for i in range(1, k + 1)), Fraction(0)) / k
    return tuple(e)


def stirling_d(r: int) -> Fraction:
    """Coefficient ``d_r`` in ``n! ~ sqrt(2 pi n) (n/e)**n sum d_r n**-r``."""
    if not 0 <= r <= 12:
        raise ValueError("stirling_d is tabulated for 0 <= r <= 12")
    return _stirling_table(12)[r]


def _mul(x: Bivariate, y: Bivariate, order: int) -> Bivariate:
    out: Bivariate = {}
    for (a1, b1), c1 in x.items():
        for (a2, b2), c2 in y.items():
            b = b1 + b2
            if b > order:
                continue
            key = (a1 + a2, b)
            out[key] = out.get(key, Fraction(0)) + c1 * c2
    return {k: v for k, v in out.items() if v}


def _stirling_factor(order: int, sign: int) -> Bivariate:
    # sum_r (-1)**r d_r (n + sign*a)**-r, expanded in a/n
    d = _stirling_table(order)
    out: Bivariate = {}
    for r in range(order + 1):
        base = (-1) ** r * d[r]
        if r == 0:
            out[(0, 0)] = out.get((0, 0), Fraction(0)) + base
            continue
        for i in range(order - r + 1):
            coef = base * (-1) ** i * comb(r + i - 1, i) * sign**i
            out[(i, r + i)] = out.get((i, r + i), Fraction(0)) + coef
    return out


def _exp_remainder(order: int) -> Bivariate:
    q: Bivariate = {}
    t = 0
    while 3 + 2 * t <= order:
        q[(4 + 2 * t, 3 + 2 * t)] = Fraction(-1, (t + 2) * (2 * t + 3))
        t += 1
    out: Bivariate = {(0, 0): Fraction(1)}
    power: Bivariate = {(0, 0): Fraction(1)}
    r = 1
    while 3 * r <= order:
        power = _mul(power, q, order)
        for k, v in power.items():
            out[k] = out.get(k, Fraction(0)) + v / factorial(r)
        r += 1
    return out


@dataclass(frozen=True)
class StirlingTable:
    d: tuple[Fraction, ...]
    c: dict[tuple[int, int], Fraction]
    order: int


@lru_cache(maxsize=None)
def stirling_table(order: int) -> StirlingTable:
    """All ``c[l, j]`` with ``l <= order``."""
    d = _stirling_table(order)
    f1: Bivariate = {(0, r): d[r] / 2**r for r in range(order + 1)}
    f4: Bivariate = {}
    for r in range(order // 2 + 1):
        binom_half = Fraction(1)
        for i in range(r):
            binom_half *= Fraction(-1, 2) - i
        binom_half /= factorial(r)
        f4[(2 * r, 2 * r)] = (-1) ** r * binom_half
    prod = f1
    for f in (_stirling_factor(order, 1), _stirling_factor(order, -1), f4, _exp_remainder(order)):
        prod = _mul(prod, f, order)
    if any(a % 2 for a, _ in prod):
        raise AssertionError("odd powers of alpha must cancel")
    c = {(b, a // 2): v for (a, b), v in prod.items()}
    return StirlingTable(d, c, order)


def binom_c(l: int, j: int) -> Fraction:
    """``c[l, j]``: coefficient of ``alpha**(2j) / n**l`` in ``S(alpha, n)``."""
    if l < 0 or j < 0:
        raise ValueError("indices must be non-negative")
    return stirling_table(max(l, 1)).c.get((l, j), Fraction(0))


def central_binom_approx(n, alpha, L: int, dps: int = DEFAULT_DPS):
    """Approximate ``C(2n, n - alpha)`` keeping the ``S`` terms with ``l <= L``.

    ``n`` is a half-integer, ``n - alpha`` must be a non-negative integer and
    ``|alpha| <= n**(2/3)``; beyond that window the binomial is smaller than any
    power of ``n`` and the expansion is not used.
    """
    m = HalfInteger.of(n).value
    a = Fraction(alpha)
    if (m - a).denominator != 1 or m - a < 0:
        raise ValueError("n - alpha must be a non-negative integer")
    if float(abs(a)) ** 3 > float(m) ** 2:
        raise ValidityError(f"|alpha| = {a} exceeds n**(2/3) for n = {m}")
    table = stirling_table(max(L, 1))
    s = sum(
        (v * a ** (2 * j) / m**l for (l, j), v in table.c.items() if l <= L),
        Fraction(0),
    )
    with mp.workdps(dps + 10):
        nn = mpf(m.numerator) / m.denominator
        aa = mpf(a.numerator) / a.denominator
        pre = mpf(4) ** nn / mpmath.sqrt(nn * mp.pi) * mpmath.exp(-aa * aa / nn)
        return pre * mpf(s.numerator) / s.denominator
