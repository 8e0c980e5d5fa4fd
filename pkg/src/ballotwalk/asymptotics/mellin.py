"""Direct summation of the Gaussian harmonic sums against their closed main terms.

Both sides are evaluated at high precision; the closed forms are exact up to
errors smaller than any power of ``m``, so the relative gap should sit near the
working precision for moderate ``m``.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from typing import Callable, Iterator, NamedTuple

import mpmath
from mpmath import mp, mpf

from ballotwalk.closed_form import HalfInteger
from ballotwalk.special_fns import (
    DEFAULT_DPS,
    Family,
    KappaCase,
    Parity,
    dirichlet_beta,
    euler_gamma,
    digamma_half,
    gamma_half,
    kappa,
    zeta_int,
)

REL_CUTOFF = mpf("1e-40")


class MellinCheck(NamedTuple):
    lhs: mpf
    rhs: mpf

    @property
    def rel_gap(self) -> mpf:
        return abs(self.lhs - self.rhs) / abs(self.rhs)


class MellinCase(enum.Enum):
    ZERO = "zero"
    LOG = "log"
    POWER = "power"


def truncated_sum(terms: Iterator[tuple[mpf, bool]], cutoff=REL_CUTOFF) -> mpf:
    """Sum ``(term, past_peak)`` pairs until two consecutive negligible terms past the peak."""
    total = mpf(0)
    small = 0
    for term, past_peak in terms:
        total += term
        if past_peak and abs(term) <= cutoff * abs(total):
            small += 1
            if small >= 2:
                break
        else:
            small = 0
    return total


def _lattice_sum(first_h: int, offset: int, m: HalfInteger, weight: Callable, power: int) -> mpf:
    # sum over h = first_h, first_h + 2, ... and k >= 0 of weight(h, x, k), where
    # x = (h + offset)(2k + 1)/2 and the Gaussian exp(-x**2/m) is in weight.
    # Past the peak of x**power exp(-x**2/m) terms decrease monotonically.
    mm = mpf(m.twice) / 2
    peak = mpf(power) / 2

    def row(h: int) -> mpf:
        def ks():
            k = 0
            while True:
                x = mpf((h + offset) * (2 * k + 1)) / 2
                yield weight(h, x, k), x * x / mm > peak
                k += 1

        return truncated_sum(ks())

    def rows():
        h = first_h
        while True:
            x0 = mpf(h + offset) / 2
            yield row(h), x0 * x0 / mm > peak
            h += 2

    return truncated_sum(rows())


def mellin_T(j: int, r: int, m, dps: int = DEFAULT_DPS) -> MellinCheck:
    """``sum (-1)**k tau**(2j+1) (h+1)**r exp(-tau**2/m)`` over ``h + 1 = 2m (mod 2)``.

    Main term ``2**(r-1) Gamma(j + 1 + r/2) beta(r + 1) m**(j + 1 + r/2)``.
    """
    if j < 0 or r < 0:
        raise ValueError("j and r must be non-negative")
    m = HalfInteger.of(m)
    with mp.workdps(dps + 10):
        mm = mpf(m.twice) / 2
        first_h = (m.twice + 1) % 2

        def weight(h, tau, k):
            t = tau ** (2 * j + 1) * mpf(h + 1) ** r * mpmath.exp(-tau * tau / mm)
            return -t if k % 2 else t

        lhs = _lattice_sum(first_h, 1, m, weight, 2 * j + 1 + r)
        rhs = (
            mpf(2) ** (r - 1)
            * gamma_half(Fraction(2 * j + 2 + r, 2), dps)
            * dirichlet_beta(r + 1, dps)
            * mm ** (j + 1 + mpf(r) / 2)
        )
        return MellinCheck(+lhs, +rhs)


def _check_case(case: MellinCase, j: int, r: int) -> None:
    ok = {
        MellinCase.ZERO: j == 0 and r == 0,
        MellinCase.LOG: j >= 1 and r == 0,
        MellinCase.POWER: j >= 0 and r >= 1,
    }[case]
    if not ok:
        raise ValueError(f"parameters j={j}, r={r} do not fit case {case.value}")


def mellin_U_main_term(case: MellinCase, j: int, r: int, m, dps: int = DEFAULT_DPS) -> mpf:
    case = MellinCase(case)
    _check_case(case, j, r)
    m = HalfInteger.of(m)
    with mp.workdps(dps + 10):
        mm = mpf(m.twice) / 2
        if case is MellinCase.ZERO:
            return mpmath.sqrt(mm * mp.pi) / 4
        if case is MellinCase.LOG:
            bracket = (
                mpmath.log(mm) / 2
                + 2 * euler_gamma(dps)
                + mp.ln2
                + digamma_half(Fraction(2 * j + 1, 2), dps) / 2
                + mpf(1) / (2 * j)
            )
            if not m.is_integer:
                bracket += 2 * mp.ln2 - 2
            return bracket * mpf(j) / 2 * gamma_half(Fraction(2 * j + 1, 2), dps) * mm ** (j + mpf(1) / 2)
        kcase = KappaCase(Family.U_CASE, Parity.of(m.value))
        first = j * gamma_half(Fraction(2 * j + 1, 2), dps) * kappa(kcase, 1 - r, dps) * mm ** (j + mpf(1) / 2)
        second = (
            (j + mpf(r) / 2)
            / 2
            * gamma_half(Fraction(2 * j + r + 1, 2), dps)
            * (mpf(2) ** (r + 1) - 1)
            * zeta_int(r + 1, dps)
            * mm ** (j + mpf(r + 1) / 2)
        )
        return first + second


def mellin_U(case: "MellinCase | str", j: int, r: int, m, dps: int = DEFAULT_DPS) -> MellinCheck:
    """``sum ((2 v**2 - m)/m) v**(2j) (h+2)**r exp(-v**2/m)`` over ``h = 2m (mod 2)``."""
    case = MellinCase(case)
    _check_case(case, j, r)
    m = HalfInteger.of(m)
    with mp.workdps(dps + 10):
        mm = mpf(m.twice) / 2
        first_h = m.twice % 2

        def weight(h, v, k):
            v2 = v * v
            return (2 * v2 - mm) / mm * v2**j * mpf(h + 2) ** r * mpmath.exp(-v2 / mm)

        lhs = _lattice_sum(first_h, 2, m, weight, 2 * j + 2 + r)
        return MellinCheck(+lhs, +mellin_U_main_term(case, j, r, m, dps))


def valid_cases(family: str) -> list[tuple]:
    """The ``(case, j, r)`` combinations with ``j, r`` in ``{0, 1, 2}``."""
    if family == "T":
        return [(None, j, r) for j in range(3) for r in range(3)]
    out = []
    for j in range(3):
        for r in range(3):
            if j == 0 and r == 0:
                out.append((MellinCase.ZERO, j, r))
            elif r == 0:
                out.append((MellinCase.LOG, j, r))
            else:
                out.append((MellinCase.POWER, j, r))
    return out
