"""Printed asymptotic expansions in ``n`` and leading-order moments.

Coefficients are exact rational combinations of a few named constants and are
turned into numbers only on evaluation.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

import mpmath
from mpmath import mp, mpf

from ballotwalk.asymptotics.binomial import stirling_table
from ballotwalk.special_fns import DEFAULT_DPS, catalan, dirichlet_beta, zeta_int
from ballotwalk.walks_exact import WalkDomain


def _constants(dps: int) -> dict:
    with mp.workdps(dps + 10):
        pi = +mp.pi
        G = catalan(dps)
        return {
            "1": mpf(1),
            "sqrt(2*pi)": mpmath.sqrt(2 * pi),
            "G*sqrt(2/pi)": G * mpmath.sqrt(2 / pi),
            "pi^2": pi**2,
            "G^2/pi": G**2 / pi,
            "sqrt(2*pi^3)": mpmath.sqrt(2 * pi**3),
            "zeta(3)": zeta_int(3, dps),
            "pi^3": pi**3,
        }


@dataclass(frozen=True)
class Coefficient:
    """``sum q_i * constant_i`` with rational ``q_i``."""

    parts: tuple[tuple[Fraction, str], ...]

    @classmethod
    def of(cls, *parts) -> "Coefficient":
        return cls(tuple((Fraction(q), name) for q, name in parts))

    def value(self, dps: int = DEFAULT_DPS) -> mpf:
        consts = _constants(dps)
        with mp.workdps(dps + 10):
            return sum(
                (mpf(q.numerator) / q.denominator * consts[name] for q, name in self.parts),
                mpf(0),
            )

    def __str__(self) -> str:
        return " + ".join(f"({q})*{name}" for q, name in self.parts)


@dataclass(frozen=True)
class Term:
    exponent: Fraction
    coefficient: Coefficient


@dataclass(frozen=True)
class Expansion:
    quantity: str
    terms: tuple[Term, ...]
    validity: str

    def __post_init__(self):
        exps = [t.exponent for t in self.terms]
        if any(a <= b for a, b in zip(exps, exps[1:])):
            raise ValueError("exponents must be strictly decreasing")

    def evaluate(self, n, terms: "int | None" = None, dps: int = DEFAULT_DPS) -> mpf:
        """Partial sum of the first ``terms`` terms (all by default) at ``n > 0``."""
        use = self.terms if terms is None else self.terms[:terms]
        with mp.workdps(dps + 10):
            nn = mpf(n)
            if nn <= 0:
                raise ValueError("expansions are evaluated at n > 0")
            total = mpf(0)
            for t in use:
                total += t.coefficient.value(dps) * nn ** (mpf(t.exponent.numerator) / t.exponent.denominator)
            return +total

    def leading(self, dps: int = DEFAULT_DPS) -> mpf:
        return self.terms[0].coefficient.value(dps)


class Quantity(enum.Enum):
    P_TOTAL = "p"
    Q_TOTAL = "q"
    EH_N0 = "eh-n0"
    VH_N0 = "vh-n0"
    EH_Z = "eh-z"
    VH_Z = "vh-z"
    BALLOT = "bn"


def _series(quantity: str, start: Fraction, step: Fraction, coeffs, validity: str) -> Expansion:
    terms = tuple(
        Term(start - i * step, c if isinstance(c, Coefficient) else Coefficient.of(*c))
        for i, c in enumerate(coeffs)
    )
    return Expansion(quantity, terms, validity)


def _explicit(quantity: str, exponents, coeffs, validity: str) -> Expansion:
    return Expansion(quantity, tuple(Term(Fraction(e), c) for e, c in zip(exponents, coeffs, strict=True)), validity)


half = Fraction(1, 2)
_MEAN_EXPONENTS = (half, 0, -half, -3 * half, -5 * half)


def _scaled(const: str, *qs) -> list[Coefficient]:
    return [Coefficient.of((q, const)) for q in qs]



_EXPANSIONS = {
    Quantity.P_TOTAL: _series(
        "p_n",
        -half,
        Fraction(1),
        _scaled(
            "sqrt(2*pi)",
            Fraction(1, 2),
            Fraction(-5, 24),
            Fraction(127, 960),
            Fraction(-1571, 16128),
            Fraction(-1896913, 184320),
        ),
        "O(n^(-11/2))",
    ),
    Quantity.EH_N0: _explicit(
        "E H_n",
        _MEAN_EXPONENTS,
        [
            Coefficient.of((2, "G*sqrt(2/pi)")),
            Coefficient.of((-1, "1")),
            Coefficient.of((Fraction(5, 6), "G*sqrt(2/pi)")),
            Coefficient.of((Fraction(-131, 720), "G*sqrt(2/pi)")),
            Coefficient.of((Fraction(1129, 12096), "G*sqrt(2/pi)")),
        ],
        "O(n^(-7/2))",
    ),
    Quantity.VH_N0: _series(
        "V H_n",
        Fraction(1),
        Fraction(1),
        [
            ((Fraction(1, 4), "pi^2"), (-8, "G^2/pi")),
            ((Fraction(1, 6), "pi^2"), (Fraction(-20, 3), "G^2/pi")),
            ((Fraction(-1, 180), "pi^2"), (Fraction(12, 180), "G^2/pi")),
            ((Fraction(11, 1890), "pi^2"), (Fraction(-265, 1890), "G^2/pi")),
        ],
        "O(n^(-3))",
    ),
    Quantity.Q_TOTAL: _series(
        "q_n",
        Fraction(-1),
        Fraction(1),
        [
            ((q, "1"),)
            for q in (
                Fraction(1),
                Fraction(-4, 3),
                Fraction(88, 45),
                Fraction(-976, 315),
                Fraction(3488, 675),
                Fraction(-276928, 31185),
            )
        ],
        "O(n^(-7))",
    ),
    Quantity.EH_Z: _explicit(
        "E H~_n",
        _MEAN_EXPONENTS,
        [
            Coefficient.of((Fraction(1, 4), "sqrt(2*pi^3)")),
            Coefficient.of((-2, "1")),
            Coefficient.of((Fraction(3, 16), "sqrt(2*pi^3)")),
            Coefficient.of((Fraction(-539, 5760), "sqrt(2*pi^3)")),
            Coefficient.of((Fraction(50713, 483840), "sqrt(2*pi^3)")),
        ],
        "O(n^(-7/2))",
    ),
    Quantity.VH_Z: _series(
        "V H~_n",
        Fraction(1),
        Fraction(1),
        [
            ((Fraction(28, 8), "zeta(3)"), (Fraction(-1, 8), "pi^3")),
            ((Fraction(224, 48), "zeta(3)"), (Fraction(-9, 48), "pi^3")),
            ((Fraction(-1792, 2880), "zeta(3)"), (Fraction(67, 2880), "pi^3")),
            ((Fraction(107520, 120960), "zeta(3)"), (Fraction(-4189, 120960), "pi^3")),
        ],
        "O(n^(-3))",
    ),
    Quantity.BALLOT: _series(
        "B_n / 2^n",
        Fraction(-1),
        Fraction(1),
        [
            ((q, "1"),)
            for q in (
                Fraction(1, 4),
                Fraction(1, 6),
                Fraction(7, 45),
                Fraction(10, 63),
                Fraction(764, 4725),
                Fraction(4952, 31185),
            )
        ],
        "O(n^(-7)); multiply by 2^n for B_n",
    ),
}


def expansion(quantity: "Quantity | str") -> Expansion:
    return _EXPANSIONS[Quantity(quantity)]


def moment_leading(domain: "WalkDomain | str", r: int, dps: int = DEFAULT_DPS) -> mpf:
    """Coefficient of ``n**(r/2)`` in the r-th raw moment of the height."""
    domain = WalkDomain.parse(domain)
    if r < 1:
        raise ValueError("r must be positive")
    with mp.workdps(dps + 10):
        if domain is WalkDomain.REFLECTIVE_N0:
            return +(
                mpf(2) ** (mpf(r) / 2 + 2) / mp.pi * mpmath.gamma(mpf(r) / 2 + 1) * dirichlet_beta(r + 1, dps)
            )
        return +(
            r
            / mpmath.sqrt(mp.pi)
            * mpmath.gamma(mpf(r + 1) / 2)
            * (mpf(2) ** (r + 1) - 1)
            * mpf(2) ** (-mpf(r) / 2)
            * zeta_int(r + 1, dps)
        )


def _binom_general(a: Fraction, t: int) -> Fraction:
    out = Fraction(1)
    for i in range(t):
        out *= a - i
    return out / factorial(t)


def derive_p_total_coefficients(terms: int) -> list[Fraction]:
    """Rational ``b_t`` with ``p_n ~ sqrt(2 pi) sum b_t n**(-1/2 - t)``, rebuilt from scratch.

    Combines the central-binomial table with the Gaussian lattice-sum main
    terms, ``p_{2m-1} ~ sqrt(pi)/(2 sqrt m) sum c[l, j] j! m**(j - l)``, then
    re-expands in ``n = 2m - 1``.
    """
    K = terms - 1
    table = stirling_table(3 * K if K else 1)
    a = [Fraction(0)] * (K + 1)
    for (l, j), v in table.c.items():
        if l - j <= K:
            a[l - j] += v * factorial(j)
    b = [Fraction(0)] * (K + 1)
    for i in range(K + 1):
        for t in range(K + 1 - i):
            b[i + t] += a[i] * 2**i / 2 * _binom_general(-(half + i), t)
    return b
