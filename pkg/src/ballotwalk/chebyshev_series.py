"""Chebyshev polynomials, reciprocal power series and the transfer-matrix determinants.

The height-``h`` generating functions are ``2 / (z P_{h+1}(1/z))`` with ``P = U``
on the free domain and ``P = T`` on the reflective one.  Coefficients are
extracted by inverting the reversed polynomial ``z**(h+1) P_{h+1}(1/z)``, whose
constant term is the leading Chebyshev coefficient.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence, Union

from ballotwalk.errors import ValidityError
from ballotwalk.walks_exact import WalkDomain

Number = Union[int, Fraction]


class Kind(enum.Enum):
    T = "T"
    U = "U"

    @classmethod
    def parse(cls, value: "str | Kind") -> "Kind":
        return value if isinstance(value, cls) else cls(value)

    @classmethod
    def for_domain(cls, domain: WalkDomain) -> "Kind":
        return cls.T if domain is WalkDomain.REFLECTIVE_N0 else cls.U


def _trim(coeffs: Sequence[Number]) -> tuple:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class Polynomial:
    """Dense univariate polynomial; ``coeffs[i]`` multiplies ``x**i``."""

    coeffs: tuple

    def __init__(self, coeffs: Sequence[Number] = ()):
        object.__setattr__(self, "coeffs", _trim(coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, i: int) -> Number:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __add__(self, other: "Polynomial") -> "Polynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial([self[i] + other[i] for i in range(n)])

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial([self[i] - other[i] for i in range(n)])

    def __mul__(self, other: "Polynomial | Number") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return Polynomial([c * other for c in self.coeffs])
        if not self.coeffs or not other.coeffs:
            return Polynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def shift(self, k: int) -> "Polynomial":
        """Multiply by ``x**k``."""
        return Polynomial([0] * k + list(self.coeffs)) if self.coeffs else self

    def reversed(self, degree: int) -> "Polynomial":
        """``x**degree * p(1/x)``; requires ``degree >= self.degree``."""
        if degree < self.degree:
            raise ValueError("degree below polynomial degree")
        return Polynomial([self[degree - i] for i in range(degree + 1)])

    def __call__(self, x):
        acc = 0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc


X = Polynomial([0, 1])


@lru_cache(maxsize=None)
def cheb_poly(kind: "Kind | str", h: int) -> Polynomial:
    """``T_h`` or ``U_h`` with exact integer coefficients, via the three-term recurrence."""
    kind = Kind.parse(kind)
    if h < 0:
        raise ValueError("h must be non-negative")
    if h == 0:
        return Polynomial([1])
    if h == 1:
        return Polynomial([0, 1] if kind is Kind.T else [0, 2])
    return X * 2 * cheb_poly(kind, h - 1) - cheb_poly(kind, h - 2)


@dataclass(frozen=True)
class RationalSeries:
    """Power series known modulo ``z**(order + 1)``."""

    coeffs: tuple
    order: int

    def __getitem__(self, i: int) -> Fraction:
        if i > self.order:
            raise IndexError(f"coefficient {i} beyond truncation order {self.order}")
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)


def series_inverse(p: Polynomial, order: int) -> RationalSeries:
    """``1 / p(z)`` modulo ``z**(order + 1)`` by long division; needs ``p(0) != 0``."""
    a0 = p[0]
    if a0 == 0:
        raise ZeroDivisionError("constant term must be non-zero")
    inv0 = Fraction(1) / a0
    out = [inv0]
    for k in range(1, order + 1):
        acc = Fraction(0)
        for i in range(1, min(k, p.degree) + 1):
            if p[i]:
                acc += p[i] * out[k - i]
        out.append(-acc * inv0)
    return RationalSeries(tuple(out), order)


@lru_cache(maxsize=512)
def reciprocal_series(kind: "Kind | str", h: int, order: int) -> RationalSeries:
    """``1 / P_{h+1}(1/z)`` as a power series modulo ``z**(order + 1)``."""
    kind = Kind.parse(kind)
    d = h + 1
    rev = cheb_poly(kind, d).reversed(d)
    inner = series_inverse(rev, max(order - d, 0))
    coeffs = [Fraction(0)] * d + [inner[i] for i in range(max(order - d, 0) + 1)]
    return RationalSeries(tuple(coeffs[: order + 1]), order)


def gf_coefficient(kind: "Kind | str", h: int, n: int) -> Fraction:
    """``2 [z**(n+1)] 1/P_{h+1}(1/z)``: equals ``p_n^(h)`` for ``T`` and ``q_n^(h)`` for ``U``."""
    kind = Kind.parse(kind)
    if h < 0 or n < 0:
        raise ValueError("h and n must be non-negative")
    if kind is Kind.T and n == 0:
        raise ValidityError("the T-kind coefficient identity holds only for n >= 1")
    return 2 * reciprocal_series(kind, h, n + 2)[n + 1]


def gf_spectrum(kind: "Kind | str", n: int) -> dict[int, Fraction]:
    """``gf_coefficient`` for every height of the right parity up to ``n``."""
    return {h: gf_coefficient(kind, h, n) for h in range(n % 2, n + 1, 2)}


def transfer_matrix(h: int, domain: "WalkDomain | str") -> list[list[Fraction]]:
    """The ``(h+1) x (h+1)`` step matrix confined to ``[0, h]``."""
    domain = WalkDomain.parse(domain)
    half = Fraction(1, 2)
    m = [[Fraction(0)] * (h + 1) for _ in range(h + 1)]
    for i in range(h + 1):
        if i > 0:
            m[i][i - 1] = half
        if i < h:
            m[i][i + 1] = half
    if domain is WalkDomain.REFLECTIVE_N0 and h >= 1:
        m[0][1] = Fraction(1)
    return m


@lru_cache(maxsize=None)
def det_polynomial(h: int, domain: "WalkDomain | str") -> Polynomial:
    """``det(I - z M_h)`` from the row-expansion recurrence in ``h``."""
    domain = WalkDomain.parse(domain)
    if h == 0:
        return Polynomial([1])
    if h == 1:
        corner = Fraction(1, 2) if domain is WalkDomain.REFLECTIVE_N0 else Fraction(1, 4)
        return Polynomial([1, 0, -corner])
    quarter_z2 = Polynomial([0, 0, Fraction(1, 4)])
    return det_polynomial(h - 1, domain) - quarter_z2 * det_polynomial(h - 2, domain)


def det_at(h: int, domain: "WalkDomain | str", z: Fraction) -> Fraction:
    """``det(I - z M_h)`` at a rational point by exact Gaussian elimination."""
    m = transfer_matrix(h, domain)
    size = h + 1
    a = [[(1 if i == j else 0) - z * m[i][j] for j in range(size)] for i in range(size)]
    det = Fraction(1)
    for col in range(size):
        piv = next((r for r in range(col, size) if a[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det *= a[col][col]
        for r in range(col + 1, size):
            f = a[r][col] / a[col][col]
            if f:
                for c in range(col, size):
                    a[r][c] -= f * a[col][c]
    return det


def det_identity_check(h: int, domain: "WalkDomain | str", pointwise: bool = True) -> bool:
    """Check ``det(I - z M_h)`` against the reversed Chebyshev polynomial.

    Free: ``2**(h+1) det(I - z M_h) == z**(h+1) U_{h+1}(1/z)``.
    Reflective: ``2**h det(I - z M~_h) == z**(h+1) T_{h+1}(1/z)``.

    With ``pointwise`` the recurrence polynomial is also compared with direct
    determinants at ``h + 2`` rational points, which pins it down completely.
    """
    domain = WalkDomain.parse(domain)
    kind = Kind.for_domain(domain)
    det = det_polynomial(h, domain)
    scale = 2 ** (h + 1) if kind is Kind.U else 2**h
    target = cheb_poly(kind, h + 1).reversed(h + 1)
    if det * scale != target:
        return False
    if pointwise:
        for i in range(h + 2):
            z = Fraction(i + 1, h + 3)
            if det(z) != det_at(h, domain, z):
                return False
    return True
