"""Explicit alternating binomial sums for the height spectra.

With ``N = n + 1`` (reflective) the height-``h`` probability is

    p_n^(h) = 2**(1-n) / N * sum_k (-1)**k (h+1)(2k+1) C(N, (N - (h+1)(2k+1)) / 2)

and with ``N = n + 2`` (free)

    q_n^(h) = 4 / 2**N * sum_k (V**2 - N) / (N (N-1)) C(N, (N - V) / 2),  V = (h+2)(2k+1).

These are the half-integer formulas with ``2m = N`` and ``2 tau``, ``2 upsilon``
kept as integers; the binomial index is integral exactly when ``h = n mod 2``.
Sums run only while the binomial index is non-negative.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator

from ballotwalk.errors import ValidityError
from ballotwalk.walks_exact import HeightSpectrum, WalkDomain, heights_for


@dataclass(frozen=True)
class HalfInteger:
    """A positive half-integer ``m``, stored as ``2m``."""

    twice: int

    def __post_init__(self):
        if self.twice < 1:
            raise ValueError("half-integer must be positive")

    @classmethod
    def of(cls, value) -> "HalfInteger":
        if isinstance(value, HalfInteger):
            return value
        t = Fraction(value) * 2
        if t.denominator != 1:
            raise ValueError(f"{value!r} is not a half-integer")
        return cls(int(t))

    @property
    def value(self) -> Fraction:
        return Fraction(self.twice, 2)

    @property
    def is_integer(self) -> bool:
        return self.twice % 2 == 0

    def __float__(self) -> float:
        return self.twice / 2


def tau(h: int, k: int) -> Fraction:
    return Fraction((h + 1) * (2 * k + 1), 2)


def upsilon(h: int, k: int) -> Fraction:
    return Fraction((h + 2) * (2 * k + 1), 2)


@lru_cache(maxsize=8)
def binomial_row(N: int) -> tuple[int, ...]:
    """``C(N, 0..N)`` built by multiplicative updates."""
    row = [1] * (N + 1)
    for i in range(1, N + 1):
        row[i] = row[i - 1] * (N - i + 1) // i
    return tuple(row)


def p_terms(n: int, h: int) -> Iterator[int]:
    """Signed integer summands of ``p_n^(h) * 2**(n-1) * (n+1)``."""
    if (n - h) % 2:
        return
    N = n + 1
    row = binomial_row(N)
    k = 0
    while True:
        two_tau = (h + 1) * (2 * k + 1)
        if two_tau > N:
            return
        term = two_tau * row[(N - two_tau) // 2]
        yield -term if k % 2 else term
        k += 1


def q_terms(n: int, h: int) -> Iterator[int]:
    """Integer summands of ``q_n^(h) * 2**(N-2) * N * (N-1)`` with ``N = n + 2``."""
    if (n - h) % 2:
        return
    N = n + 2
    row = binomial_row(N)
    k = 0
    while True:
        V = (h + 2) * (2 * k + 1)
        if V > N:
            return
        yield (V * V - N) * row[(N - V) // 2]
        k += 1


def _p_scale(n: int) -> int:
    return 2 ** (n - 1) * (n + 1)


def _q_scale(n: int) -> int:
    N = n + 2
    return 2 ** (N - 2) * N * (N - 1)


def p_explicit(n: int, h: int) -> Fraction:
    """Reflective-domain probability of being admissible of height ``h``, for ``n >= 1``."""
    if n < 1:
        raise ValidityError("the explicit reflective formula holds for n >= 1")
    if h < 0:
        raise ValueError("h must be non-negative")
    return Fraction(sum(p_terms(n, h)), _p_scale(n))


def q_explicit(n: int, h: int) -> Fraction:
    """Free-domain probability of being admissible of height ``h``, for ``n >= 0``."""
    if n < 0 or h < 0:
        raise ValueError("n and h must be non-negative")
    return Fraction(sum(q_terms(n, h)), _q_scale(n))


def _spectrum_numerators(n: int, domain: WalkDomain) -> dict[int, int]:
    terms = p_terms if domain is WalkDomain.REFLECTIVE_N0 else q_terms
    return {h: sum(terms(n, h)) for h in heights_for(n)}


def height_spectrum_explicit(n: int, domain: "WalkDomain | str") -> HeightSpectrum:
    """Full height spectrum from the closed forms; reflective ``n = 0`` uses ``p_0 = 1``."""
    domain = WalkDomain.parse(domain)
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0 and domain is WalkDomain.REFLECTIVE_N0:
        return HeightSpectrum(0, domain, {0: Fraction(1)})
    scale = _p_scale(n) if domain is WalkDomain.REFLECTIVE_N0 else _q_scale(n)
    nums = _spectrum_numerators(n, domain)
    return HeightSpectrum(n, domain, {h: Fraction(v, scale) for h, v in nums.items()})


def _total(n: int, domain: WalkDomain) -> Fraction:
    scale = _p_scale(n) if domain is WalkDomain.REFLECTIVE_N0 else _q_scale(n)
    return Fraction(sum(_spectrum_numerators(n, domain).values()), scale)


@lru_cache(maxsize=128)
def p_total_explicit(n: int) -> Fraction:
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return Fraction(1)
    return _total(n, WalkDomain.REFLECTIVE_N0)


@lru_cache(maxsize=128)
def q_total_explicit(n: int) -> Fraction:
    if n < 0:
        raise ValueError("n must be non-negative")
    return _total(n, WalkDomain.FREE_Z)


def ballot_explicit(n: int) -> int:
    """``B_n = 2**(n-2) q_{n-2}`` from the closed form; usable for n in the thousands."""
    if n < 2:
        raise ValueError("ballot count requires n >= 2")
    count = q_total_explicit(n - 2) * 2 ** (n - 2)
    assert count.denominator == 1
    return count.numerator


def extremal_explicit(n: int) -> int:
    count = p_total_explicit(n) * 2**n
    assert count.denominator == 1
    return count.numerator


def term_count_bound(n: int, domain: "WalkDomain | str") -> int:
    """Upper bound on the number of ``(h, k)`` summands for length ``n``."""
    domain = WalkDomain.parse(domain)
    N = n + 1 if domain is WalkDomain.REFLECTIVE_N0 else n + 2
    off = 1 if domain is WalkDomain.REFLECTIVE_N0 else 2
    return sum(N // (h + off) + 1 for h in range(n + 1))
