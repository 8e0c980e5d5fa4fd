"""Limiting height densities and the local-limit approximation.

``phi`` (reflective) and ``chi`` (free) are probability densities of
``H_n / sqrt(n)``; each has a Gaussian-side theta series, fast for large
``eta``, and a dual series from Poisson summation, fast for small ``eta``.
Heights live on one parity class, two apart, so the point mass at ``h`` is
about ``2 * density(h / sqrt(n)) / sqrt(n)``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Callable

import mpmath
from mpmath import mp, mpf

from ballotwalk.errors import ValidityError
from ballotwalk.special_fns import DEFAULT_DPS
from ballotwalk.walks_exact import WalkDomain

TERM_CUTOFF = mpf("1e-35")


class Representation(enum.Enum):
    GAUSSIAN = "gauss"
    DUAL = "dual"


@dataclass(frozen=True)
class DensityEval:
    eta: mpf
    value: mpf
    representation: Representation


@dataclass(frozen=True)
class LocalLimit:
    n: int
    h: int
    eta: mpf
    value: mpf
    in_window: bool


def _series(term: Callable[[int], mpf], start: int = 0) -> mpf:
    # Terms are eventually monotone in |.|; stop after two consecutive tiny ones.
    total = mpf(0)
    small = 0
    k = start
    while True:
        t = term(k)
        total += t
        if abs(t) <= TERM_CUTOFF * max(abs(total), mpf("1e-300")):
            small += 1
            if small >= 2:
                return total
        else:
            small = 0
        k += 1


def _phi(eta: mpf, rep: Representation) -> mpf:
    if rep is Representation.GAUSSIAN:
        s = _series(lambda k: (-1) ** k * (2 * k + 1) * mpmath.exp(-((2 * k + 1) * eta) ** 2 / 2))
        return 4 * eta / mp.pi * s
    s = _series(lambda k: (-1) ** k * (2 * k + 1) * mpmath.exp(-((mp.pi * (2 * k + 1)) ** 2) / (8 * eta**2)))
    return mpmath.sqrt(2 * mp.pi) / eta**2 * s


def _chi(eta: mpf, rep: Representation) -> mpf:
    if rep is Representation.GAUSSIAN:
        def term(k):
            a = ((2 * k + 1) * eta) ** 2
            return (a - 1) * mpmath.exp(-a / 2)

        return 2 * mpmath.sqrt(2 / mp.pi) * _series(term)
    s = _series(lambda k: (-1) ** (k - 1) * k * k * mpmath.exp(-((mp.pi * k) ** 2) / (2 * eta**2)), start=1)
    return 2 * mp.pi**2 / eta**3 * s


def density(
    domain: "WalkDomain | str",
    eta,
    representation: "Representation | str" = Representation.GAUSSIAN,
    dps: int = DEFAULT_DPS,
) -> DensityEval:
    """``phi(eta)`` on the reflective domain, ``chi(eta)`` on the free one; both integrate to 1."""
    domain = WalkDomain.parse(domain)
    rep = Representation(representation)
    with mp.workdps(dps + 10):
        e = mpf(eta)
        if e <= 0:
            raise ValueError("eta must be positive")
        f = _phi if domain is WalkDomain.REFLECTIVE_N0 else _chi
        return DensityEval(e, +f(e, rep), rep)


def window(domain: "WalkDomain | str", n: int) -> tuple[float, float]:
    """Open ``eta`` interval in which the local limit theorem is stated."""
    domain = WalkDomain.parse(domain)
    if n < 2:
        return (math.inf, -math.inf)
    log_n = math.log(n)
    lower = (3 if domain is WalkDomain.REFLECTIVE_N0 else 6) / math.sqrt(log_n)
    return (lower, math.sqrt(log_n) / 2)


def local_limit_approx(
    domain: "WalkDomain | str",
    n: int,
    h: int,
    representation: "Representation | str | None" = None,
    dps: int = DEFAULT_DPS,
) -> LocalLimit:
    """``2 density(h / sqrt n) / sqrt n``, approximating ``P(height = h)``.

    Heights of length-``n`` walks share the parity of ``n`` in both domains,
    so other ``h`` are rejected.  Points outside the stated window are flagged.
    """
    domain = WalkDomain.parse(domain)
    if n < 1 or h < 0:
        raise ValueError("need n >= 1 and h >= 0")
    if h > n:
        raise ValueError(f"no walk of length {n} reaches height {h}")
    if (n - h) % 2:
        raise ValidityError("h must have the parity of n")
    if h == 0:
        # density vanishes at 0 in both domains
        return LocalLimit(n, h, mpf(0), mpf(0), False)
    with mp.workdps(dps + 10):
        eta = mpf(h) / mpmath.sqrt(n)
        if representation is None:
            representation = Representation.GAUSSIAN if eta >= 1 else Representation.DUAL
        d = density(domain, eta, representation, dps).value
        lo, hi = window(domain, n)
        return LocalLimit(n, h, eta, +(2 * d / mpmath.sqrt(n)), lo < float(eta) < hi)
