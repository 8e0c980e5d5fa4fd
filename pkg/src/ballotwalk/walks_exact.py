"""Exact oracles for admissible walks: brute-force enumeration and band transfer-matrix DP.

A walk of length ``n`` is admissible of height ``h`` when it stays in ``[0, h]``
and ends at ``h``.  On the reflective domain every visit to 0 forces an up-step
with probability 1, so a path with ``v`` such visits has weight ``2**(v - n)``;
on the free domain every path has weight ``2**-n``.

Length 0 is the empty walk of height 0 with probability 1 in both domains.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterator

from ballotwalk.errors import OracleScaleError

ENUMERATION_CAP = 24


class WalkDomain(enum.Enum):
    REFLECTIVE_N0 = "n0"
    FREE_Z = "z"

    @classmethod
    def parse(cls, value: "str | WalkDomain") -> "WalkDomain":
        if isinstance(value, cls):
            return value
        return cls(value)


@dataclass(frozen=True)
class Path:
    steps: tuple[int, ...]

    def __post_init__(self):
        if any(s not in (1, -1) for s in self.steps):
            raise ValueError("steps must be +1 or -1")

    @property
    def length(self) -> int:
        return len(self.steps)

    @property
    def positions(self) -> tuple[int, ...]:
        pos = [0]
        for s in self.steps:
            pos.append(pos[-1] + s)
        return tuple(pos)

    def __str__(self) -> str:
        return "".join("+" if s == 1 else "-" for s in self.steps)


@dataclass(frozen=True)
class WeightedPath:
    path: Path
    probability: Fraction
    height: int


def path_probability(path: Path, domain: WalkDomain) -> Fraction:
    """Probability of ``path`` under the walk law of ``domain``.

    Returns 0 for reflective paths that step down from 0.  Only visits that are
    followed by a step count toward the forced-step weight.
    """
    n = path.length
    if domain is WalkDomain.FREE_Z:
        return Fraction(1, 2**n)
    pos = path.positions
    visits = 0
    for k in range(n):
        if pos[k] == 0:
            if path.steps[k] == -1:
                return Fraction(0)
            visits += 1
    return Fraction(2**visits, 2**n)


def is_admissible(path: Path) -> bool:
    pos = path.positions
    return min(pos) >= 0 and pos[-1] == max(pos)


def _admissible_step_sequences(n: int) -> Iterator[tuple[int, ...]]:
    # DFS in lexicographic (+1 first) order; prunes walks that go negative or
    # can no longer climb back to their running maximum.
    steps: list[int] = []

    def rec(pos: int, top: int) -> Iterator[tuple[int, ...]]:
        left = n - len(steps)
        if left == 0:
            if pos == top:
                yield tuple(steps)
            return
        for s in (1, -1):
            nxt = pos + s
            if nxt < 0 or nxt + left - 1 < max(top, nxt):
                continue
            steps.append(s)
            yield from rec(nxt, max(top, nxt))
            steps.pop()

    yield from rec(0, 0)


def enumerate_admissible(n: int, domain: "WalkDomain | str") -> list[WeightedPath]:
    """All admissible paths of length ``n`` with their exact probabilities.

    Brute force, capped at ``ENUMERATION_CAP`` steps.
    """
    domain = WalkDomain.parse(domain)
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > ENUMERATION_CAP:
        raise OracleScaleError(
            f"oracle scale exceeded: n={n} > {ENUMERATION_CAP}"
        )
    out = []
    for steps in _admissible_step_sequences(n):
        path = Path(steps)
        prob = path_probability(path, domain)
        if prob:
            out.append(WeightedPath(path, prob, max(path.positions)))
    return out


@dataclass(frozen=True)
class HeightSpectrum:
    """Admissibility probabilities of a fixed length, indexed by terminal height."""

    n: int
    domain: WalkDomain
    entries: dict[int, Fraction] = field(hash=False)

    @property
    def total(self) -> Fraction:
        return sum(self.entries.values(), Fraction(0))

    def __getitem__(self, h: int) -> Fraction:
        return self.entries.get(h, Fraction(0))

    def distribution(self) -> dict[int, Fraction]:
        """Conditional law of the height given admissibility."""
        total = self.total
        if total == 0:
            raise ValueError("undefined distribution: total probability is 0")
        return {h: p / total for h, p in self.entries.items()}

    def shifted_moment(self, r: int, shift: int = 0) -> Fraction:
        """``E[(H + shift)**r]`` for the height ``H`` of an admissible walk."""
        if r < 0:
            raise ValueError("r must be non-negative")
        total = self.total
        if total == 0:
            raise ValueError("undefined distribution: total probability is 0")
        acc = sum(((h + shift) ** r * p for h, p in self.entries.items()), Fraction(0))
        return acc / total


def heights_for(n: int) -> range:
    """Heights reachable at length ``n``: same parity as ``n``, at most ``n``."""
    return range(n % 2, n + 1, 2)


def _band_weight(n: int, h: int, domain: WalkDomain) -> int:
    # Scaled vector iteration w_{k+1} = w_k M with w scaled by 2**k, so all
    # entries stay integers; the probability is w_n[h] / 2**n.
    w = [0] * (h + 1)
    w[0] = 1
    reflective = domain is WalkDomain.REFLECTIVE_N0
    for _ in range(n):
        nxt = [0] * (h + 1)
        for j, wj in enumerate(w):
            if not wj:
                continue
            if j == 0 and reflective:
                if h >= 1:
                    nxt[1] += 2 * wj
                continue
            if j >= 1:
                nxt[j - 1] += wj
            if j + 1 <= h:
                nxt[j + 1] += wj
        w = nxt
    return w[h]


def band_probability(n: int, h: int, domain: "WalkDomain | str") -> Fraction:
    """Probability of staying in ``[0, h]`` for ``n`` steps and ending at ``h``."""
    domain = WalkDomain.parse(domain)
    if n < 0 or h < 0:
        raise ValueError("n and h must be non-negative")
    if h > n or (n - h) % 2:
        return Fraction(0)
    return Fraction(_band_weight(n, h, domain), 2**n)


@lru_cache(maxsize=256)
def height_spectrum_dp(n: int, domain: "WalkDomain | str") -> HeightSpectrum:
    """Height spectrum via one band transfer-matrix iteration per height."""
    domain = WalkDomain.parse(domain)
    if n < 0:
        raise ValueError("n must be non-negative")
    entries = {h: band_probability(n, h, domain) for h in heights_for(n)}
    return HeightSpectrum(n, domain, entries)


def exact_total(n: int, domain: "WalkDomain | str") -> Fraction:
    """``p_n`` (reflective) or ``q_n`` (free): probability of being admissible."""
    return height_spectrum_dp(n, domain).total


def exact_shifted_moment(n: int, domain: "WalkDomain | str", r: int, shift: int = 0) -> Fraction:
    if shift not in (0, 1, 2):
        raise ValueError("shift must be 0, 1 or 2")
    return height_spectrum_dp(n, domain).shifted_moment(r, shift)


def ballot_count(n: int) -> int:
    """Number of bidirectional ballot sequences of length ``n``, as ``2**(n-2) q_{n-2}``."""
    if n < 2:
        raise ValueError("ballot_count requires n >= 2")
    q = exact_total(n - 2, WalkDomain.FREE_Z)
    count = q * 2 ** (n - 2)
    assert count.denominator == 1
    return count.numerator


def extremal_count(n: int) -> int:
    """Number of extremal lattice paths of length ``n``, as ``2**n p_n``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    count = exact_total(n, WalkDomain.REFLECTIVE_N0) * 2**n
    assert count.denominator == 1
    return count.numerator


def is_bidirectional_ballot(bits: "tuple[int, ...] | str") -> bool:
    """Every non-empty prefix and suffix has strictly more 1s than 0s."""
    vals = [int(b) for b in bits]
    if not vals:
        return False
    bal = 0
    for b in vals:
        bal += 1 if b else -1
        if bal <= 0:
            return False
    bal = 0
    for b in reversed(vals):
        bal += 1 if b else -1
        if bal <= 0:
            return False
    return True


def ballot_count_brute(n: int) -> int:
    """Direct count of bidirectional ballot sequences of length ``n``.

    Extends strings only while every prefix stays positive, then tests suffixes.
    """
    if n > ENUMERATION_CAP:
        raise OracleScaleError(f"oracle scale exceeded: n={n} > {ENUMERATION_CAP}")
    count = 0
    bits: list[int] = []

    def rec(bal: int) -> None:
        nonlocal count
        if len(bits) == n:
            if is_bidirectional_ballot(bits):
                count += 1
            return
        for b in (1, 0):
            nb = bal + (1 if b else -1)
            if nb <= 0:
                continue
            bits.append(b)
            rec(nb)
            bits.pop()

    if n > 0:
        rec(0)
    return count


def fold_extremal(path: Path) -> list[Path]:
    """The ``2**v`` extremal paths obtained by reflecting excursions of an admissible path.

    Each section between consecutive visits to 0, and the final section after
    the last visit, may independently be reflected about the axis.
    """
    pos = path.positions
    zeros = [k for k in range(path.length) if pos[k] == 0]
    bounds = zeros + [path.length]
    out = []
    for mask in range(2 ** len(zeros)):
        steps = list(path.steps)
        for i in range(len(zeros)):
            if mask >> i & 1:
                for k in range(bounds[i], bounds[i + 1]):
                    steps[k] = -steps[k]
        out.append(Path(tuple(steps)))
    return out
