"""Figure data: exact ``B_n / 2**n`` against the six-term expansion."""

from __future__ import annotations

import csv
import io
from decimal import Decimal, localcontext
from fractions import Fraction

import mpmath

from ballotwalk.asymptotics.expansions import Quantity, expansion
from ballotwalk.closed_form import ballot_explicit

SIG_DIGITS = 12
HEADER = ("n", "exact", "asy")


def _round_sig(d: Decimal, digits: int) -> Decimal:
    if d == 0:
        return Decimal(0)
    return d.quantize(Decimal(1).scaleb(d.adjusted() - digits + 1))


def fraction_to_decimal(q: Fraction, digits: int = SIG_DIGITS) -> str:
    """Plain-notation decimal of ``q`` rounded to ``digits`` significant digits."""
    with localcontext() as ctx:
        ctx.prec = digits + 10
        d = Decimal(q.numerator) / Decimal(q.denominator)
        return format(_round_sig(d, digits), "f")


def mpf_to_decimal(x, digits: int = SIG_DIGITS) -> str:
    with localcontext() as ctx:
        ctx.prec = digits + 10
        d = Decimal(mpmath.nstr(x, digits + 8, strip_zeros=False))
        return format(_round_sig(d, digits), "f")


def ballot_ratio(n: int) -> Fraction:
    return Fraction(ballot_explicit(n), 2**n)


def ballot_cmp_rows(max_n: int) -> list[tuple[int, str, str]]:
    if max_n < 2:
        raise ValueError("max-n must be at least 2")
    exp = expansion(Quantity.BALLOT)
    return [(n, fraction_to_decimal(ballot_ratio(n)), mpf_to_decimal(exp.evaluate(n))) for n in range(2, max_n + 1)]


def ballot_cmp_csv(max_n: int) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(HEADER)
    w.writerows(ballot_cmp_rows(max_n))
    return buf.getvalue()
