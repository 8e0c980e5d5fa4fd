from fractions import Fraction
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ballotwalk.chebyshev_series import Kind, gf_coefficient
from ballotwalk.closed_form import (
    HalfInteger,
    ballot_explicit,
    binomial_row,
    extremal_explicit,
    height_spectrum_explicit,
    p_explicit,
    p_terms,
    p_total_explicit,
    q_explicit,
    q_terms,
    q_total_explicit,
    tau,
    term_count_bound,
    upsilon,
)
from ballotwalk.errors import ValidityError
from ballotwalk.walks_exact import WalkDomain, ballot_count, exact_total, extremal_count, height_spectrum_dp


def test_tau_examples():
    assert tau(1, 0) == 1
    assert tau(3, 1) == 6
    assert tau(0, 0) == Fraction(1, 2)
    assert upsilon(0, 0) == 1


def test_half_integer():
    m = HalfInteger.of(Fraction(5, 2))
    assert m.twice == 5 and not m.is_integer and float(m) == 2.5
    assert HalfInteger.of(3).is_integer
    with pytest.raises(ValueError):
        HalfInteger.of(Fraction(1, 3))
    with pytest.raises(ValueError):
        HalfInteger(0)


def test_p_examples():
    assert p_explicit(5, 3) == Fraction(1, 4)
    assert p_explicit(5, 1) == Fraction(1, 4)
    assert p_explicit(3, 2) == 0
    with pytest.raises(ValidityError):
        p_explicit(0, 0)


def test_q_examples():
    assert q_explicit(3, 1) == Fraction(1, 8)
    assert q_explicit(2, 0) == 0
    assert q_explicit(2, 2) == Fraction(1, 4)


def test_totals_examples():
    assert p_total_explicit(5) == Fraction(9, 16)
    assert q_total_explicit(3) == Fraction(1, 4)
    assert p_total_explicit(1) == 1
    assert p_total_explicit(0) == 1


@pytest.mark.parametrize("n", range(1, 17))
def test_closed_forms_equal_dp_and_series(n):
    p, q = height_spectrum_dp(n, "n0"), height_spectrum_dp(n, "z")
    for h in range(n + 1):
        assert p_explicit(n, h) == p[h] == gf_coefficient(Kind.T, h, n)
        assert q_explicit(n, h) == q[h] == gf_coefficient(Kind.U, h, n)


def test_zero_length_convention():
    assert height_spectrum_explicit(0, "n0").entries == {0: 1}
    assert height_spectrum_explicit(0, "z").total == 1 == exact_total(0, "z")


@pytest.mark.parametrize("n", [40, 99, 150])
def test_totals_equal_dp_at_moderate_n(n):
    assert p_total_explicit(n) == exact_total(n, "n0")
    assert q_total_explicit(n) == exact_total(n, "z")


@pytest.mark.parametrize("n", range(2, 40))
def test_ballot_and_extremal_counts(n):
    assert ballot_explicit(n) == ballot_count(n)
    assert extremal_explicit(n) == extremal_count(n)


def test_term_loops_stop_at_binomial_support():
    for n in [10, 51, 200]:
        for domain, terms in ((WalkDomain.REFLECTIVE_N0, p_terms), (WalkDomain.FREE_Z, q_terms)):
            count = sum(1 for h in range(n + 1) for _ in terms(n, h))
            assert count <= term_count_bound(n, domain)


def test_binomial_row():
    assert binomial_row(10) == tuple(comb(10, i) for i in range(11))


@given(st.integers(2, 200), st.data())
def test_binomial_kernel_identity(N, data):
    a = data.draw(st.integers(1, N - 1))
    lhs = Fraction(comb(N - 1, a) - comb(N - 1, a - 1))
    assert lhs == Fraction(N - 2 * a, N) * comb(N, a)


def test_large_n_runs():
    # reaches n in the thousands with exact integers
    p = p_total_explicit(2001)
    assert 0 < p < 1 and (p * 2**2001).denominator == 1
