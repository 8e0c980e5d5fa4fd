from fractions import Fraction

import mpmath
import pytest
from mpmath import mp, mpf

from ballotwalk.asymptotics.mellin import MellinCase, mellin_T, mellin_U, mellin_U_main_term, valid_cases
from ballotwalk.special_fns import zeta_int


def close(a, b, tol="1e-25"):
    return abs(a - b) <= mpf(tol) * abs(b)


def _naive_T(j, r, m):
    # fixed generous bounds, no early stopping
    with mp.workdps(40):
        first = int(2 * Fraction(m) + 1) % 2
        m = mpf(Fraction(m).numerator) / Fraction(m).denominator
        total = mpf(0)
        for h in range(first, 400, 2):
            for k in range(0, 400 // (h + 1) + 1):
                t = mpf((h + 1) * (2 * k + 1)) / 2
                total += (-1) ** k * t ** (2 * j + 1) * mpf(h + 1) ** r * mpmath.exp(-t * t / m)
        return total


def _naive_U(j, r, m):
    with mp.workdps(40):
        first = int(2 * Fraction(m)) % 2
        m = mpf(Fraction(m).numerator) / Fraction(m).denominator
        total = mpf(0)
        for h in range(first, 400, 2):
            for k in range(0, 400 // (h + 2) + 1):
                v = mpf((h + 2) * (2 * k + 1)) / 2
                total += (2 * v * v - m) / m * v ** (2 * j) * mpf(h + 2) ** r * mpmath.exp(-v * v / m)
        return total


@pytest.mark.parametrize("j,r,m", [(0, 0, 25), (1, 0, 36), (0, 2, Fraction(51, 2)), (2, 1, 49)])
def test_T_lhs_matches_naive_double_sum(j, r, m):
    with mp.workdps(40):
        assert close(mellin_T(j, r, m).lhs, _naive_T(j, r, m))


@pytest.mark.parametrize("case,j,r,m", [(MellinCase.ZERO, 0, 0, 25), (MellinCase.LOG, 1, 0, 49), (MellinCase.POWER, 0, 1, Fraction(51, 2))])
def test_U_lhs_matches_naive_double_sum(case, j, r, m):
    with mp.workdps(40):
        assert close(mellin_U(case, j, r, m).lhs, _naive_U(j, r, m))


def test_T_main_terms():
    with mp.workdps(40):
        assert close(mellin_T(0, 0, 25).rhs, 25 * mp.pi / 8)
        m = mpf(51) / 2
        # exponent j + 1 + r/2 = 2 here
        assert close(mellin_T(0, 2, Fraction(51, 2)).rhs, mp.pi**3 * m**2 / 16)


def test_U_main_terms():
    with mp.workdps(40):
        assert close(mellin_U_main_term("zero", 0, 0, 25), 5 * mpmath.sqrt(mp.pi) / 4)
        m = mpf(51) / 2
        want = mpf(1) / 2 * mpf(1) / 2 * 3 * zeta_int(2) * m
        assert close(mellin_U_main_term("power", 0, 1, Fraction(51, 2)), want)


def test_log_case_uses_digamma_three_halves():
    with mp.workdps(40):
        m = mpf(49)
        want = (mpmath.log(m) / 2 + 2 * mp.euler + mp.ln2 + mpmath.digamma(mpf(3) / 2) / 2 + mpf(1) / 2) / 2
        want *= mpmath.gamma(mpf(3) / 2) * m ** (mpf(3) / 2)
        assert close(mellin_U_main_term("log", 1, 0, 49), want)


def test_case_mismatch_is_rejected():
    with pytest.raises(ValueError):
        mellin_U("zero", 1, 0, 25)
    with pytest.raises(ValueError):
        mellin_U("log", 0, 0, 25)
    with pytest.raises(ValueError):
        mellin_U("power", 1, 0, 25)


def test_valid_case_lists():
    assert len(valid_cases("T")) == 9
    u = valid_cases("U")
    assert len(u) == 9
    assert {c for c, _, _ in u} == set(MellinCase)


# The stated 1e-8 examples do not hold at these m: the gap between the sum and
# its main term decays like exp(-c sqrt(m)), far above 1e-8 for m near 25.
@pytest.mark.xfail(strict=True, reason="gap at m ~ 25..49 exceeds 1e-8; see the decay tests")
@pytest.mark.parametrize("j,r,m", [(0, 0, 25), (1, 0, 36), (0, 2, Fraction(51, 2))])
def test_T_examples_at_1e_8(j, r, m):
    assert mellin_T(j, r, m).rel_gap < 1e-8


@pytest.mark.xfail(strict=True, reason="gap at m ~ 25..49 exceeds 1e-8; see the decay tests")
@pytest.mark.parametrize("case,j,r,m", [("zero", 0, 0, 25), ("log", 1, 0, 49)])
def test_U_examples_at_1e_8(case, j, r, m):
    assert mellin_U(case, j, r, m).rel_gap < 1e-8


@pytest.mark.xfail(strict=True, reason="gap at m = 25.5 is about 2.5e-5")
def test_U_power_example_at_1e_6():
    assert mellin_U("power", 0, 1, Fraction(51, 2)).rel_gap < 1e-6


def _all_gaps(m):
    gaps = [mellin_T(j, r, m).rel_gap for _, j, r in valid_cases("T")]
    gaps += [mellin_U(c, j, r, m).rel_gap for c, j, r in valid_cases("U")]
    return gaps


@pytest.mark.parametrize("m", [400, Fraction(801, 2)])
def test_gaps_below_1e_6_for_larger_m(m):
    assert max(_all_gaps(m)) < 1e-6


def test_gaps_below_1e_10_at_m_1600():
    assert max(_all_gaps(1600)) < 1e-10


def test_gaps_shrink_with_m():
    g100, g400, g1600 = (max(_all_gaps(m)) for m in (100, 400, 1600))
    assert g100 > g400 > g1600
