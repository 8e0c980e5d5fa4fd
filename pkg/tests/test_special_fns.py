from fractions import Fraction

import mpmath
import pytest
from mpmath import mp, mpf

from ballotwalk.errors import PoleError
from ballotwalk.special_fns import (
    Family,
    KappaCase,
    Parity,
    beta_reflected,
    catalan,
    digamma_half,
    dirichlet_beta,
    dirichlet_beta_series,
    euler_gamma,
    gamma_half,
    kappa,
    zeta_int,
    zeta_series,
)


@pytest.fixture(autouse=True)
def _precision():
    with mp.workdps(40):
        yield


def close(a, b, tol="1e-25"):
    return abs(a - b) <= mpf(tol) * max(1, abs(b))


def test_beta_values():
    assert close(dirichlet_beta(1), mp.pi / 4)
    assert mpmath.nstr(dirichlet_beta(2), 5) == "0.91597"
    assert close(dirichlet_beta(3), mp.pi**3 / 32)


@pytest.mark.parametrize("s", range(1, 8))
def test_beta_two_routes_agree(s):
    assert close(dirichlet_beta(s), dirichlet_beta_series(s))


def test_catalan_literature_digits():
    assert mpmath.nstr(catalan(), 20) == "0.91596559417721901505"


@pytest.mark.parametrize("s", [2, 3, 4])
def test_beta_functional_equation(s):
    assert abs(beta_reflected(s) - dirichlet_beta(1 - s)) < 1e-12


@pytest.mark.parametrize("k", range(0, 5))
def test_beta_vanishes_at_negative_odd(k):
    assert abs(beta_reflected(2 * k + 2)) < 1e-12
    assert dirichlet_beta(-(2 * k + 1)) == 0


def test_zeta_values():
    assert close(zeta_int(2), mp.pi**2 / 6)
    assert zeta_int(0) == mpf(-1) / 2
    assert mpmath.nstr(zeta_int(3), 8) == "1.2020569"
    assert zeta_int(-2) == 0
    assert close(zeta_int(-1), mpf(-1) / 12)
    with pytest.raises(PoleError):
        zeta_int(1)


@pytest.mark.parametrize("s", range(2, 9))
def test_zeta_two_routes_agree(s):
    assert close(zeta_int(s), zeta_series(s))


def test_zeta_matches_mpmath_at_nonpositive():
    for s in range(-9, 1):
        assert close(zeta_int(s), mpmath.zeta(s))


def test_gamma_half():
    assert close(gamma_half(Fraction(1, 2)), mpmath.sqrt(mp.pi))
    assert close(gamma_half(Fraction(5, 2)), 3 * mpmath.sqrt(mp.pi) / 4)
    assert gamma_half(4) == 6
    with pytest.raises(ValueError):
        gamma_half(Fraction(1, 3))


def test_digamma_half():
    g = euler_gamma()
    assert close(digamma_half(Fraction(3, 2)), 2 - g - 2 * mp.ln2)
    for x in [Fraction(1, 2), Fraction(1), Fraction(7, 2), Fraction(5)]:
        assert close(digamma_half(x), mpmath.digamma(mpf(x.numerator) / x.denominator))


def test_kappa_examples():
    assert close(kappa(KappaCase(Family.U_CASE, Parity.INTEGER_M), 0), mpf(-1) / 2)
    assert close(kappa(KappaCase(Family.U_CASE, Parity.HALF_INTEGER_M), 0), mpf(-1))
    assert close(kappa(KappaCase(Family.T_CASE, Parity.INTEGER_M), 2), mp.pi**2 / 24)
    with pytest.raises(PoleError):
        kappa(KappaCase(Family.T_CASE, Parity.INTEGER_M), 1)


def test_parity_of():
    assert Parity.of(3) is Parity.INTEGER_M
    assert Parity.of(Fraction(7, 2)) is Parity.HALF_INTEGER_M


@pytest.mark.parametrize("f", [lambda d: dirichlet_beta(2, d), lambda d: zeta_int(3, d), euler_gamma])
def test_doubling_precision_keeps_digits(f):
    a, b = f(30), f(60)
    with mp.workdps(70):
        assert abs(a - b) < mpf("1e-30")
