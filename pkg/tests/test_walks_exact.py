import itertools
from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ballotwalk.errors import OracleScaleError
from ballotwalk.walks_exact import (
    ENUMERATION_CAP,
    Path,
    WalkDomain,
    ballot_count,
    ballot_count_brute,
    enumerate_admissible,
    exact_shifted_moment,
    exact_total,
    extremal_count,
    fold_extremal,
    height_spectrum_dp,
    is_admissible,
    is_bidirectional_ballot,
    path_probability,
)

N0, Z = WalkDomain.REFLECTIVE_N0, WalkDomain.FREE_Z


def all_paths(n):
    return [Path(s) for s in itertools.product((1, -1), repeat=n)]


def test_figure1_five_paths_of_length_5():
    paths = enumerate_admissible(5, N0)
    assert len(paths) == 5
    assert sorted(wp.height for wp in paths) == [1, 3, 3, 3, 5]


def test_empty_free_walk():
    paths = enumerate_admissible(0, Z)
    assert len(paths) == 1
    assert paths[0].height == 0 and paths[0].probability == 1


def test_free_length_3_paths():
    got = {str(wp.path): (wp.height, wp.probability) for wp in enumerate_admissible(3, Z)}
    assert got == {"+++": (3, Fraction(1, 8)), "+-+": (1, Fraction(1, 8))}


def test_enumeration_above_cap_is_rejected():
    with pytest.raises(OracleScaleError, match="oracle scale exceeded"):
        enumerate_admissible(ENUMERATION_CAP + 1, Z)


@pytest.mark.parametrize("n", range(0, 11))
@pytest.mark.parametrize("domain", list(WalkDomain))
def test_enumeration_matches_brute_force_filter(n, domain):
    # Independent oracle: filter all 2^n step sequences.
    brute = {}
    for p in all_paths(n):
        prob = path_probability(p, domain)
        if prob and is_admissible(p):
            brute[p.steps] = prob
    got = {wp.path.steps: wp.probability for wp in enumerate_admissible(n, domain)}
    assert got == brute


@pytest.mark.parametrize("n", range(1, 13))
def test_reflective_weights_form_a_distribution(n):
    assert sum(path_probability(p, N0) for p in all_paths(n)) == 1


def test_spectrum_examples():
    sp = height_spectrum_dp(5, N0)
    assert sp.total == Fraction(9, 16)
    assert {h: v for h, v in sp.entries.items() if v} == {1: Fraction(1, 4), 3: Fraction(1, 4), 5: Fraction(1, 16)}
    sz = height_spectrum_dp(3, Z)
    assert sz.total == Fraction(1, 4)
    assert {h: v for h, v in sz.entries.items() if v} == {1: Fraction(1, 8), 3: Fraction(1, 8)}


@pytest.mark.parametrize("n", range(0, 20))
def test_all_up_path_is_only_height_n_walk(n):
    assert height_spectrum_dp(n, Z)[n] == Fraction(1, 2**n)


def test_exact_total_examples():
    assert exact_total(3, N0) == Fraction(3, 4)
    assert exact_total(1, N0) == 1
    assert exact_total(2, Z) == Fraction(1, 4)


@pytest.mark.parametrize("n", range(0, 17))
@pytest.mark.parametrize("domain", list(WalkDomain))
def test_enumeration_grouped_by_height_equals_dp(n, domain):
    grouped = {}
    for wp in enumerate_admissible(n, domain):
        grouped[wp.height] = grouped.get(wp.height, Fraction(0)) + wp.probability
    dp = {h: v for h, v in height_spectrum_dp(n, domain).entries.items() if v}
    assert grouped == dp


@pytest.mark.parametrize("n", range(0, 25))
def test_spectrum_parity_and_bounds(n):
    for domain in WalkDomain:
        sp = height_spectrum_dp(n, domain)
        for h, v in sp.entries.items():
            assert 0 <= v <= 1
            if (n - h) % 2:
                assert v == 0
        assert sp.total == sum(sp.entries.values())


@pytest.mark.parametrize("n", range(0, 17))
def test_reflective_dominates_free(n):
    p, q = height_spectrum_dp(n, N0), height_spectrum_dp(n, Z)
    for h in range(n + 1):
        assert p[h] >= q[h]


@pytest.mark.parametrize("n", [0, 1, 7, 20, 33, 64])
def test_scaled_totals_are_integers(n):
    assert (exact_total(n, Z) * 2**n).denominator == 1
    assert (exact_total(n, N0) * 2**n).denominator == 1


def test_ballot_examples():
    assert ballot_count(5) == 2
    assert ballot_count(2) == 1
    assert ballot_count(4) == 1
    with pytest.raises(ValueError):
        ballot_count(1)


@pytest.mark.parametrize("n", range(2, 21))
def test_ballot_identity_against_string_count(n):
    assert ballot_count(n) == ballot_count_brute(n)


@pytest.mark.parametrize("n", range(1, 13))
def test_pruned_ballot_count_equals_full_scan(n):
    full = sum(is_bidirectional_ballot(bits) for bits in itertools.product((0, 1), repeat=n))
    assert ballot_count_brute(n) == full


def _naive_ballot(bits):
    s = "".join(map(str, bits))
    return bool(s) and all(
        s[:i].count("1") > s[:i].count("0") and s[-i:].count("1") > s[-i:].count("0")
        for i in range(1, len(s) + 1)
    )


@given(st.lists(st.integers(0, 1), max_size=16))
def test_ballot_predicate_matches_naive_definition(bits):
    assert is_bidirectional_ballot(bits) == _naive_ballot(bits)


def test_extremal_examples():
    assert extremal_count(3) == 6
    assert extremal_count(1) == 2
    assert extremal_count(5) == 18


def _is_extremal(p: Path) -> bool:
    pos = p.positions
    return all(abs(x) <= abs(pos[-1]) for x in pos)


@pytest.mark.parametrize("n", range(1, 13))
def test_folding_produces_exactly_the_extremal_paths(n):
    folded = Counter(f.steps for wp in enumerate_admissible(n, N0) for f in fold_extremal(wp.path))
    direct = {p.steps for p in all_paths(n) if _is_extremal(p)}
    assert set(folded) == direct
    assert all(c == 1 for c in folded.values())
    assert len(direct) == extremal_count(n)


def test_moment_examples():
    assert exact_shifted_moment(5, N0, 1, 0) == Fraction(7, 3)
    assert exact_shifted_moment(3, Z, 1, 0) == 2
    for n in range(6):
        for domain in WalkDomain:
            for shift in (0, 1, 2):
                assert exact_shifted_moment(n, domain, 0, shift) == 1


def test_moment_shift_is_restricted():
    with pytest.raises(ValueError):
        exact_shifted_moment(4, Z, 1, 3)


@settings(max_examples=40)
@given(st.integers(1, 14), st.integers(0, 3), st.integers(0, 2))
def test_shifted_moment_binomial_expansion(n, r, shift):
    # E[(H+s)^r] = sum_i C(r,i) s^(r-i) E[H^i]
    from math import comb

    for domain in WalkDomain:
        lhs = exact_shifted_moment(n, domain, r, shift)
        rhs = sum(comb(r, i) * shift ** (r - i) * exact_shifted_moment(n, domain, i, 0) for i in range(r + 1))
        assert lhs == rhs


def test_domain_parse():
    assert WalkDomain.parse("n0") is N0
    assert WalkDomain.parse("z") is Z
    assert WalkDomain.parse(Z) is Z
