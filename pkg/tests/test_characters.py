import math
from fractions import Fraction

import numpy as np
import pytest
from sympy import divisors, primerange

from goodlattice.characters import (
    Character,
    build_pi,
    burgess_bound,
    char_value,
    character_matrix,
    delta_p,
    interval_sum,
    interval_sums_all,
    is_trivial_on,
    lemma1_bound,
    lemma1_sum,
    lemma1_sums_all,
    s_char_formula,
    s_char_formula_all,
    s_count,
)
from goodlattice.modmath import make_context, subgroup
from goodlattice.oracle import oracle_character_table, oracle_pi_membership, oracle_s_count

C101 = 16 * math.log(101)


@pytest.fixture(scope="module")
def ctx7():
    return make_context(7)


@pytest.mark.parametrize("j, x, v", [(0, 5, 1), (3, 3, -1), (1, 7, 0)])
def test_char_value_examples(ctx7, j, x, v):
    assert abs(char_value(Character(ctx7, j), x) - v) < 1e-12


def test_character_index_range(ctx7):
    with pytest.raises(ValueError):
        Character(ctx7, 6)


def test_characters_are_multiplicative_and_unimodular():
    ctx = make_context(61)
    for j in range(60):
        chi = Character(ctx, j)
        v = chi.values(np.arange(1, 61))
        assert np.allclose(np.abs(v), 1, atol=1e-12)
        for x, y in [(3, 7), (10, 59), (60, 60)]:
            assert abs(chi(x * y) - chi(x) * chi(y)) < 1e-12


def test_negative_and_large_arguments_reduce_mod_p(ctx7):
    chi = Character(ctx7, 3)
    assert abs(chi(-1) - chi(6)) < 1e-15
    assert abs(chi(10) - chi(3)) < 1e-15
    assert chi(14) == 0


def test_character_matrix_matches_oracle():
    for p in (5, 7, 31, 97):
        ctx = make_context(p)
        assert np.allclose(character_matrix(ctx, np.arange(p)), oracle_character_table(p), atol=1e-12)


@pytest.mark.parametrize("j, N, s", [(3, 6, 0), (3, 3, 1), (0, 6, 6)])
def test_interval_sum_examples(ctx7, j, N, s):
    assert abs(interval_sum(Character(ctx7, j), N) - s) < 1e-12


def test_interval_sums_all_agrees_with_direct():
    ctx = make_context(53)
    for lo, hi in [(1, 10), (5, 52), (40, 120), (3, 2)]:
        fast = interval_sums_all(ctx, lo, hi)
        for j in range(52):
            direct = Character(ctx, j).values(np.arange(lo, hi + 1)).sum() if hi >= lo else 0
            assert abs(fast[j] - direct) < 1e-9


def test_burgess_examples():
    assert burgess_bound(7, 3, 2) == pytest.approx(30 * 3**0.5 * 7 ** (3 / 16) * math.log(7) ** 0.5)
    assert burgess_bound(7, 3, 2) == pytest.approx(104.4, abs=0.1)
    assert burgess_bound(7, 6, 1) == pytest.approx(154.5, abs=0.1)
    with pytest.raises(ValueError):
        burgess_bound(7, 3, 0)


def test_trivial_on_subgroup_iff_m_divides_j():
    for p in (13, 31):
        ctx = make_context(p)
        for m in divisors(p - 1):
            U = subgroup(ctx, m)
            trivial = [j for j in range(p - 1) if is_trivial_on(Character(ctx, j), U)]
            assert trivial == [j for j in range(p - 1) if j % m == 0]


def test_build_pi_small_family():
    fam = build_pi(101, C101)
    assert fam.k == pytest.approx(1.654, abs=1e-3)
    assert fam.j == 6
    assert len(fam) == 2 * fam.j + 1
    assert fam.rect(0).x_lo == 1 and fam.rect(0).x_hi == 1
    assert fam.n_points() == 1 and (1, 1) in fam
    assert oracle_pi_membership(101, C101) == {(1, 1)}


def test_build_pi_rejects_small_c():
    with pytest.raises(ValueError):
        build_pi(101, Fraction(1, 2))


@pytest.mark.parametrize("p, c", [(7, 7), (101, 2), (211, Fraction(7, 3)), (499, 1), (997, 33.5)])
def test_build_pi_contains_region_and_is_disjoint(p, c):
    fam = build_pi(p, c)
    pts = fam.points()
    assert len({tuple(q) for q in pts.tolist()}) == len(pts)
    region = oracle_pi_membership(p, c)
    assert all(xy in fam for xy in region)
    assert 2 * fam.j + 1 <= 2 * math.log2(p) + 3


def test_build_pi_integral_k_matches_real_rectangles():
    # c = p/8 gives k = 4 exactly
    fam = build_pi(101, Fraction(101, 8))
    assert fam.rect(0).x_hi == 4
    assert (fam.rect(1).x_lo, fam.rect(1).x_hi, fam.rect(1).y_hi) == (5, 8, 2)
    assert (fam.rect(2).x_lo, fam.rect(2).x_hi, fam.rect(2).y_hi) == (9, 16, 1)


def test_lemma1_examples():
    ctx = make_context(101)
    for j in (1, 50, 99):
        assert abs(lemma1_sum(101, C101, Character(ctx, j)) - 1) < 1e-12
    with pytest.raises(ValueError):
        lemma1_sum(101, C101, Character(ctx, 0))


def test_lemma1_factorised_equals_naive(ctx7):
    chi = Character(ctx7, 3)
    pts = build_pi(7, 7).points()
    naive = np.sum(chi.values(pts[:, 0]) * np.conj(chi.values(pts[:, 1])))
    assert abs(lemma1_sum(7, 7, chi) - naive) < 1e-9


def test_lemma1_bound_at_499():
    ctx = make_context(499)
    sums = lemma1_sums_all(ctx, 4)
    assert np.max(np.abs(sums[1:])) <= lemma1_bound(499, 4)
    assert lemma1_bound(499, 4) == pytest.approx(1e4 * 499**0.875 * math.log(499) ** 2 / 2)
    for j in (1, 2, 249):
        assert abs(sums[j] - lemma1_sum(499, 4, Character(ctx, j))) < 1e-8


@pytest.mark.parametrize("z, v", [(0, 1), (14, 1), (13, 0)])
def test_delta_p(z, v):
    assert delta_p(z, 7) == v


def test_s_count_examples():
    assert s_count(101, 1, C101) == 1
    assert s_count(101, 50, C101) == 0
    assert s_char_formula(101, 1, C101) == pytest.approx(1.0, abs=1e-6)
    assert s_char_formula(101, 50, C101) == pytest.approx(0.0, abs=1e-6)


def test_s_identity_exhaustive_at_13():
    ctx = make_context(13)
    allv = s_char_formula_all(ctx, 3)
    for a in range(1, 13):
        s = s_count(13, a, 3)
        assert abs(allv[a - 1] - s) < 1e-6
        assert abs(s_char_formula(13, a, 3, ctx) - s) < 1e-6
        assert s == oracle_s_count(13, a, 3)


def test_s_count_matches_oracle_small_primes():
    for p in primerange(3, 60):
        for t in (2, Fraction(5, 2), 8):
            for a in range(1, p):
                assert s_count(p, a, t) == oracle_s_count(p, a, t) >= 0


def test_s_count_rejects_zero():
    with pytest.raises(ValueError):
        s_count(7, 0, 2)
