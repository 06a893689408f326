import math
from fractions import Fraction

import numpy as np
import pytest
from sympy import primerange

from goodlattice.characters import s_count
from goodlattice.contfrac import expand, sum_quotients
from goodlattice.modmath import coset, make_context, subgroup
from goodlattice.oracle import oracle_f_a
from goodlattice.theorems import (
    S_a,
    S_a_all,
    corollary_check,
    count_B,
    f_a,
    f_matrix,
    hypothesis_check,
    level_counts,
    theorem1_fraction,
    theorem1_proofstep_check,
    theorem2_bound,
    theorem2_search,
    theorem_report,
    threshold_t,
)

T101 = 16 * math.log(101)


def full(p):
    return subgroup(make_context(p), p - 1)


@pytest.mark.parametrize("p, a, x, v", [(7, 3, 2, 3), (5, 2, 4, 0), (7, 1, 1, 7)])
def test_f_a_examples(p, a, x, v):
    assert f_a(p, a, x) == v == oracle_f_a(p, a, x)


def test_f_a_rejects_zero():
    with pytest.raises(ValueError):
        f_a(7, 0, 1)
    with pytest.raises(ValueError):
        f_a(7, 1, 7)


def test_f_matrix_matches_scalar():
    m = f_matrix(31, [1, 5, 30])
    assert m.shape == (3, 30)
    assert m[1, 6] == f_a(31, 5, 7)


def test_S_a_values():
    # f over x = 1..4 is 2, 2, 1, 0
    assert [f_a(5, 2, x) for x in range(1, 5)] == [2, 2, 1, 0]
    assert S_a(5, 2) == 5
    assert S_a(7, 1) == sum(oracle_f_a(7, 1, x) for x in range(1, 7)) == 9
    assert S_a(5, 2) >= sum_quotients(expand(2, 5)) - 5 * math.log(5)
    assert np.array_equal(S_a_all(13, np.arange(1, 13)), [S_a(13, a) for a in range(1, 13)])


def test_count_B_examples():
    ctx = make_context(7)
    assert count_B(7, full(7), 7) == 2
    R = coset(subgroup(ctx, 3), 3)
    assert R.elements.tolist() == [3, 5, 6]
    assert count_B(7, R, 1) == 11
    with pytest.raises(ValueError):
        count_B(7, R, 0)


def test_count_B_monotone_and_layer_cake():
    for p in (11, 37, 101):
        R = full(p)
        lv = level_counts(p, R)
        assert all(lv[c + 1] <= lv[c] for c in range(len(lv) - 1))
        for c in (1, 2, 5, len(lv) - 1):
            assert lv[c] == count_B(p, R, c)
        assert int(S_a_all(p, R.elements).sum()) == int(lv[1:].sum())


def test_proofstep_examples():
    assert expand(50, 101).quotients == (2, 50)
    assert theorem1_proofstep_check(101, 50, T101)
    assert theorem1_proofstep_check(101, 1, T101)
    with pytest.raises(ValueError):
        theorem1_proofstep_check(101, 1, 1)


def test_proofstep_randomised():
    rng = np.random.default_rng(0)
    primes = list(primerange(3, 2000))
    hits = 0
    while hits < 100:
        p = int(rng.choice(primes))
        a = int(rng.integers(1, p))
        t = float(rng.uniform(2, max(2.0, threshold_t(p))))
        if s_count(p, a, t) == 0:
            hits += 1
            assert theorem1_proofstep_check(p, a, t)


def test_theorem1_fraction_examples():
    f = theorem1_fraction(full(7))
    assert f.t == pytest.approx(16 * math.log(7))
    assert f.fraction == 1
    ctx = make_context(89)
    assert theorem1_fraction(subgroup(ctx, 1)).fraction == 0
    assert 0 <= theorem1_fraction(full(1009)).fraction <= 1


def test_theorem2_examples():
    ctx = make_context(13)
    r = theorem2_search(subgroup(ctx, 4))
    assert (r.best_a, r.best_sum) == (5, 6)
    r = theorem2_search(full(101))
    assert r.t2_bound == pytest.approx(3530, abs=1)
    assert r.holds and r.best_sum >= 1
    assert r.best_sum == min(sum_quotients(expand(a, 101)) for a in range(1, 101))


def test_theorem2_bound_needs_positive_loglog():
    with pytest.raises(ValueError):
        theorem2_bound(2)
    assert theorem2_bound(17) > 0


def test_corollary_examples():
    assert corollary_check(17, 1) >= 1 / (math.log(17) * math.log(math.log(17)))
    r = theorem2_search(full(101))
    assert corollary_check(101, r.best_a) > 0


@pytest.mark.parametrize("p, n", [(101, 100), (3, 2), (10**9 + 7, 10**9 + 6)])
def test_hypothesis_flags(p, n):
    assert hypothesis_check(p, n) == (False, False)


def test_theorem_report_fields():
    rep = theorem_report(full(101), with_discrepancy=True)
    assert rep.order == 100 and rep.v == 1
    assert rep.theorem1_holds and rep.theorem2_holds
    assert not rep.hypothesis_thm1 and not rep.hypothesis_thm2
    assert rep.best_sum >= len(expand(rep.best_a, 101).quotients)
    assert isinstance(rep.discrepancy, Fraction) and rep.corollary_ratio > 0
    assert set(rep.log2_variants) == {"t", "omega_fraction", "t2_bound"}
