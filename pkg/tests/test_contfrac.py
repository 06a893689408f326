import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st
from sympy import primerange

from goodlattice.contfrac import (
    cf_stats,
    check_lemma_A,
    check_lemma_B,
    expand,
    max_quotient,
    sum_quotients,
)

PRIMES = list(primerange(3, 2000))


def euclid(a, p):
    out = []
    while a:
        out.append(p // a)
        p, a = a, p % a
    return out


@pytest.mark.parametrize(
    "a, p, quotients, total, biggest",
    [(1, 7, [7], 7, 7), (3, 7, [2, 3], 5, 3), (5, 13, [2, 1, 1, 2], 6, 2), (8, 13, [1, 1, 1, 1, 2], 6, 2)],
)
def test_expand_examples(a, p, quotients, total, biggest):
    cf = expand(a, p)
    assert list(cf.quotients) == quotients
    assert sum_quotients(cf) == total
    assert max_quotient(cf) == biggest


def test_convergents_of_5_13():
    assert expand(5, 13).convergents == ((1, 2), (1, 3), (2, 5), (5, 13))


@pytest.mark.parametrize("a", [0, 7, -1])
def test_expand_rejects(a):
    with pytest.raises(ValueError):
        expand(a, 7)


@given(st.sampled_from(PRIMES), st.data())
def test_expand_properties(p, data):
    a = data.draw(st.integers(1, p - 1))
    cf = expand(a, p)
    assert cf.value() == Fraction(a, p)
    assert cf.convergents[-1] == (a, p)
    assert list(cf.quotients) == euclid(a, p)
    if cf.length >= 2:
        assert cf.quotients[-1] >= 2
    qs = cf.denominators()
    assert all(x < y for x, y in zip(qs, qs[1:]))
    assert cf.length <= 5 * math.log(p)
    assert expand(p - a, p).convergents[-1][1] == p


def test_cf_stats_matches_expand():
    for p in (3, 7, 13, 101, 997):
        a = np.arange(1, p)
        sums, big, length = cf_stats(a, p)
        for i, ai in enumerate(a.tolist()):
            cf = expand(ai, p)
            assert (sums[i], big[i], length[i]) == (sum_quotients(cf), max_quotient(cf), cf.length)


def test_cf_stats_rejects_out_of_range():
    with pytest.raises(ValueError):
        cf_stats(np.array([0, 1]), 7)


@pytest.mark.parametrize(
    "a, p, b, x, cond, conv",
    [(5, 13, 1, 3, True, True), (5, 13, 5, 13, True, True), (3, 7, 1, 3, False, False), (2, 13, 0, 1, True, True)],
)
def test_lemma_A_examples(a, p, b, x, cond, conv):
    r = check_lemma_A(a, p, b, x)
    assert (r.condition, r.is_convergent) == (cond, conv)
    assert r.consistent


def test_lemma_A_reduces_fraction():
    assert check_lemma_A(5, 13, 2, 6).is_convergent  # 2/6 = 1/3


def test_lemma_A_rejects_zero_denominator():
    with pytest.raises(ValueError):
        check_lemma_A(5, 13, 1, 0)


def test_lemma_B_example_interior():
    r = check_lemma_B(expand(5, 13), 2)
    assert (r.lower, r.actual, r.upper) == (Fraction(1, 24), Fraction(2, 39), Fraction(1, 15))
    assert not r.upper_attained and r.holds


def test_lemma_B_example_terminal_boundary():
    r = check_lemma_B(expand(3, 7), 1)
    assert (r.lower, r.actual, r.upper) == (Fraction(1, 18), Fraction(1, 14), Fraction(1, 14))
    assert r.upper_attained and r.holds


def test_lemma_B_range_error():
    with pytest.raises(IndexError):
        check_lemma_B(expand(1, 7), 1)


def test_inequality_b_along_convergents():
    # ||a q_n / p|| < 1/q_{n+1} <= 1/(b_{n+1} q_n); equality at n = l-1
    for p in PRIMES[::7]:
        for a in range(1, p):
            cf = expand(a, p)
            qs = cf.denominators()
            for n in range(1, cf.length):
                qn, qn1, b = qs[n - 1], qs[n], cf.quotients[n]
                r = a * qn % p
                m = min(r, p - r)
                if n <= cf.length - 2:
                    assert m * qn1 < p
                else:
                    assert m * qn1 == p
                assert qn1 >= b * qn
