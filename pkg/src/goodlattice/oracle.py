"""Slow reference implementations for the test suite.

Nothing here calls into the optimised modules; agreement between the two
is the point of the exercise.  Sizes are capped so that tests fail loudly
instead of hanging.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

import numpy as np
from sympy import primitive_root


def oracle_discrepancy(p: int, a: int) -> Fraction:
    """max |N - p g1 g2| over every corner (g1, g2) in {0, 1/p, ..., 1}^2, closed and open."""
    if p > 200:
        raise ValueError("oracle_discrepancy is limited to p <= 200")
    xs = list(range(p))
    ys = [a * x % p for x in xs]
    ind = np.zeros((p + 1, p + 1), dtype=np.int64)
    for x, y in zip(xs, ys):
        ind[x, y] += 1
    # closed[G1, G2] = #{x <= G1, y <= G2}; grid index G means coordinate G/p
    closed = ind.cumsum(axis=0).cumsum(axis=1)
    # open[G1, G2] = #{x < G1, y < G2}
    opened = np.zeros_like(closed)
    opened[1:, 1:] = closed[:-1, :-1]
    G = np.arange(p + 1, dtype=np.int64)
    area = np.outer(G, G)  # p^2 * g1 * g2
    dev = np.maximum(np.abs(p * closed - area), np.abs(p * opened - area))
    return Fraction(int(dev.max()), p)


def oracle_f_a(p: int, a: int, x: int) -> int:
    """Largest c >= 1 with ||ax/p|| <= 1/(c x), found by scanning c; 0 if none."""
    if p > 500:
        raise ValueError("oracle_f_a is limited to p <= 500")
    r = a * x % p
    dist = min(r, p - r)  # ||ax/p|| == dist / p
    c = 0
    while dist * (c + 1) * x <= p:  # dist/p <= 1/((c+1) x)
        c += 1
    return c


def oracle_pi_membership(p: int, c) -> set[tuple[int, int]]:
    """All (x, y) in [1, p-1]^2 with x y <= p/c."""
    if p > 2000:
        raise ValueError("oracle_pi_membership is limited to p <= 2000")
    c = Fraction(c)
    lim = Fraction(p) / c
    out = set()
    for x in range(1, p):
        for y in range(1, p):
            if x * y > lim:
                break
            out.add((x, y))
    return out


def _max_n_below(p: int, c: Fraction, scale: Fraction) -> int:
    # largest n >= 0 with n <= scale * sqrt(2p/c), i.e. n^2 c <= 2 p scale^2
    rhs = 2 * p * scale * scale
    n = 0
    while (n + 1) ** 2 * c <= rhs:
        n += 1
    return n


def oracle_pi_multiplicity(p: int, c) -> np.ndarray:
    """How many rectangles of the family contain each (x, u), 0 <= x, u <= 2p.

    Rectangles are read off the definition with k = sqrt(2p/c): the square
    [1, k]^2, strips 2^(nu-1) k < x <= 2^nu k, 1 <= u <= k/2^nu for
    nu = 1..j (j least with 2^j k >= p), and their transposes.
    """
    if p > 2000:
        raise ValueError("oracle_pi_multiplicity is limited to p <= 2000")
    c = Fraction(c)
    j = 0
    while 2 ** (2 * j + 1) < p * c:
        j += 1
    n = 2 * p + 1
    mult = np.zeros((n, n), dtype=np.int16)
    kf = _max_n_below(p, c, Fraction(1))
    mult[1 : kf + 1, 1 : kf + 1] += 1
    for nu in range(1, j + 1):
        lo = _max_n_below(p, c, Fraction(2 ** (nu - 1)))
        hi = _max_n_below(p, c, Fraction(2**nu))
        h = _max_n_below(p, c, Fraction(1, 2**nu))
        mult[lo + 1 : hi + 1, 1 : h + 1] += 1
        mult[1 : h + 1, lo + 1 : hi + 1] += 1
    return mult


@lru_cache(maxsize=64)
def _family_points(p: int, t: Fraction) -> tuple[np.ndarray, np.ndarray]:
    xs, us = np.nonzero(oracle_pi_multiplicity(p, t))
    return xs.astype(np.int64), us.astype(np.int64)


def oracle_s_count(p: int, a: int, t) -> int:
    """Pairs (x, y), y != 0, with (x, |y|) in the family and a x = y (mod p), by enumeration."""
    if p > 300:
        raise ValueError("oracle_s_count is limited to p <= 300")
    xs, us = _family_points(p, Fraction(t))
    total = 0
    for x, u in zip(xs.tolist(), us.tolist()):
        for y in (u, -u):
            if (a * x - y) % p == 0:
                total += 1
    return total


def oracle_character_table(p: int) -> np.ndarray:
    """chi_j(x) for j = 0..p-2 (rows) and x = 0..p-1 (columns), from scratch.

    Uses sympy's primitive root and a freshly walked index table; the column
    for x = 0 is zero.
    """
    if p > 1000:
        raise ValueError("oracle_character_table is limited to p <= 1000")
    g = primitive_root(p)
    ind = [0] * p
    y = 1
    for k in range(p - 1):
        ind[y] = k
        y = y * g % p
    e = np.outer(np.arange(p - 1), np.array(ind)) % (p - 1)
    table = np.exp(2j * np.pi * e / (p - 1))
    table[:, 0] = 0
    return table
