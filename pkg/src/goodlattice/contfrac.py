"""Continued fractions of a/p, their convergents, and Legendre/Lemma-B style checks.

Everything here is exact integer arithmetic.  Convergents are indexed from
n = 1 (p_1/q_1 = 1/b_1); the zeroth convergent 0/1 is implied.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

import numpy as np


@dataclass(frozen=True)
class ContinuedFraction:
    """Canonical expansion a/p = [0; b_1, ..., b_l] with b_l >= 2 when l >= 2."""

    a: int
    p: int
    quotients: tuple[int, ...]
    convergents: tuple[tuple[int, int], ...]

    @property
    def length(self) -> int:
        return len(self.quotients)

    def denominators(self) -> list[int]:
        return [q for _, q in self.convergents]

    def value(self) -> Fraction:
        """Rebuild the value from the quotients alone."""
        x = Fraction(0)
        for b in reversed(self.quotients):
            x = 1 / (b + x)
        return x


def expand(a: int, p: int) -> ContinuedFraction:
    if not 1 <= a <= p - 1:
        raise ValueError(f"numerator must lie in [1, {p - 1}], got {a}")
    quotients = []
    convergents = []
    num, den = a, p
    h_prev, h = 1, 0  # p_{-1}, p_0
    k_prev, k = 0, 1  # q_{-1}, q_0
    while num:
        b, r = divmod(den, num)
        quotients.append(b)
        h_prev, h = h, b * h + h_prev
        k_prev, k = k, b * k + k_prev
        convergents.append((h, k))
        num, den = r, num
    return ContinuedFraction(a, p, tuple(quotients), tuple(convergents))


def sum_quotients(cf: ContinuedFraction) -> int:
    return sum(cf.quotients)


def max_quotient(cf: ContinuedFraction) -> int:
    return max(cf.quotients)


def cf_stats(a: np.ndarray | int, p: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Vectorised Euclid: (sum of quotients, max quotient, length) for each a."""
    num = np.array(a, dtype=np.int64, ndmin=1)
    if num.size and (num.min() < 1 or num.max() > p - 1):
        raise ValueError("numerators must lie in [1, p-1]")
    den = np.full_like(num, p)
    total = np.zeros_like(num)
    biggest = np.zeros_like(num)
    length = np.zeros_like(num)
    live = num > 0
    while live.any():
        n = num[live]
        d = den[live]
        b, r = np.divmod(d, n)
        total[live] += b
        biggest[live] = np.maximum(biggest[live], b)
        length[live] += 1
        num[live] = r
        den[live] = n
        live = num > 0
    return total, biggest, length


@dataclass(frozen=True)
class LemmaACheck:
    condition: bool  # |a/p - b/x| < 1/(2x^2)
    is_convergent: bool

    @property
    def consistent(self) -> bool:
        return self.is_convergent or not self.condition


def check_lemma_A(a: int, p: int, b: int, x: int) -> LemmaACheck:
    """Test the Legendre criterion for b/x against a/p.

    The membership test includes the zeroth convergent 0/1.
    """
    if x == 0:
        raise ValueError("denominator x must be nonzero")
    if x < 0:
        b, x = -b, -x
    # |a x - b p| / (p x) < 1 / (2 x^2)  <=>  2 x |a x - b p| < p
    condition = 2 * x * abs(a * x - b * p) < p
    g = gcd(b, x)
    red = (b // g, x // g)
    cf = expand(a, p)
    is_conv = red == (0, 1) or red in cf.convergents
    return LemmaACheck(condition, is_conv)


@dataclass(frozen=True)
class LemmaBBounds:
    lower: Fraction
    actual: Fraction
    upper: Fraction
    upper_attained: bool  # only possible for the penultimate convergent

    @property
    def holds(self) -> bool:
        if not self.lower < self.actual:
            return False
        return self.actual <= self.upper if self.upper_attained else self.actual < self.upper


def check_lemma_B(cf: ContinuedFraction, n: int) -> LemmaBBounds:
    """Bounds 1/(q_n(q_n+q_{n+1})) < |a/p - p_n/q_n| < 1/(q_n q_{n+1}).

    Valid for 1 <= n < l.  When n = l-1 the upper bound can be attained
    exactly; ``upper_attained`` reports that case.
    """
    if not 1 <= n < cf.length:
        raise IndexError(f"convergent index must lie in [1, {cf.length - 1}], got {n}")
    pn, qn = cf.convergents[n - 1]
    qn1 = cf.convergents[n][1]
    diff = abs(cf.a * qn - pn * cf.p)
    actual = Fraction(diff, cf.p * qn)
    upper = Fraction(1, qn * qn1)
    return LemmaBBounds(
        lower=Fraction(1, qn * (qn + qn1)),
        actual=actual,
        upper=upper,
        upper_attained=actual == upper,
    )
