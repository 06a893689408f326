"""Executable forms of the two existence theorems for multiplicative cosets.

Two statements are checked here empirically, on a coset R = v U of
(Z/pZ)^*:

* at least half of a in R have every partial quotient of a/p below
  16 ln p (``theorem1_fraction``);
* some a in R has sum of partial quotients at most 500 ln p ln ln p
  (``theorem2_search``), and then its discrepancy is O(ln p ln ln p).

The counting machinery behind them is exact: ``f_a(x)`` is the largest c
with ||ax/p|| <= 1/(c x), ``S_a`` sums it over x, and ``count_B`` counts the
pairs (a, x) at level >= c.  Logarithms are natural throughout; base-2
variants are reported next to them for comparison.

The theorem hypotheses (#R >= 10^5 p^(7/8) log^(3/2) p and the 10^8 variant)
never hold for p within reach, so ``TheoremReport`` carries them as flags.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .characters import s_count
from .contfrac import cf_stats, expand, max_quotient
from .lattice import EXACT_LIMIT, LatticePointSet, discrepancy_exact
from .modmath import SubgroupCoset, nearest_int_numerators

# a*x products stay below 2^63 for p < 3e9; chunk rows to bound memory
_ROW_CHUNK_CELLS = 1 << 22


def threshold_t(p: int) -> float:
    return 16 * math.log(p)


def theorem2_bound(p: int) -> float:
    loglog = math.log(math.log(p))
    if loglog <= 0:
        raise ValueError(f"ln ln p must be positive, got p={p}")
    return 500 * math.log(p) * loglog


# --- f_a, S_a, B(c) ----------------------------------------------------------


def f_a(p: int, a: int, x: int) -> int:
    if a % p == 0 or x % p == 0:
        raise ValueError("a and x must be nonzero mod p")
    r = a * x % p
    m = min(r, p - r)
    return p // (x * m)


def f_matrix(p: int, a_values, xs=None) -> np.ndarray:
    """f_a(x) for rows a in ``a_values`` and columns x (default 1..p-1)."""
    a_values = np.asarray(a_values, dtype=np.int64)
    xs = np.arange(1, p, dtype=np.int64) if xs is None else np.asarray(xs, dtype=np.int64)
    m = nearest_int_numerators(np.outer(a_values, xs), p)
    return p // (xs[None, :] * m)


def _f_rows(p: int, a_values):
    step = max(1, _ROW_CHUNK_CELLS // max(1, p - 1))
    a_values = np.asarray(a_values, dtype=np.int64)
    for i in range(0, len(a_values), step):
        yield f_matrix(p, a_values[i : i + step])


def S_a(p: int, a: int) -> int:
    return int(f_matrix(p, [a]).sum())


def S_a_all(p: int, a_values) -> np.ndarray:
    return np.concatenate([rows.sum(axis=1) for rows in _f_rows(p, a_values)])


def count_B(p: int, R: SubgroupCoset | np.ndarray, c: int) -> int:
    """#{(a, x) : a in R, 1 <= x < p, ||ax/p|| <= 1/(c x)}."""
    if c < 1:
        raise ValueError("c must be >= 1")
    elems = R.elements if isinstance(R, SubgroupCoset) else R
    return int(sum(np.count_nonzero(rows >= c) for rows in _f_rows(p, elems)))


def level_counts(p: int, R: SubgroupCoset) -> np.ndarray:
    """``out[c] = count_B(p, R, c)`` for c = 0..max f (out[0] counts every pair)."""
    hist = np.zeros(1, dtype=np.int64)
    for rows in _f_rows(p, R.elements):
        h = np.bincount(rows.ravel())
        if len(h) > len(hist):
            hist = np.pad(hist, (0, len(h) - len(hist)))
        hist[: len(h)] += h
    return np.cumsum(hist[::-1])[::-1]


# --- share of a with small quotients ----------------------------------------


def theorem1_proofstep_check(p: int, a: int, t) -> bool:
    """If S(a) = 0, check ||ax/p|| > 1/(x t) for every x and all b_j < t.

    Returns True when the implication holds (vacuously when S(a) > 0).
    """
    if t <= 1:
        raise ValueError("t must exceed 1")
    if s_count(p, a, t) != 0:
        return True
    # m x > p / t  <=>  m x >= floor(p/t) + 1, exactly
    need = math.floor(Fraction(p) / Fraction(t)) + 1
    xs = np.arange(1, p, dtype=np.int64)
    m = nearest_int_numerators(a * xs, p)
    ineq_a = bool(np.all(m * xs >= need))
    return ineq_a and max_quotient(expand(a, p)) < t


@dataclass(frozen=True)
class Theorem1Fragment:
    t: float
    omega: int
    size: int

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.omega, self.size)


def theorem1_fraction(R: SubgroupCoset, t: float | None = None) -> Theorem1Fragment:
    """Share of a in R whose partial quotients are all < t (default 16 ln p)."""
    p = R.p
    t = threshold_t(p) if t is None else t
    _, biggest, _ = cf_stats(R.elements, p)
    # int < float comparison is exact for the magnitudes involved
    omega = int(np.count_nonzero(biggest < t))
    return Theorem1Fragment(t=t, omega=omega, size=len(R))


# --- smallest quotient sum and the discrepancy ratio ----------------------


@dataclass(frozen=True)
class Theorem2Fragment:
    best_a: int
    best_sum: int
    t2_bound: float

    @property
    def holds(self) -> bool:
        return self.best_sum <= self.t2_bound


def theorem2_search(R: SubgroupCoset) -> Theorem2Fragment:
    """Minimise sum b_i(a) over R; ties go to the smallest a."""
    p = R.p
    bound = theorem2_bound(p)
    sums, _, _ = cf_stats(R.elements, p)
    i = int(np.argmin(sums))  # elements are sorted, argmin takes the first
    return Theorem2Fragment(best_a=int(R.elements[i]), best_sum=int(sums[i]), t2_bound=bound)


def corollary_check(p: int, a: int, max_p: int = EXACT_LIMIT) -> float:
    """D_p(a) / (ln p ln ln p)."""
    d = discrepancy_exact(LatticePointSet(p, a), max_p=max_p).d_value
    return float(d) / (math.log(p) * math.log(math.log(p)))


def hypothesis_check(p: int, size_R: int) -> tuple[bool, bool]:
    lp = math.log(p)
    thm1 = size_R >= 1e5 * p**0.875 * lp**1.5
    thm2 = size_R >= 1e8 * p**0.875 * lp**2.5
    return thm1, thm2


def proof_reference_values(p: int, size_R: int) -> dict[str, float]:
    """Main and error terms of the asymptotic count behind the quotient-sum bound; display only."""
    lp = math.log(p)
    return {
        "main_term": 190 * size_R * lp * math.log(lp),
        "error_term": 8e6 * p**0.875 * lp**2.5,
    }


@dataclass
class TheoremReport:
    p: int
    order: int
    v: int
    t: float
    omega_fraction: Fraction
    best_a: int
    best_sum: int
    t2_bound: float
    hypothesis_thm1: bool
    hypothesis_thm2: bool
    corollary_ratio: float | None = None
    discrepancy: Fraction | None = None
    log2_variants: dict[str, float] = field(default_factory=dict)
    proof_terms: dict[str, float] = field(default_factory=dict)

    @property
    def theorem1_holds(self) -> bool:
        return self.omega_fraction >= Fraction(1, 2)

    @property
    def theorem2_holds(self) -> bool:
        return self.best_sum <= self.t2_bound


def theorem_report(R: SubgroupCoset, with_discrepancy: bool = False, max_p: int = EXACT_LIMIT) -> TheoremReport:
    p = R.p
    f1 = theorem1_fraction(R)
    f2 = theorem2_search(R)
    h1, h2 = hypothesis_check(p, len(R))
    l2 = math.log2(p)
    rep = TheoremReport(
        p=p,
        order=R.order,
        v=R.v,
        t=f1.t,
        omega_fraction=f1.fraction,
        best_a=f2.best_a,
        best_sum=f2.best_sum,
        t2_bound=f2.t2_bound,
        hypothesis_thm1=h1,
        hypothesis_thm2=h2,
        log2_variants={
            "t": 16 * l2,
            "omega_fraction": float(theorem1_fraction(R, t=16 * l2).fraction),
            "t2_bound": 500 * l2 * math.log2(l2),
        },
        proof_terms=proof_reference_values(p, len(R)),
    )
    if with_discrepancy and p <= max_p:
        d = discrepancy_exact(LatticePointSet(p, f2.best_a), max_p=max_p).d_value
        rep.discrepancy = d
        rep.corollary_ratio = float(d) / (math.log(p) * math.log(math.log(p)))
    return rep
