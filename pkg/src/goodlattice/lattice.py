"""The two-dimensional point set x -> (x/p, {ax/p}) and its exact star discrepancy.

Discrepancy is the unnormalised ``sup |N_p(g1, g2) - g1*g2*p|`` over anchored
boxes [0, g1] x [0, g2].  Because every coordinate is a multiple of 1/p, the
supremum is a maximum over the critical grid, and ``p * D`` is an integer.

For a row X (g1 = X/p) and column Y (g2 = Y/p) write N(X, Y) for the number of
points with x <= X and (a x mod p) <= Y.  Then

    p * D = max over X, Y in [0, p-1] of
            max(p N(X, Y) - X Y,  (X+1)(Y+1) - p N(X, Y)),

the first term from closed boxes, the second from boxes approached from
below (open boxes).  The scan keeps G(Y) = p N(X, Y) - X Y for the current
row; the open term then equals X + Y + 1 - G(Y).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor

import numba
import numpy as np

from .contfrac import ContinuedFraction, expand, sum_quotients
from .modmath import PrimeContext, mod_inverse

#: Default largest p accepted by the O(p^2) exact scan.
EXACT_LIMIT = 20_000

#: Constant in the continued-fraction upper bound C_D * (sum b_i + 1).
CF_BOUND_CONSTANT = 3

# int32 keeps the inner loop vectorisable; |G| <= p^2 must fit.
_INT32_SAFE_P = 46_340


@dataclass(frozen=True)
class LatticePointSet:
    """Points (x/p, {ax/p}), x = 0..p-1, kept as integer numerators over p.

    ``p`` may be 2 here; everything else in the package wants an odd prime.
    """

    p: int
    a: int

    def __post_init__(self):
        if not 1 <= self.a <= self.p - 1:
            raise ValueError(f"generator must lie in [1, {self.p - 1}], got {self.a}")

    @classmethod
    def from_context(cls, ctx: PrimeContext, a: int) -> LatticePointSet:
        return cls(ctx.p, a)

    def xs(self) -> np.ndarray:
        return np.arange(self.p, dtype=np.int64)

    def ys(self) -> np.ndarray:
        """Second coordinates times p, i.e. a*x mod p for x = 0..p-1."""
        return self.xs() * self.a % self.p

    def points(self) -> list[tuple[Fraction, Fraction]]:
        p = self.p
        return [(Fraction(int(x), p), Fraction(int(y), p)) for x, y in zip(self.xs(), self.ys())]


def count_box(pts: LatticePointSet, g1, g2, mode: str = "closed") -> int:
    """Number of points in [0, g1] x [0, g2] (``closed``) or [0, g1) x [0, g2) (``open``)."""
    g1, g2 = Fraction(g1), Fraction(g2)
    if not (0 <= g1 <= 1 and 0 <= g2 <= 1):
        raise ValueError("box corner must lie in [0, 1]^2")
    p = pts.p
    if mode == "closed":
        X, Y = floor(g1 * p), floor(g2 * p)
    elif mode == "open":
        X, Y = ceil(g1 * p) - 1, ceil(g2 * p) - 1
    else:
        raise ValueError(f"mode must be 'closed' or 'open', got {mode!r}")
    xs, ys = pts.xs(), pts.ys()
    return int(np.count_nonzero((xs <= X) & (ys <= Y)))


@numba.njit(cache=True, boundscheck=False)
def _scan(ys, p, G):
    """Return (p*D, X, Y, is_open) for the row-by-row critical grid scan.

    ``G`` is int32 or int64 scratch of length p.  Ties resolve to the first
    row, closed before open, smallest column.
    """
    for Y in range(p):
        G[Y] = Y
    pp = G.dtype.type(p)
    neg = G.dtype.type(-(p * p) - p - 2)
    best = -1
    bx = 0
    by = 0
    bopen = False
    for X in range(p):
        y0 = ys[X]
        mc = neg
        mo = neg
        for Y in range(p):
            yy = G.dtype.type(Y)
            g = G[Y] - yy + (pp if Y >= y0 else G.dtype.type(0))
            G[Y] = g
            mc = max(mc, g)
            mo = max(mo, yy - g)
        mo_full = mo + X + 1
        if mc > best or mo_full > best:
            if mc >= mo_full:
                best = mc
                bopen = False
                for Y in range(p):
                    if G[Y] == mc:
                        by = Y
                        break
            else:
                best = mo_full
                bopen = True
                for Y in range(p):
                    if Y - G[Y] == mo:
                        by = Y
                        break
            bx = X
    return best, bx, by, bopen


def _scaled_discrepancy(p: int, a: int) -> tuple[int, int, int, bool]:
    ys = np.arange(p, dtype=np.int64) * a % p
    dtype = np.int32 if p <= _INT32_SAFE_P else np.int64
    best, X, Y, is_open = _scan(ys.astype(dtype), p, np.empty(p, dtype=dtype))
    return int(best), int(X), int(Y), bool(is_open)


@dataclass(frozen=True)
class DiscrepancyReport:
    p: int
    a: int
    d_value: Fraction
    gamma1: Fraction
    gamma2: Fraction
    box_open: bool
    cf_bound: int
    cf_constant: int = CF_BOUND_CONSTANT

    @property
    def argmax_box(self) -> tuple[Fraction, Fraction, str]:
        return self.gamma1, self.gamma2, "open" if self.box_open else "closed"

    @property
    def bound_ratio(self) -> float:
        """D_p(a) / (sum b_i + 1), the raw ratio behind ``cf_constant``."""
        return float(self.d_value) * self.cf_constant / self.cf_bound


def discrepancy_exact(pts: LatticePointSet, max_p: int = EXACT_LIMIT) -> DiscrepancyReport:
    p, a = pts.p, pts.a
    if p > max_p:
        raise ValueError(
            f"p={p} exceeds the exact-scan limit {max_p}; use discrepancy_bound instead"
        )
    best, X, Y, is_open = _scaled_discrepancy(p, a)
    if is_open:
        g1, g2 = Fraction(X + 1, p), Fraction(Y + 1, p)
    else:
        g1, g2 = Fraction(X, p), Fraction(Y, p)
    return DiscrepancyReport(
        p=p,
        a=a,
        d_value=Fraction(best, p),
        gamma1=g1,
        gamma2=g2,
        box_open=is_open,
        cf_bound=discrepancy_bound(expand(a, p)),
    )


def discrepancy_bound(cf: ContinuedFraction) -> int:
    return CF_BOUND_CONSTANT * (sum_quotients(cf) + 1)


def scaled_discrepancies(ctx: PrimeContext, max_p: int = EXACT_LIMIT) -> np.ndarray:
    """``p * D_p(a)`` for every a in [1, p-1] (index a-1).

    Uses D_p(a) = D_p(a^-1): the two point sets are reflections of each other
    in the diagonal.
    """
    p = ctx.p
    if p > max_p:
        raise ValueError(f"p={p} exceeds the exact-scan limit {max_p}")
    out = np.full(p - 1, -1, dtype=np.int64)
    for a in range(1, p):
        if out[a - 1] >= 0:
            continue
        d = _scaled_discrepancy(p, a)[0]
        out[a - 1] = d
        out[mod_inverse(a, ctx) - 1] = d
    return out
