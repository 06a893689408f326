"""Dirichlet characters modulo p, short character sums and the dyadic rectangle cover.

Characters are indexed by j in [0, p-2]:
chi_j(x) = exp(2 pi i j dlog(x) / (p-1)) for p not dividing x, and 0 otherwise.
Values come from a table of (p-1)-th roots of unity indexed by exponent, so
no error accumulates from repeated multiplication.

The rectangle family covers the hyperbolic region {x y <= p/c} by
O(log p) products of integer intervals: a central square of side k =
sqrt(2p/c) and dyadic strips along both axes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .modmath import PrimeContext, SubgroupCoset, make_context


@lru_cache(maxsize=64)
def _roots(p: int) -> np.ndarray:
    e = np.arange(p - 1)
    r = np.exp(2j * np.pi * e / (p - 1))
    r.flags.writeable = False
    return r


@dataclass(frozen=True, eq=False)
class Character:
    ctx: PrimeContext
    index: int

    def __post_init__(self):
        if not 0 <= self.index <= self.ctx.p - 2:
            raise ValueError(f"character index must lie in [0, {self.ctx.p - 2}]")

    @property
    def is_principal(self) -> bool:
        return self.index == 0

    def values(self, xs) -> np.ndarray:
        """chi(x) for an array of integers (any sign, any size)."""
        p = self.ctx.p
        r = np.asarray(xs, dtype=np.int64) % p
        out = np.zeros(r.shape, dtype=complex)
        nz = r != 0
        e = self.index * self.ctx.dlog[r[nz]] % (p - 1)
        out[nz] = _roots(p)[e]
        return out

    def __call__(self, x: int) -> complex:
        return char_value(self, x)


def char_value(chi: Character, x: int) -> complex:
    p = chi.ctx.p
    x %= p
    if x == 0:
        return 0j
    e = chi.index * int(chi.ctx.dlog[x]) % (p - 1)
    return complex(_roots(p)[e])


def character_matrix(ctx: PrimeContext, xs) -> np.ndarray:
    """Rows j = 0..p-2, columns chi_j(x) for x in ``xs``."""
    p = ctx.p
    r = np.asarray(xs, dtype=np.int64) % p
    e = np.outer(np.arange(p - 1), np.where(r == 0, 0, ctx.dlog[r])) % (p - 1)
    m = _roots(p)[e]
    m[:, r == 0] = 0
    return m


def is_trivial_on(chi: Character, U: SubgroupCoset) -> bool:
    """Whether chi is identically 1 on the subgroup underlying ``U``."""
    base = U.elements if U.v == 1 else U.elements * pow(U.v, -1, U.p) % U.p
    return bool(np.allclose(chi.values(base), 1.0, atol=1e-12))


def interval_sum(chi: Character, N: int) -> complex:
    """sum_{x=1}^{N} chi(x), accumulated in ascending order."""
    if N < 1:
        raise ValueError("N must be >= 1")
    return complex(np.cumsum(chi.values(np.arange(1, N + 1)))[-1])


def interval_sums_all(ctx: PrimeContext, lo: int, hi: int) -> np.ndarray:
    """sum_{x=lo}^{hi} chi_j(x) for every j at once (empty range gives zeros).

    The histogram of discrete logs over the interval is transformed with one
    inverse FFT of length p-1.
    """
    p = ctx.p
    if hi < lo:
        return np.zeros(p - 1, dtype=complex)
    r = np.arange(lo, hi + 1, dtype=np.int64) % p
    r = r[r != 0]
    hist = np.bincount(ctx.dlog[r], minlength=p - 1).astype(float)
    return np.fft.ifft(hist) * (p - 1)


def burgess_bound(p: int, N: int, r: int) -> float:
    """30 N^(1-1/r) p^((r+1)/(4r^2)) (ln p)^(1/r)."""
    if r < 1 or N < 1:
        raise ValueError("need r >= 1 and N >= 1")
    return 30.0 * N ** (1 - 1 / r) * p ** ((r + 1) / (4 * r * r)) * math.log(p) ** (1 / r)


# --- dyadic rectangle family ----------------------------------------------


@dataclass(frozen=True)
class Rect:
    """Integer box [x_lo, x_hi] x [y_lo, y_hi]; empty when a range is reversed."""

    index: int
    x_lo: int
    x_hi: int
    y_lo: int
    y_hi: int

    @property
    def width(self) -> int:
        return max(0, self.x_hi - self.x_lo + 1)

    @property
    def height(self) -> int:
        return max(0, self.y_hi - self.y_lo + 1)

    def __len__(self) -> int:
        return self.width * self.height

    def __contains__(self, xy) -> bool:
        x, y = xy
        return self.x_lo <= x <= self.x_hi and self.y_lo <= y <= self.y_hi


@dataclass(frozen=True)
class RectangleFamily:
    p: int
    c: Fraction
    k: float
    j: int
    rects: tuple[Rect, ...]

    def __len__(self) -> int:
        return len(self.rects)

    def __iter__(self):
        return iter(self.rects)

    def rect(self, nu: int) -> Rect:
        return self.rects[nu + self.j]

    def __contains__(self, xy) -> bool:
        return any(xy in r for r in self.rects)

    def n_points(self) -> int:
        return sum(len(r) for r in self.rects)

    def points(self) -> np.ndarray:
        """All integer points, shape (n, 2)."""
        chunks = []
        for r in self.rects:
            if len(r):
                xs, ys = np.meshgrid(np.arange(r.x_lo, r.x_hi + 1), np.arange(r.y_lo, r.y_hi + 1), indexing="ij")
                chunks.append(np.column_stack([xs.ravel(), ys.ravel()]))
        if not chunks:
            return np.empty((0, 2), dtype=np.int64)
        return np.concatenate(chunks).astype(np.int64)


def _floor_k_times(p: int, c: Fraction, scale: Fraction) -> int:
    # floor(scale * sqrt(2p/c)) == isqrt(floor(2 p scale^2 / c)), exactly
    return math.isqrt(math.floor(2 * p * scale * scale / c))


def build_pi(p: int, c) -> RectangleFamily:
    """Cover of {(x, y) : x, y >= 1, x y <= p/c} by dyadic integer rectangles.

    Centre square [1, floor k]^2; for nu >= 1 the strip with columns
    floor(2^(nu-1) k) + 1 .. floor(2^nu k) and rows 1 .. floor(k / 2^nu),
    and its transpose for -nu.  j is the least integer with 2^j k >= p.

    c > p is accepted (thresholds like 16 ln p exceed small p); the covered
    region is then empty.
    """
    c = Fraction(c)
    if c < 1:
        raise ValueError(f"c must be >= 1, got {float(c)}")
    k = math.sqrt(2 * p / c)
    # 2^j k >= p  <=>  2^(2j+1) >= p c
    j = 0
    while Fraction(2 ** (2 * j + 1)) < p * c:
        j += 1
    kf = _floor_k_times(p, c, Fraction(1))
    rects = {0: Rect(0, 1, kf, 1, kf)}
    for nu in range(1, j + 1):
        lo = _floor_k_times(p, c, Fraction(2 ** (nu - 1))) + 1
        hi = _floor_k_times(p, c, Fraction(2**nu))
        h = _floor_k_times(p, c, Fraction(1, 2**nu))
        rects[nu] = Rect(nu, lo, hi, 1, h)
        rects[-nu] = Rect(-nu, 1, h, lo, hi)
    return RectangleFamily(p=p, c=c, k=k, j=j, rects=tuple(rects[i] for i in range(-j, j + 1)))


@lru_cache(maxsize=256)
def _family(p: int, c: Fraction) -> RectangleFamily:
    return build_pi(p, c)


def lemma1_bound(p: int, c) -> float:
    """10^4 p^(7/8) (ln p)^2 / sqrt(c)."""
    return 1e4 * p**0.875 * math.log(p) ** 2 / math.sqrt(float(c))


def lemma1_sum(p: int, c, chi: Character) -> complex:
    """sum over (x, u) in the family of chi(x) conj(chi(u)), one product per rectangle."""
    if chi.ctx.p != p:
        raise ValueError("character modulus does not match p")
    if chi.is_principal:
        raise ValueError("lemma1_sum needs a non-principal character")
    fam = _family(p, Fraction(c))
    top = max(max(r.x_hi, r.y_hi) for r in fam.rects)
    prefix = np.concatenate([[0j], np.cumsum(chi.values(np.arange(1, top + 1)))])

    def seg(lo, hi):
        return prefix[hi] - prefix[lo - 1] if hi >= lo else 0j

    total = 0j
    for r in fam.rects:
        total += seg(r.x_lo, r.x_hi) * np.conj(seg(r.y_lo, r.y_hi))
    return complex(total)


def lemma1_sums_all(ctx: PrimeContext, c) -> np.ndarray:
    """lemma1_sum for every character index j (entry 0 is the principal one)."""
    fam = _family(ctx.p, Fraction(c))
    total = np.zeros(ctx.p - 1, dtype=complex)
    for r in fam.rects:
        if len(r):
            total += interval_sums_all(ctx, r.x_lo, r.x_hi) * np.conj(interval_sums_all(ctx, r.y_lo, r.y_hi))
    return total


# --- the count S(a) -------------------------------------------------------


def delta_p(z: int, p: int) -> int:
    return 1 if z % p == 0 else 0


def _count_residue(lo: int, hi: int, r: int, p: int) -> int:
    """#{z in [lo, hi] : z = r mod p}."""
    return (hi - r) // p - (lo - 1 - r) // p


def s_count(p: int, a: int, t) -> int:
    """Number of (x, y), y != 0, with (x, |y|) in the family for t and a x = y (mod p).

    Each rectangle is walked along its shorter side; the matching residues
    along the longer side are counted arithmetically.
    """
    if not 1 <= a <= p - 1:
        raise ValueError(f"a must lie in [1, {p - 1}]")
    fam = _family(p, Fraction(t))
    a_inv = pow(a, -1, p)
    total = 0
    for r in fam.rects:
        if not len(r):
            continue
        if r.width <= r.height:
            lo, hi, mult, walk = r.y_lo, r.y_hi, a, range(r.x_lo, r.x_hi + 1)
        else:
            lo, hi, mult, walk = r.x_lo, r.x_hi, a_inv, range(r.y_lo, r.y_hi + 1)
        for z in walk:
            res = mult * z % p
            total += _count_residue(lo, hi, res, p) + _count_residue(lo, hi, -res % p, p)
    return total


def _s_char_transform(ctx: PrimeContext, t) -> np.ndarray:
    # T_j = sum over rectangles of (sum chi_j(x)) * conj(sum chi_j(y) over y = +-u)
    fam = _family(ctx.p, Fraction(t))
    parity = 1 + (-1.0) ** np.arange(ctx.p - 1)  # 1 + chi_j(-1)
    total = np.zeros(ctx.p - 1, dtype=complex)
    for r in fam.rects:
        if len(r):
            xs = interval_sums_all(ctx, r.x_lo, r.x_hi)
            us = interval_sums_all(ctx, r.y_lo, r.y_hi)
            total += xs * np.conj(us * parity)
    return total


def s_char_formula(p: int, a: int, t, ctx: PrimeContext | None = None) -> float:
    """S(a) through orthogonality: (1/(p-1)) sum_chi chi(a) sum chi(x) conj(chi(y))."""
    ctx = ctx or make_context(p)
    T = _s_char_transform(ctx, t)
    chi_a = _roots(p)[np.arange(p - 1) * ctx.dlog[a % p] % (p - 1)]
    return float((chi_a * T).sum().real / (p - 1))


def s_char_formula_all(ctx: PrimeContext, t) -> np.ndarray:
    """The character-sum value of S(a) for a = 1..p-1 (index a-1)."""
    p = ctx.p
    T = _s_char_transform(ctx, t)
    # F[e] = sum_j T_j w^(j e); then S(a) = F[dlog a] / (p-1)
    F = np.fft.ifft(T) * (p - 1)
    return F.real[ctx.dlog[1:]] / (p - 1)
