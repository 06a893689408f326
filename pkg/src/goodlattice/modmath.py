"""Exact arithmetic in the multiplicative group of residues modulo an odd prime.

A :class:`PrimeContext` holds the least primitive root and a dense discrete
log table, so that character evaluations elsewhere reduce to table lookups.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np
from sympy import factorint
from sympy import isprime as _sympy_isprime

#: Largest modulus for which a dense discrete-log table is built by default.
DLOG_LIMIT = 2_000_000


def is_prime(n: int) -> bool:
    """Deterministic primality test (exact for every n < 2**64)."""
    if n < 1:
        raise ValueError(f"is_prime expects a positive integer, got {n}")
    return bool(_sympy_isprime(n))


@dataclass(frozen=True, eq=False)
class PrimeContext:
    """Residues modulo an odd prime ``p`` with primitive root ``g``.

    ``dlog[x]`` is the exponent k in [0, p-2] with g**k == x (mod p) for
    1 <= x <= p-1; ``dlog[0]`` is the sentinel -1.  ``powers[k]`` is g**k mod p.
    """

    p: int
    g: int
    dlog: np.ndarray = field(repr=False)
    powers: np.ndarray = field(repr=False)

    @property
    def order(self) -> int:
        return self.p - 1

    def log(self, x: int) -> int:
        x %= self.p
        if x == 0:
            raise ValueError("discrete log of a multiple of p is undefined")
        return int(self.dlog[x])

    def power(self, k: int) -> int:
        return int(self.powers[k % (self.p - 1)])


def _least_primitive_root(p: int) -> int:
    n = p - 1
    cofactors = [n // q for q in factorint(n)]
    for g in range(2, p):
        if all(pow(g, e, p) != 1 for e in cofactors):
            return g
    raise ValueError(f"no primitive root found for {p}")


def make_context(p: int, max_p: int = DLOG_LIMIT) -> PrimeContext:
    """Build the context for prime ``p`` (least primitive root, full dlog table)."""
    if p < 3 or p % 2 == 0 or not is_prime(p):
        raise ValueError(f"modulus must be an odd prime, got {p}")
    if p > max_p:
        raise ValueError(f"p={p} exceeds the discrete-log table limit {max_p}")
    g = _least_primitive_root(p)
    powers = np.empty(p - 1, dtype=np.int64)
    x = 1
    for k in range(p - 1):
        powers[k] = x
        x = x * g % p
    dlog = np.full(p, -1, dtype=np.int64)
    dlog[powers] = np.arange(p - 1, dtype=np.int64)
    powers.flags.writeable = False
    dlog.flags.writeable = False
    return PrimeContext(p=p, g=g, dlog=dlog, powers=powers)


def mod_inverse(y: int, ctx: PrimeContext) -> int:
    p = ctx.p
    if y % p == 0:
        raise ValueError("0 has no inverse modulo p")
    return pow(y, -1, p)


@dataclass(frozen=True, eq=False)
class SubgroupCoset:
    """The coset ``v * U`` of the order-``order`` subgroup U of (Z/pZ)^*."""

    ctx: PrimeContext
    order: int
    v: int
    elements: np.ndarray = field(repr=False)

    @property
    def p(self) -> int:
        return self.ctx.p

    @property
    def index(self) -> int:
        """Number of cosets, (p-1)/order."""
        return (self.ctx.p - 1) // self.order

    def __len__(self) -> int:
        return self.order

    def __contains__(self, a: int) -> bool:
        a %= self.ctx.p
        i = np.searchsorted(self.elements, a)
        return bool(i < len(self.elements) and self.elements[i] == a)

    def __iter__(self):
        return (int(a) for a in self.elements)


def subgroup(ctx: PrimeContext, m: int) -> SubgroupCoset:
    """The unique subgroup of order ``m`` (requires m | p-1)."""
    if m < 1 or (ctx.p - 1) % m:
        raise ValueError(f"order {m} does not divide p-1 = {ctx.p - 1}")
    d = (ctx.p - 1) // m
    elems = np.sort(ctx.powers[::d][:m])
    elems.flags.writeable = False
    return SubgroupCoset(ctx=ctx, order=m, v=1, elements=elems)


def coset(U: SubgroupCoset, v: int) -> SubgroupCoset:
    p = U.ctx.p
    v %= p
    if v == 0:
        raise ValueError("coset representative must be nonzero mod p")
    elems = np.sort(U.elements * v % p)
    elems.flags.writeable = False
    return SubgroupCoset(ctx=U.ctx, order=U.order, v=v, elements=elems)


@dataclass(frozen=True)
class NearestIntDistance:
    """Exact value of ||z/p|| as ``numerator / denominator``."""

    numerator: int
    denominator: int

    @property
    def value(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    def __float__(self) -> float:
        return self.numerator / self.denominator


def nearest_int_distance(z: int, ctx: PrimeContext | int) -> NearestIntDistance:
    p = ctx if isinstance(ctx, int) else ctx.p
    r = z % p
    return NearestIntDistance(min(r, p - r), p)


def nearest_int_numerators(z: np.ndarray, p: int) -> np.ndarray:
    """Vectorised numerators of ||z/p||."""
    r = np.asarray(z, dtype=np.int64) % p
    return np.minimum(r, p - r)
