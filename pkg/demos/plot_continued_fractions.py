"""
Partial quotients over a subgroup
=================================

Expand a/p for every a in a multiplicative subgroup and look at how large
the partial quotients get.
"""

import math

import numpy as np

from goodlattice import cf_stats, expand, make_context, subgroup

p = 1009
ctx = make_context(p)
print(f"p = {p}, least primitive root g = {ctx.g}")

# a single expansion, with its convergents
cf = expand(404, p)
print("404/1009 =", cf.quotients)
print("convergents:", [f"{h}/{k}" for h, k in cf.convergents])

# the subgroup of order 144 and its quotient statistics
U = subgroup(ctx, 144)
sums, biggest, lengths = cf_stats(U.elements, p)
t = 16 * math.log(p)
print(f"order {len(U)}: median sum of quotients {np.median(sums):.0f}, "
      f"longest expansion {lengths.max()}")
print(f"share with every quotient below 16 ln p = {t:.1f}: {np.mean(biggest < t):.3f}")

best = int(np.argmin(sums))
print(f"smallest quotient sum {sums[best]} at a = {U.elements[best]}:", expand(int(U.elements[best]), p).quotients)
