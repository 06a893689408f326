"""
Character sums over intervals and over a hyperbolic region
==========================================================

Short sums of Dirichlet characters are compared with the Burgess-shaped
bound, then summed over the dyadic rectangles covering {x y <= p/c}.
"""

import numpy as np

from goodlattice import (
    Character,
    build_pi,
    burgess_bound,
    interval_sums_all,
    lemma1_bound,
    lemma1_sums_all,
    make_context,
)

p = 499
ctx = make_context(p)

# largest |sum_{x <= N} chi(x)| over non-principal characters
for N in (10, 50, 250):
    worst = np.abs(interval_sums_all(ctx, 1, N)[1:]).max()
    print(f"N = {N:3d}: max |sum| = {worst:6.2f}, r = 2 bound = {burgess_bound(p, N, 2):9.1f}")

# the quadratic character is j = (p-1)/2
legendre = Character(ctx, (p - 1) // 2)
print("Legendre symbol at 1..10:", np.round(legendre.values(np.arange(1, 11)).real).astype(int))

fam = build_pi(p, 4)
print(f"c = 4: k = {fam.k:.2f}, {len(fam)} rectangles, {fam.n_points()} integer points")
for r in fam:
    if len(r):
        print(f"  rect {r.index:+d}: x in [{r.x_lo}, {r.x_hi}], y in [{r.y_lo}, {r.y_hi}]")

sums = np.abs(lemma1_sums_all(ctx, 4)[1:])
print(f"max |double sum| = {sums.max():.1f} against {lemma1_bound(p, 4):.3g}")
