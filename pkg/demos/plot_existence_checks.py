"""
Counting behind the existence statements
========================================

S(a) counts solutions of a x = +-y (mod p) in the rectangle family; when it
vanishes, every partial quotient of a/p is below t.  The level counts #B(c)
add up to the sums S_a.  Finally both statements are checked on a coset.
"""

import math

from goodlattice import (
    S_a,
    coset,
    expand,
    level_counts,
    make_context,
    s_char_formula,
    s_count,
    subgroup,
    theorem_report,
)

p = 211
ctx = make_context(p)
t = 16 * math.log(p)

for a in (1, 3, 57, 100):
    s = s_count(p, a, t)
    print(f"a = {a:3d}: S(a) = {s}, via characters {s_char_formula(p, a, t, ctx):+.6f}, "
          f"max quotient {max(expand(a, p).quotients)} vs t = {t:.1f}")

R = coset(subgroup(ctx, 42), 2)
lv = level_counts(p, R)
print("#B(c) for c = 1..8:", lv[1:9].tolist())
print("sum of S_a over R:", sum(S_a(p, int(a)) for a in R), "= sum of #B(c):", int(lv[1:].sum()))

rep = theorem_report(subgroup(ctx, p - 1), with_discrepancy=True)
print(f"share with small quotients {float(rep.omega_fraction):.3f} (need 1/2)")
print(f"best a = {rep.best_a}: sum b = {rep.best_sum} <= {rep.t2_bound:.0f}; "
      f"D = {float(rep.discrepancy):.3f}, D/(ln p ln ln p) = {rep.corollary_ratio:.3f}")
print("size hypotheses met:", rep.hypothesis_thm1, rep.hypothesis_thm2)
