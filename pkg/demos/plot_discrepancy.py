"""
Exact discrepancy of a two-dimensional lattice rule
===================================================

The points (x/p, {ax/p}) for x = 0..p-1 are scanned exactly over all anchored
boxes.  Small partial quotients of a/p go with small discrepancy.
"""

from goodlattice import (
    LatticePointSet,
    discrepancy_exact,
    expand,
    make_context,
    scaled_discrepancies,
    sum_quotients,
)

p = 1009

for a in (1, 2, 404, 623):
    rep = discrepancy_exact(LatticePointSet(p, a))
    g1, g2, mode = rep.argmax_box
    print(f"a = {a:4d}  D = {float(rep.d_value):8.3f}  sum b = {sum_quotients(expand(a, p)):4d}  "
          f"worst box [0,{g1}]x[0,{g2}] ({mode})")

# every generator at once: D(a) = D(1/a) halves the work
pd = scaled_discrepancies(make_context(p)) / p
a_best = int(pd.argmin()) + 1
print(f"best a = {a_best}, D = {pd.min():.3f}; worst a = {int(pd.argmax()) + 1}, D = {pd.max():.1f}")
