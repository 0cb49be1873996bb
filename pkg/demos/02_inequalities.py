"""
Bounds between the Seysen measure and the orthogonality defect
==============================================================

Small ``S`` forces a nearly orthogonal basis.  Here every inequality is
checked on a handful of random bases, and the two product bounds are
compared as the dimension grows.
"""

import statistics

from seysen import EnsembleSpec, check_all, gen_uniform, orthogonality_defect, seysen_trace_form
from seysen.bounds import check_new_product_bound, check_product_bound_zhang

# every verdict on a few random 6-dimensional bases
for b in EnsembleSpec("uniform", n=6, m=6, bound=50, seed=7, trials=3):
    s = seysen_trace_form(b)
    print(f"S = {float(s):.4g}")
    for v in check_all(b, s):
        print(f"  {v.name:14} {'ok' if v.satisfied else 'VIOLATED'}  margin={float(v.margin):.4g}")

# how much smaller the right-hand side of the new product bound is than
# the older one, on bases with S >= 2n
for n in (4, 8, 12):
    ratios = []
    for b in EnsembleSpec("uniform", n=n, m=n, bound=50, seed=1, trials=40):
        s = seysen_trace_form(b)
        if s >= 2 * n:
            old = check_product_bound_zhang(b, s).rhs
            new = check_new_product_bound(b, s).rhs
            ratios.append(float(old / new))
    print(f"n={n:2}: median old/new rhs = {statistics.median(ratios):.3g} over {len(ratios)} bases")

# in dimension 2 the upper sandwich bound is an identity: S (1 - od) = 2
for seed in range(3):
    b = gen_uniform(2, 2, 1000, seed)
    print("S (1 - od) =", seysen_trace_form(b) * (1 - orthogonality_defect(b)))
