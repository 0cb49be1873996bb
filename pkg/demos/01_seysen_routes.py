"""
Five ways to compute the Seysen measure
=======================================

The Seysen measure ``S(B) = sum_i |b_i|^2 |b*_i|^2`` pairs every basis vector
with its dual.  Four of the routes below are exact rational computations and
agree to the last bit; the fifth goes through floating-point eigenvalues of
the correlation matrix.
"""

from seysen import Basis, metric_report
from seysen.lattice import angle_profile, dual_basis

# a small skewed basis: the second vector leans 45 degrees onto the first
b = Basis.from_rows([[1, 0], [1, 1]])

dual = dual_basis(b)
print("dual basis rows:", [[str(x) for x in r] for r in dual.rows])
print("B . Bstar^t =", [[str(x) for x in r] for r in dual.pairing()])

# every route at once; exact routes are checked for equality internally
rep = metric_report(b)
for name in ("seysen_dual", "seysen_trace", "seysen_cofactor", "seysen_angles"):
    print(f"{name:16} {getattr(rep, name)}")
print(f"{'seysen_eigen':16} {rep.seysen_eigen!r}")

# the eigenvalues of U are 1 +- cos(45 deg)
print("eigenvalues of U:", rep.eigenvalues)

# sin^2 of the angle between b_i and the other vectors, and 1/sum of them
prof = angle_profile(b)
print("sin^2 alpha_i:", [str(x) for x in prof.sin_alpha_sq])
print("od =", rep.od, " kappa^2 = n S =", rep.kappa_sq)

# a more skewed basis: the exact routes still agree, the eigen route keeps
# about twelve digits even though S is near 10^12
skewed = Basis.from_rows([[10**6, 1, 0], [10**6, 2, 0], [3, 5, 7]])
rep = metric_report(skewed)
print("skewed S =", rep.seysen_trace, " eigen route =", rep.seysen_eigen)
print("largest relative route discrepancy:", rep.max_route_discrepancy)
