"""
Seysen reduction next to LLL
============================

Scramble an orthogonal basis with random unimodular row operations, then
undo the damage with greedy pairwise Seysen reduction and with LLL.
"""

from seysen import Basis, lll_reduce, orthogonality_defect, seysen_reduce, seysen_trace_form
from seysen import gen_knapsack, unimodular_scramble
from seysen.arithmetic import det_exact

identity = Basis.from_rows([[int(i == j) for j in range(6)] for i in range(6)])
scrambled = unimodular_scramble(identity, seed=3, steps=30)
print("scrambled S =", seysen_trace_form(scrambled))

red, u, trace = seysen_reduce(scrambled)
print(f"Seysen: S {trace.s_initial} -> {trace.s_final} in {len(trace.steps)} steps, {trace.sweeps} sweeps")
print("first few S values:", [str(x) for x in trace.s_values[:6]])
print("|det U| =", abs(det_exact(u)))

# a knapsack-style basis: identity block plus one dense column
b = gen_knapsack(6, 10**6, seed=2)
s_red, _, s_trace = seysen_reduce(b)
l_red, _ = lll_reduce(b, delta=0.75)
for name, x in (("input", b), ("seysen", s_red), ("lll", l_red)):
    print(f"{name:7} S={float(seysen_trace_form(x)):12.6g}  od={float(orthogonality_defect(x)):.6f}")
