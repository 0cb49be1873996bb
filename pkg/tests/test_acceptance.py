"""Acceptance criteria 1-10, each at its stated tolerance.

Every test records one ``criterion k: PASS|FAIL`` line before asserting, and
the lines are printed together at the end of the pytest run.  Run alone with
``python3 -m pytest tests/test_acceptance.py -v``.
"""

import math
import statistics
import time
from fractions import Fraction

import pytest

from conftest import ACCEPTANCE_LINES
from seysen.arithmetic import det_exact, matmul
from seysen.bounds import (
    MeanTriple,
    check_all,
    check_new_product_bound,
    check_product_bound_zhang,
    check_reduced_min_bound,
    hga_upper,
    reduced_min_constant,
    seysen_existence_bound,
)
from seysen.errors import RouteMismatch
from seysen.generators import EnsembleSpec, gen_uniform
from seysen.lattice import Basis, embed_isometric
from seysen.measures import (
    kappa_sq,
    metric_report,
    orthogonality_defect,
    seysen_angles,
    seysen_cofactor,
    seysen_dual,
    seysen_eigen,
    seysen_trace_form,
)
from seysen.reduction import is_lll_reduced, lll_reduce, seysen_reduce, unimodular_scramble
from seysen.rng import Xoshiro256

SEED = 20240601
ROUTE_DIMS = range(2, 9)
ROUTE_TRIALS = 1000
ROUTE_BUDGET_S = 120.0


def record(k, ok, detail):
    ACCEPTANCE_LINES[k] = f"criterion {k:>2}: {'PASS' if ok else 'FAIL'}  {detail}"
    return ok


def identity_basis(n):
    return Basis.from_rows([[int(i == j) for j in range(n)] for i in range(n)])


@pytest.fixture(scope="module")
def route_ensemble():
    """Criterion 1's ensemble with its metric reports, timed as one run."""
    start = time.perf_counter()
    bases, reports, mismatches = [], [], []
    for n in ROUTE_DIMS:
        for b in EnsembleSpec("uniform", n, n, 50, SEED, ROUTE_TRIALS):
            try:
                reports.append(metric_report(b))
                bases.append(b)
            except RouteMismatch as exc:
                mismatches.append((n, str(exc)))
    return bases, reports, mismatches, time.perf_counter() - start


@pytest.fixture(scope="module")
def scrambles():
    """Criterion 7's instances and their Seysen reductions."""
    out = []
    for k in range(500):
        n = (4, 6, 8)[k % 3]
        steps = 20 + k % 21
        b = unimodular_scramble(identity_basis(n), SEED + k, steps)
        red, u, trace = seysen_reduce(b)
        out.append((b, red, u, trace))
    return out


def test_criterion_01_route_equivalence(route_ensemble):
    bases, reports, mismatches, elapsed = route_ensemble
    exact_ok = not mismatches and all(
        r.seysen_dual == r.seysen_trace == r.seysen_cofactor == r.seysen_angles for r in reports
    )
    worst = max(abs(r.seysen_eigen - float(r.seysen_dual)) / float(r.seysen_dual) for r in reports)
    ok = exact_ok and len(reports) == len(ROUTE_DIMS) * ROUTE_TRIALS and worst <= 1e-9 and elapsed < ROUTE_BUDGET_S
    record(1, ok, f"{len(reports)} bases, exact routes identical={exact_ok}, "
                  f"max eigen rel err={worst:.2e}, {elapsed:.1f}s")
    assert ok, mismatches[:3]


def test_criterion_02_worked_fixture():
    b = Basis.from_rows([[1, 0], [1, 1]])
    routes = [seysen_dual(b), seysen_trace_form(b), seysen_cofactor(b), seysen_angles(b)]
    rep = metric_report(b)
    expected = sorted([1 - 1 / math.sqrt(2), 1 + 1 / math.sqrt(2)])
    eig_ok = all(abs(x - y) <= 1e-9 for x, y in zip(sorted(rep.eigenvalues), expected))
    ok = (
        all(s == 4 for s in routes)
        and abs(seysen_eigen(b) - 4) <= 4e-9
        and orthogonality_defect(b) == Fraction(1, 2)
        and kappa_sq(b) == 8
        and b.volume_sq == 1
        and eig_ok
    )
    record(2, ok, f"S={routes[0]} eigen={seysen_eigen(b):.15g} od={orthogonality_defect(b)} "
                  f"kappa^2={kappa_sq(b)} Vol^2={b.volume_sq} eigenvalues={sorted(rep.eigenvalues)}")
    assert ok


def test_criterion_03_inequality_ladder(route_ensemble):
    bases, reports, _, _ = route_ensemble
    knapsack = list(EnsembleSpec("knapsack", 8, None, 10**6, SEED, 200))
    checked, violations = 0, []
    for b, s in [(b, r.seysen_trace) for b, r in zip(bases, reports)] + [(b, None) for b in knapsack]:
        for v in check_all(b, s):
            checked += 1
            if not v.satisfied:
                violations.append((v.name, b))
    ok = not violations and len(bases) + len(knapsack) == 7200
    record(3, ok, f"{len(bases) + len(knapsack)} bases, {checked} verdicts, {len(violations)} violations")
    assert ok, violations[:3]


def test_criterion_04_n2_equality():
    bad = 0
    for k in range(10_000):
        b = gen_uniform(2, 2, 1000, SEED, trial=k)
        if seysen_trace_form(b) * (1 - orthogonality_defect(b)) != 2:
            bad += 1
    record(4, bad == 0, f"10000 bases, {bad} with S(1-od) != 2")
    assert bad == 0


def _random_tuple(rng):
    n = rng.integer(2, 10)
    # log-uniform over six decades so the means separate
    return [math.exp(rng.random() * 6 * math.log(10) - 3 * math.log(10)) for _ in range(n)]


def test_criterion_05_hga_lemma():
    rng = Xoshiro256(SEED)
    chain_bad = half_bad = halves = 0
    for _ in range(10_000):
        t = MeanTriple.from_values(_random_tuple(rng))
        upper = hga_upper(t)
        if not (t.h <= t.g * (1 + 1e-9) and t.g <= upper * (1 + 1e-9)):
            chain_bad += 1
        if t.alpha == 0.5:
            halves += 1
            if abs(upper - math.sqrt(t.a * t.h)) > 1e-12 * math.sqrt(t.a * t.h):
                half_bad += 1
    pair_rng = Xoshiro256(SEED, 1)
    for _ in range(10_000):
        xs = [math.exp(pair_rng.random() * 12 - 6) for _ in range(2)]
        t = MeanTriple.from_values(xs)
        halves += 1
        if abs(hga_upper(t) - math.sqrt(t.a * t.h)) > 1e-12 * math.sqrt(t.a * t.h):
            half_bad += 1
    ok = chain_bad == 0 and half_bad == 0
    record(5, ok, f"10000 tuples, {chain_bad} chain failures; {halves} alpha=1/2 tuples, {half_bad} off sqrt(ah)")
    assert ok


def test_criterion_06_tightness_improvement():
    lines, ok = [], True
    for n, trials in ((8, 300), (12, 150)):
        ratios, worse = [], 0
        for b in EnsembleSpec("uniform", n, n, 50, SEED, trials):
            s = seysen_trace_form(b)
            if s < 2 * n:
                continue
            new = check_new_product_bound(b, s).rhs
            old = check_product_bound_zhang(b, s).rhs
            if not new < old:
                worse += 1
            ratios.append(float(old / new))
        ok = ok and worse == 0 and len(ratios) > 0
        lines.append(f"n={n}: {len(ratios)}/{trials} with S>=2n, {worse} not tighter, "
                     f"median old/new product rhs ratio={statistics.median(ratios):.3e}")
    record(6, ok, "; ".join(lines))
    assert ok


def test_criterion_07_reduction_correctness(scrambles):
    exact = decreased = 0
    lattice_ok = True
    max_sweeps = 0
    for b, red, u, trace in scrambles:
        exact += trace.s_final == b.n
        decreased += trace.s_final < trace.s_initial
        lattice_ok &= matmul(u, b.rows) == red.rows and abs(det_exact(u)) == 1 and red.volume_sq == b.volume_sq
        max_sweeps = max(max_sweeps, trace.sweeps)
    total = len(scrambles)
    ok = exact >= 0.95 * total and decreased == total and lattice_ok and max_sweeps <= 50
    record(7, ok, f"{exact}/{total} reach S=n, {decreased}/{total} strictly decrease, "
                  f"lattice preserved={lattice_ok}, max sweeps={max_sweeps}")
    assert ok


def test_criterion_08_existence_bound(scrambles):
    worst = 0.0
    bad = 0
    for _, red, _, trace in scrambles:
        bound = seysen_existence_bound(red.n)
        if not trace.s_final <= bound:
            bad += 1
        worst = max(worst, float(trace.s_final) / bound)
    record(8, bad == 0, f"{len(scrambles)} reduced bases, {bad} above the bound, largest S/bound={worst:.2e}")
    assert bad == 0


def _rational(rng):
    p = rng.integer(1, 20) * rng.choice((-1, 1))
    return Fraction(p, rng.integer(1, 20))


def test_criterion_09_invariances():
    rng = Xoshiro256(SEED, 9)
    bases = [gen_uniform(n, n + n % 2, 50, SEED, trial=t) for n in range(2, 7) for t in range(6)]
    diag_bad = embed_bad = perm_bad = 0
    for b in bases:
        s = seysen_trace_form(b)
        for _ in range(100):
            d = [_rational(rng) for _ in range(b.n)]
            scaled = Basis.from_rows([[di * x for x in r] for di, r in zip(d, b.rows)])
            diag_bad += seysen_trace_form(scaled) != s
        for k in (1, 3):
            e = embed_isometric(b, k, rng.next_u64())
            embed_bad += seysen_trace_form(e) != s or seysen_dual(e) != s
        for _ in range(10):
            order = list(range(b.n))
            rng.shuffle(order)
            signs = [rng.choice((-1, 1)) for _ in order]
            signed = Basis.from_rows([[sg * x for x in b.rows[i]] for i, sg in zip(order, signs)])
            perm_bad += seysen_trace_form(signed) != s
    ok = diag_bad == embed_bad == perm_bad == 0
    record(9, ok, f"{len(bases)} bases: diagonal scalings {diag_bad} changed, "
                  f"embeddings {embed_bad} changed, signed permutations {perm_bad} changed")
    assert ok


def test_criterion_10_lll_guarantee():
    bases = [b for n in range(2, 9) for b in EnsembleSpec("uniform", n, n, 50, SEED, 40)]
    bases += list(EnsembleSpec("knapsack", 6, None, 10**6, SEED, 60))
    bad = not_reduced = 0
    worst = 0.0
    for b in bases:
        red, _ = lll_reduce(b, 0.75)
        not_reduced += not is_lll_reduced(red, 0.75)
        v = check_reduced_min_bound(red, "lll", 0.75)
        bad += not v.satisfied
        worst = max(worst, v.lhs / v.rhs)
    limit = ", ".join(f"n={n}: {reduced_min_constant(n, 'lll', 0.75):.4f} vs {reduced_min_constant(n, 'lll', 1.0):.4f}"
                      for n in (2, 8))
    ok = bad == 0 and not_reduced == 0
    record(10, ok, f"{len(bases)} LLL outputs, {bad} violations, largest ratio/constant={worst:.3f}; "
                   f"constant at delta=3/4 vs delta->1: {limit}")
    assert ok
