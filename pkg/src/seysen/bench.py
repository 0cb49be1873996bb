"""Per-trial benchmark rows: Seysen vs LLL reduction and bound tightness."""

import statistics
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from . import bounds
from .measures import orthogonality_defect, seysen_trace_form
from .reduction import ReductionConfig, lll_reduce, seysen_reduce

COLUMNS = [
    "trial",
    "n",
    "m",
    "S_initial",
    "S_seysen",
    "S_lll",
    "od_initial",
    "od_seysen",
    "od_lll",
    "seysen_sweeps",
    "seysen_steps",
    "min_ratio_initial",
    "min_ratio_seysen",
    "min_ratio_lll",
    "zhang_upper_rhs",
    "zhang_upper_margin",
    "zhang_od_rhs",
    "zhang_od_margin",
    "zhang_product_rhs",
    "new_product_rhs",
    "product_rhs_ratio",
    "amgm_rhs",
    "new_od_rhs",
    "new_od_margin",
    "lll_constant",
    "lll_constant_delta1",
    "lll_min_margin",
    "existence_bound",
    "seysen_growth_ratio",
    "all_satisfied",
]
TIMING_COLUMNS = ["t_seysen", "t_lll"]


def bench_trial(spec, trial, delta=0.75, max_sweeps=1000, timings=False):
    b = spec.generate(trial)
    n = b.n
    s0 = seysen_trace_form(b)
    verdicts = {v.name: v for v in bounds.check_all(b, s0)}

    t0 = time.perf_counter()
    red, _, trace = seysen_reduce(b, ReductionConfig(max_sweeps=max_sweeps))
    t1 = time.perf_counter()
    lll, _ = lll_reduce(b, delta)
    t2 = time.perf_counter()

    lll_verdict = bounds.check_reduced_min_bound(lll, "lll", delta)
    ratio_seysen = bounds.min_length_ratio(red)
    zp = verdicts["zhang_product"].rhs
    np_ = verdicts["new_product"].rhs
    row = {
        "trial": trial,
        "n": n,
        "m": b.m,
        "S_initial": s0,
        "S_seysen": trace.s_final,
        "S_lll": seysen_trace_form(lll),
        "od_initial": orthogonality_defect(b),
        "od_seysen": orthogonality_defect(red),
        "od_lll": orthogonality_defect(lll),
        "seysen_sweeps": trace.sweeps,
        "seysen_steps": len(trace.steps),
        "min_ratio_initial": bounds.min_length_ratio(b),
        "min_ratio_seysen": ratio_seysen,
        "min_ratio_lll": lll_verdict.lhs,
        "zhang_upper_rhs": float(verdicts["zhang_upper"].rhs),
        "zhang_upper_margin": verdicts["zhang_upper"].margin,
        "zhang_od_rhs": float(verdicts["zhang_od"].rhs),
        "zhang_od_margin": verdicts["zhang_od"].margin,
        "zhang_product_rhs": float(zp),
        "new_product_rhs": float(np_),
        "product_rhs_ratio": float(Fraction(np_) / Fraction(zp)),
        "amgm_rhs": float(verdicts["amgm_product"].rhs),
        "new_od_rhs": float(verdicts["new_od"].rhs),
        "new_od_margin": verdicts["new_od"].margin,
        "lll_constant": lll_verdict.rhs,
        "lll_constant_delta1": bounds.reduced_min_constant(n, "lll", 1.0),
        "lll_min_margin": lll_verdict.margin,
        "existence_bound": bounds.seysen_existence_bound(n),
        "seysen_growth_ratio": ratio_seysen / bounds.seysen_min_growth(n),
        "all_satisfied": all(v.satisfied for v in verdicts.values()) and lll_verdict.satisfied,
    }
    if timings:
        row["t_seysen"] = t1 - t0
        row["t_lll"] = t2 - t1
    return row


def _run(args):
    return bench_trial(*args)


def bench_rows(spec, delta=0.75, max_sweeps=1000, timings=False, jobs=1):
    """One row per trial, in trial order, regardless of ``jobs``."""
    tasks = [(spec, t, delta, max_sweeps, timings) for t in range(spec.trials)]
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            return list(pool.map(_run, tasks))
    return [_run(t) for t in tasks]


def aggregate(rows, columns):
    """``mean`` and ``median`` rows over the numeric columns."""
    out = []
    for label, fn in (("mean", statistics.fmean), ("median", statistics.median)):
        agg = {"trial": label}
        for c in columns:
            if c == "trial":
                continue
            vals = [r[c] for r in rows]
            if all(isinstance(v, bool) for v in vals):
                agg[c] = all(vals)
            else:
                agg[c] = float(fn([float(v) for v in vals]))
        out.append(agg)
    return out
