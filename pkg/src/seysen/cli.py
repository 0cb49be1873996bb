"""Command-line entry point: ``seysen {metrics,verify,reduce,gen,bench}``.

Exit codes: 0 success, 1 bound violation, 2 parse/usage error,
3 singular or rank-deficient input.
"""

import argparse
import sys

from . import bounds
from .arithmetic import det_exact
from .bench import COLUMNS, TIMING_COLUMNS, aggregate, bench_rows
from .errors import ParseError, RankDeficient, RouteMismatch
from .generators import EnsembleSpec
from .matrixio import parse_matrix, serialize_matrix
from .measures import metric_report, orthogonality_defect, seysen_trace_form
from .reduction import ReductionConfig, is_lll_reduced, lll_reduce, seysen_reduce
from .report import to_csv, to_json, to_text

EXIT_OK, EXIT_VIOLATION, EXIT_PARSE, EXIT_RANK = 0, 1, 2, 3

METRIC_COLUMNS = [
    "n", "m", "mode", "seysen_dual", "seysen_trace", "seysen_cofactor", "seysen_angles",
    "seysen_eigen", "od", "volume_sq", "kappa_sq", "eigenvalues", "max_route_discrepancy",
]
VERDICT_COLUMNS = ["name", "lhs", "rhs", "satisfied", "margin"]


def _delta(text):
    d = float(text)
    if not 0.25 < d <= 1:
        raise argparse.ArgumentTypeError("delta must lie in (1/4, 1]")
    return d


def _positive_float(text):
    x = float(text)
    if not x > 0:
        raise argparse.ArgumentTypeError("must be positive")
    return x


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--mode", choices=["exact", "float"], default="exact")
    common.add_argument("--tol", type=_positive_float, default=1e-9)
    common.add_argument("--format", choices=["text", "json", "csv"], default="text")

    gen_flags = argparse.ArgumentParser(add_help=False)
    gen_flags.add_argument("--family", choices=["uniform", "knapsack"], default="uniform")
    gen_flags.add_argument("--n", type=int, default=4)
    gen_flags.add_argument("--m", type=int, default=None)
    gen_flags.add_argument("--bound", type=int, default=50)
    gen_flags.add_argument("--seed", type=int, default=0)

    parser = argparse.ArgumentParser(prog="seysen", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("metrics", parents=[common], help="all Seysen routes and measures")
    p.add_argument("file", help="matrix file, or - for stdin")

    p = sub.add_parser("verify", parents=[common], help="check every inequality")
    p.add_argument("file")
    p.add_argument("--delta", type=_delta, default=0.75)

    p = sub.add_parser("reduce", parents=[common], help="Seysen or LLL reduction")
    p.add_argument("file")
    p.add_argument("--algo", choices=["seysen", "lll"], default="seysen")
    p.add_argument("--delta", type=_delta, default=0.75)
    p.add_argument("--max-sweeps", type=int, default=1000)
    p.add_argument("--output", "-o", help="write the reduced basis here")

    p = sub.add_parser("gen", parents=[common, gen_flags], help="emit a seeded random basis")
    p.add_argument("--trial", type=int, default=0)

    p = sub.add_parser("bench", parents=[common, gen_flags], help="per-trial CSV benchmark")
    p.add_argument("--trials", type=int, default=10)
    p.add_argument("--delta", type=_delta, default=0.75)
    p.add_argument("--max-sweeps", type=int, default=1000)
    p.add_argument("--timings", action="store_true", help="add runtime columns (not reproducible)")
    p.add_argument("--jobs", type=int, default=1)
    return parser


def _read(path):
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _load(args):
    return parse_matrix(_read(args.file), args.mode)


def cmd_metrics(args, out):
    b = _load(args)
    rep = metric_report(b, args.tol)
    if args.format == "json":
        out.write(to_json(rep))
    elif args.format == "csv":
        row = {k: getattr(rep, k) for k in METRIC_COLUMNS}
        row["eigenvalues"] = " ".join(format(x, ".17g") for x in rep.eigenvalues)
        out.write(to_csv([row], METRIC_COLUMNS))
    else:
        out.write(to_text(rep))
    return EXIT_OK


def verify_verdicts(b, tol=1e-9, delta=0.75):
    """Every applicable verdict for ``b``, route equality first."""
    try:
        rep = metric_report(b, tol)
        routes = bounds.BoundVerdict("route_equality", rep.max_route_discrepancy, tol,
                                     rep.max_route_discrepancy <= tol, tol - rep.max_route_discrepancy)
        s = rep.seysen_trace
    except RouteMismatch as exc:
        routes = bounds.BoundVerdict("route_equality", str(exc), 0, False, float("-inf"))
        s = seysen_trace_form(b)
    verdicts = [routes] + bounds.check_all(b, s)
    if is_lll_reduced(b, delta):
        verdicts.append(bounds.check_reduced_min_bound(b, "lll", delta))
    return verdicts


def cmd_verify(args, out):
    b = _load(args)
    verdicts = verify_verdicts(b, args.tol, args.delta)
    info = {
        "min_ratio": bounds.min_length_ratio(b),
        "seysen_growth_ratio": bounds.min_length_ratio(b) / bounds.seysen_min_growth(b.n)
        if b.n > 1 else None,
    }
    if args.format == "json":
        out.write(to_json({"verdicts": verdicts, "report_only": info}))
    elif args.format == "csv":
        out.write(to_csv([vars(v) for v in verdicts], VERDICT_COLUMNS))
    else:
        for v in verdicts:
            status = "ok  " if v.satisfied else "FAIL"
            out.write(f"{status} {v.name:<16} lhs={v.lhs} rhs={v.rhs} margin={v.margin:.17g}\n")
    return EXIT_OK if all(v.satisfied for v in verdicts) else EXIT_VIOLATION


def cmd_reduce(args, out):
    b = _load(args)
    s_before, od_before = seysen_trace_form(b), orthogonality_defect(b)
    if args.algo == "seysen":
        red, u, trace = seysen_reduce(b, ReductionConfig(max_sweeps=args.max_sweeps))
        sweeps, steps, limit = trace.sweeps, len(trace.steps), trace.hit_sweep_limit
    else:
        red, u = lll_reduce(b, args.delta)
        sweeps, steps, limit = None, None, False
    summary = {
        "algo": args.algo,
        "S_before": s_before,
        "S_after": seysen_trace_form(red),
        "od_before": od_before,
        "od_after": orthogonality_defect(red),
        "sweeps": sweeps,
        "steps": steps,
        "sweep_limit_reached": limit,
        "abs_det_U": abs(det_exact(u)),
    }
    basis_text = serialize_matrix(red)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(basis_text + "\n")
    if args.format == "json":
        if not args.output:
            summary["basis"] = basis_text
        out.write(to_json(summary))
    elif args.format == "csv":
        out.write(to_csv([summary], list(summary)))
    else:
        if not args.output:
            out.write(basis_text + "\n")
        sys.stderr.write(to_text(summary))
    return EXIT_OK


def _spec(args, trials=1):
    return EnsembleSpec(args.family, args.n, args.m, args.bound, args.seed, trials)


def cmd_gen(args, out):
    b = _spec(args).generate(args.trial)
    out.write(serialize_matrix(b) + "\n")
    return EXIT_OK


def cmd_bench(args, out):
    spec = _spec(args, args.trials)
    rows = bench_rows(spec, args.delta, args.max_sweeps, args.timings, args.jobs)
    columns = COLUMNS + (TIMING_COLUMNS if args.timings else [])
    rows = rows + aggregate(rows, columns)
    if args.format == "json":
        out.write(to_json([{c: r[c] for c in columns} for r in rows]))
    else:
        out.write(to_csv(rows, columns))
    return EXIT_OK if all(r["all_satisfied"] for r in rows) else EXIT_VIOLATION


COMMANDS = {
    "metrics": cmd_metrics,
    "verify": cmd_verify,
    "reduce": cmd_reduce,
    "gen": cmd_gen,
    "bench": cmd_bench,
}


def main(argv=None, out=None):
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args, out)
    except ParseError as exc:
        sys.stderr.write(f"parse error: {exc}\n")
        return EXIT_PARSE
    except OSError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_PARSE
    except RankDeficient as exc:
        sys.stderr.write(f"rank deficient: {exc}\ncertificate: det(BB^t) = {exc.certificate}\n")
        return EXIT_RANK


if __name__ == "__main__":
    sys.exit(main())
