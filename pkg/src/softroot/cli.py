"""Command-line front end.

    softroot cluster --input inst.json --output report.json [--roots roots.json]
    softroot analyze --input inst.json --roots roots.json --output analysis.json
    softroot bench SUITE [--output-dir DIR]

Exit codes: 0 success, 1 unreadable input or unknown suite, 2 the run or the
analysis could not complete (depth limit, precision cap, bad root data),
3 a benchmark check failed.
"""

from __future__ import annotations

import argparse
import sys

from . import analysis
from .clusterer import DEFAULT_MAX_DEPTH, DepthExceeded, cluster, verify_isolating_system
from .functions import Poly
from .roots import RootSet
from .serialize import (
    InstanceError,
    RunReport,
    cd_out,
    dy_out,
    load_instance,
    read_json,
    stats_json,
    system_json,
    write_json,
    write_tree_csv,
)
from .softcompare import DEFAULT_ITERATION_CAP, IterationCap
from .suites import SUITES


def _opt(args, spec, name, default):
    val = getattr(args, name, None)
    if val is not None:
        return val
    return spec.options.get(name, default)


def _load_roots(path: str) -> RootSet:
    obj = read_json(path)
    try:
        return RootSet.from_json(obj)
    except (KeyError, TypeError, ValueError) as exc:
        raise InstanceError(f"bad roots file: {exc}") from exc


def _run(spec, args):
    """Cluster and return (report dict, exit code, system, stats)."""
    max_depth = _opt(args, spec, "max_depth", DEFAULT_MAX_DEPTH)
    cap = _opt(args, spec, "iteration_cap", DEFAULT_ITERATION_CAP)
    threads = _opt(args, spec, "threads", 1)
    dump = _opt(args, spec, "dump_tree", None)
    try:
        D, st = cluster(spec.function, spec.box, spec.n0, max_depth=max_depth, iteration_cap=cap,
                        threads=threads, record_tree=bool(dump))
    except DepthExceeded as exc:
        b = exc.box
        err = {"type": "DepthExceeded", "message": str(exc), "depth": exc.depth,
               "box": {"center": cd_out(b.center), "width": dy_out(b.width)}}
        rep = RunReport(spec.to_json(), [], stats_json(exc.stats), error=err)
        return rep, 2, None, exc.stats
    except IterationCap as exc:
        rep = RunReport(spec.to_json(), [], {}, error={"type": "IterationCap", "message": str(exc)})
        return rep, 2, None, None
    if dump:
        write_tree_csv(st, dump)
    return RunReport(spec.to_json(), system_json(D), stats_json(st)), 0, D, st


def cmd_cluster(args) -> int:
    spec = load_instance(args.input)
    roots = _load_roots(args.roots) if args.roots else None
    rep, code, D, st = _run(spec, args)
    if code == 0 and roots is not None:
        rep.verification = verify_isolating_system(D, roots, spec.box).to_json()
    write_json(rep.to_json(), args.output)
    if code:
        print(f"softroot: {rep.error['type']}: {rep.error['message']}", file=sys.stderr)
    return code


def _ratio(a, b):
    return a / b if b and b > 0 else None


def cmd_analyze(args) -> int:
    spec = load_instance(args.input)
    roots = _load_roots(args.roots)
    out = {"instance": spec.to_json(), "roots": roots.to_json()["roots"]}
    f = spec.function
    if not isinstance(f, Poly):
        if len(roots):
            print("softroot: root analysis is only available for polynomial instances", file=sys.stderr)
            return 2
        out["s0"] = []
        write_json(out, args.output)
        return 0
    try:
        analysis.check_roots(f, roots)
        s0 = analysis.build_s0(roots, spec.box)
        tb = analysis.predicted_bounds(f, roots, spec.box, spec.n0, s0=s0)
    except analysis.AnalysisError as exc:
        print(f"softroot: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    out["s0"] = [g.to_json() for g in s0]
    out["theory"] = tb.to_json()
    rep, code, D, st = _run(spec, args)
    run = rep.to_json()
    if code == 0:
        run["verification"] = verify_isolating_system(D, roots, spec.box).to_json()
        run["measured_vs_predicted"] = {
            "tree_size_over_tree_bound": _fmt(_ratio(st.tree_size, tb.tree_bound)),
            "tree_size_over_intpoly_bound": _fmt(_ratio(st.tree_size, tb.intpoly_bound)),
            "max_bits_over_precision_bound": _fmt(_ratio(st.max_bits, tb.precision_bound)),
        }
    out["run"] = run
    write_json(out, args.output)
    return code


def _fmt(x):
    return None if x is None else f"{x:.17g}"


def cmd_bench(args) -> int:
    run = SUITES.get(args.suite)
    if run is None:
        print(f"softroot: unknown suite {args.suite!r}; choose from {', '.join(SUITES)}", file=sys.stderr)
        return 1
    res = run(threads=args.threads or 1)
    res.write(args.output_dir)
    for label, ok, detail in res.checks:
        print(f"{'PASS' if ok else 'FAIL'}  {label}" + (f"  ({detail})" if detail and not ok else ""))
    print(f"{res.name}: {'PASS' if res.ok else 'FAIL'}")
    return 0 if res.ok else 3


class _Parser(argparse.ArgumentParser):
    # usage errors are input errors: exit 1, keeping 2 for failed runs
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="softroot", description="Certified root clustering by soft predicates.")
    sub = ap.add_subparsers(dest="command", required=True)

    def run_flags(p):
        p.add_argument("--max-depth", dest="max_depth", type=int, help="subdivision depth limit (default 64)")
        p.add_argument("--iteration-cap", dest="iteration_cap", type=int, help="precision cap in bits for one comparison")
        p.add_argument("--threads", type=int, help="worker threads for evaluating each BFS level")
        p.add_argument("--dump-tree", dest="dump_tree", metavar="PATH", help="write one CSV row per processed box")

    p = sub.add_parser("cluster", help="run the clustering on an instance file")
    p.add_argument("--input", required=True)
    p.add_argument("--output", required=True)
    p.add_argument("--roots", help="known roots; adds a verification section")
    run_flags(p)
    p.set_defaults(func=cmd_cluster)

    p = sub.add_parser("analyze", help="cluster geometry, S0 and bound expressions from known roots")
    p.add_argument("--input", required=True)
    p.add_argument("--roots", required=True)
    p.add_argument("--output", required=True)
    run_flags(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("bench", help="run one of the benchmark suites")
    p.add_argument("suite")
    p.add_argument("--output-dir", dest="output_dir", default="bench_out")
    p.add_argument("--threads", type=int)
    p.set_defaults(func=cmd_bench)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InstanceError as exc:
        print(f"softroot: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
