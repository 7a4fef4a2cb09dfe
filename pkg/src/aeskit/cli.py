"""``aeskit`` command line.

Reports go to stdout as JSON, diagnostics to stderr. Exit codes: 0 success,
1 usage or parameter error, 2 counterexamples or violations found, 3 input
that could not be read or parsed.
"""

from __future__ import annotations

import argparse
import csv
import sys
import time

from . import __version__, graph6
from .constructions import audit_construction, extremal_spec
from .detect import r_partition_exact
from .errors import AesError, Graph6Error, HypothesisError, InfeasibleError, ParameterError, WitnessError
from .graph import degree_profile
from .partitioner import extract_r_partition
from .reports import ReportEnvelope
from .thresholds import Mode, clique_integer_form, hypothesis, odd_integer_form, threshold
from .verifier import corollary_sweep, default_jobs, exhaustive_verify, fact31_fuzz, is_free, tightness_oracle

EXIT_OK, EXIT_USAGE, EXIT_FOUND, EXIT_PARSE = 0, 1, 2, 3

CSV_HEADER = ["delta_max", "regime", "threshold_num", "threshold_den", "threshold_dec", "realized_delta", "realized_Delta", "gap"]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _mode(args) -> Mode:
    if args.family == "clique":
        if args.r is None:
            raise UsageError("--family clique needs --r")
        return Mode.clique(args.r)
    if args.k is None:
        raise UsageError("--family odd needs --k")
    return Mode.odd(args.k)


def _mode_dict(mode: Mode) -> dict:
    return {"family": mode.family, "param": mode.param}


def _load(path: str):
    try:
        graphs = graph6.read_file(path)
    except OSError as exc:
        raise Graph6Error(f"cannot read {path}: {exc.strerror}", 0) from exc
    if len(graphs) != 1:
        raise Graph6Error(f"{path} holds {len(graphs)} graphs, expected exactly one", 0)
    return graphs[0]


def _integer_form(G, mode: Mode, delta: int, Delta: int) -> bool:
    if mode.family == "clique" or mode.param == 1:
        return clique_integer_form(G.n, mode.param if mode.family == "clique" else 2, delta, Delta)
    return odd_integer_form(G.n, mode.param, delta, Delta)


def cmd_construct(args):
    mode = _mode(args)
    spec = extremal_spec(args.n, mode, args.delta_max)
    G = spec.graph()
    if args.out:
        graph6.write_file(args.out, [G])
    results = {"spec": spec.to_dict(), "graph6": graph6.encode(G).decode("ascii") if G.n <= 62 else None}
    if args.audit:
        results["audit"] = audit_construction(spec).to_dict()
    params = {"mode": _mode_dict(mode), "n": args.n, "delta_max": args.delta_max, "out": args.out, "audit": args.audit}
    return params, results, EXIT_OK


def cmd_check(args):
    mode = _mode(args)
    G = _load(args.input)
    delta, Delta = degree_profile(G)
    free = is_free(G, mode)
    verdict = hypothesis(G.n, mode, delta, Delta)
    partite = r_partition_exact(G, mode.parts) is not None
    results = {
        "n": G.n,
        "delta": delta,
        "Delta": Delta,
        "free": free is True,
        "witness": None if free is True else {"kind": free.kind, "vertices": list(free.vertices)},
        "partite": partite,
        "verdict": verdict.to_dict(),
        "integer_form_holds": _integer_form(G, mode, delta, Delta),
    }
    return {"mode": _mode_dict(mode), "in": args.input}, results, EXIT_OK


def cmd_partition(args):
    G = _load(args.input)
    params = {"r": args.r, "in": args.input, "strict": args.strict}
    try:
        out = extract_r_partition(G, args.r, strict=args.strict)
    except WitnessError as exc:
        w = exc.witness
        return params, {"ok": False, "error": str(exc), "witness": {"kind": w.kind, "vertices": list(w.vertices)}}, EXIT_USAGE
    except HypothesisError as exc:
        return params, {"ok": False, "error": str(exc), "verdict": exc.verdict.to_dict()}, EXIT_USAGE
    if out.ok:
        return params, {"ok": True, "partition": out.partition.as_lists()}, EXIT_OK
    return params, {"ok": False, "violation": out.violation.to_dict()}, EXIT_OK


def cmd_verify(args):
    mode = _mode(args)
    jobs = args.jobs if args.jobs is not None else default_jobs()
    report = exhaustive_verify(args.n_max, mode, jobs=jobs, deep=args.deep)
    params = {"mode": _mode_dict(mode), "n_max": args.n_max, "deep": args.deep, "jobs": jobs}
    return params, report.to_dict(), EXIT_FOUND if report.counterexamples else EXIT_OK


def cmd_tightness(args):
    mode = _mode(args)
    res = tightness_oracle(args.n, mode, args.delta_max)
    return {"mode": _mode_dict(mode), "n": args.n, "delta_max": args.delta_max}, res.to_dict(), EXIT_OK


def _parse_range(text: str) -> range:
    try:
        parts = [int(p) for p in text.split(":")]
    except ValueError:
        raise UsageError(f"bad --delta-range {text!r}, expected A:B[:STEP]") from None
    if len(parts) not in (2, 3) or (len(parts) == 3 and parts[2] <= 0):
        raise UsageError(f"bad --delta-range {text!r}, expected A:B[:STEP] with STEP > 0")
    a, b = parts[:2]
    return range(a, b + 1, parts[2] if len(parts) == 3 else 1)


def sweep_rows(n: int, mode: Mode, deltas) -> list[dict]:
    """One row per target Delta. The threshold is taken at the target; the gap at the realized Delta."""
    rows = []
    for D in deltas:
        thr = threshold(n, mode, D)
        row = {
            "delta_max": D,
            "threshold_num": thr.numerator,
            "threshold_den": thr.denominator,
            "threshold_dec": f"{float(thr):.6f}",
        }
        try:
            audit = audit_construction(extremal_spec(n, mode, D))
        except InfeasibleError as exc:
            row.update(regime="infeasible", realized_delta="", realized_Delta="", gap="", note=str(exc))
        else:
            row.update(regime=audit.spec.regime, realized_delta=audit.delta, realized_Delta=audit.Delta, gap=str(audit.gap))
        rows.append(row)
    return rows


def cmd_sweep(args):
    mode = _mode(args)
    rows = sweep_rows(args.n, mode, _parse_range(args.delta_range))
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            w = csv.DictWriter(fh, fieldnames=CSV_HEADER, extrasaction="ignore")
            w.writeheader()
            w.writerows(rows)
    params = {"mode": _mode_dict(mode), "n": args.n, "delta_range": args.delta_range, "csv": args.csv}
    return params, {"rows": rows}, EXIT_OK


def cmd_fuzz(args):
    if args.corollary:
        reports = [corollary_sweep(args.n_max, args.param_max, fam).to_dict(timing=False) for fam in ("clique", "odd")]
        found = any(r["violation_count"] for r in reports)
        return {"corollary": True, "n_max": args.n_max, "param_max": args.param_max}, {"sweeps": reports}, EXIT_FOUND if found else EXIT_OK
    if not args.fact31:
        raise UsageError("fuzz needs --fact31 or --corollary")
    rep = fact31_fuzz(args.samples, args.n, args.k if args.k is not None else 2, args.seed)
    params = {"fact31": True, "samples": args.samples, "n": args.n, "k": rep.k, "seed": args.seed}
    return params, rep.to_dict(), EXIT_FOUND if rep.violations else EXIT_OK


def _add_mode(p, required=True):
    p.add_argument("--family", choices=["clique", "odd"], required=required)
    p.add_argument("--r", type=int, help="clique parameter: graphs are K_{r+1}-free")
    p.add_argument("--k", type=int, help="odd-cycle parameter: no odd cycle of length <= 2k+1")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="aeskit", description="Degree thresholds, extremal blowups and exhaustive checks.")
    parser.add_argument("--version", action="version", version=f"aeskit {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("construct", help="build an extremal blowup")
    _add_mode(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--delta-max", type=int, required=True)
    p.add_argument("--out", help="write the graph here in graph6")
    p.add_argument("--audit", action="store_true")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("check", help="degree profile, freeness and hypothesis verdict")
    p.add_argument("--in", dest="input", required=True)
    _add_mode(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("partition", help="constructive r-partition")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--strict", action="store_true", help="refuse graphs failing the hypothesis")
    p.set_defaults(func=cmd_partition)

    p = sub.add_parser("verify", help="exhaustive check over all small labeled graphs")
    _add_mode(p)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--deep", action="store_true", help="raise the cap from 7 to 8")
    p.add_argument("--jobs", type=int, default=None, help="worker processes (default: available CPUs)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("tightness", help="largest delta of a free non-partite graph at given Delta")
    _add_mode(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--delta-max", type=int, required=True)
    p.set_defaults(func=cmd_tightness)

    p = sub.add_parser("sweep", help="thresholds and constructions over a Delta range")
    _add_mode(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--delta-range", required=True, help="A:B[:STEP], inclusive")
    p.add_argument("--csv")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("fuzz", help="randomized structural checks")
    p.add_argument("--fact31", action="store_true", help="odd-cycle neighbourhood profiles")
    p.add_argument("--corollary", action="store_true", help="classical-bound implication grid")
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--n", type=int, default=20)
    p.add_argument("--k", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n-max", type=int, default=200)
    p.add_argument("--param-max", type=int, default=6)
    p.set_defaults(func=cmd_fuzz)
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # --help, --version and usage errors
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    t0 = time.perf_counter()
    try:
        params, results, code = args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"aeskit: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Graph6Error as exc:
        print(f"aeskit: cannot parse input: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (ParameterError, WitnessError, HypothesisError) as exc:
        print(f"aeskit: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except AesError as exc:
        print(f"aeskit: {exc}", file=sys.stderr)
        return EXIT_USAGE
    env = ReportEnvelope(args.command, params, results, timing={"wall_time": round(time.perf_counter() - t0, 4)})
    print(env.to_json())
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
