#!/usr/bin/env python3
"""Compare the compiled and pure-Python enumeration kernels.

    python benchmarks/bench_enum.py --n 7 8 --repeat 3

Each case is run on both backends; their outputs must be identical, and the
best wall time of ``--repeat`` runs is reported along with the speedup.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from aeskit import kernels

CASES = [
    ("hypothesis", "clique", 2, None),
    ("hypothesis", "clique", 3, None),
    ("hypothesis", "odd", 2, None),
    ("tightness", "clique", 2, "mid"),
    ("tightness", "odd", 2, "low"),
]


def _run(impl, task, n, family, param, Delta):
    if task == "hypothesis":
        return kernels.scan_hypothesis(n, family, param, impl=impl)
    return kernels.scan_tightness(n, family, param, Delta, impl=impl)


def _best(fn, repeat):
    best, out = float("inf"), None
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t)
    return best, out


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, nargs="+", default=[6, 7])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--python-max-n", type=int, default=7, help="skip the pure-Python run above this n")
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args(argv)

    try:
        cy = kernels.backend("cython")
    except ImportError:
        print("compiled kernel not built; run `pip install -e . --no-build-isolation`", file=sys.stderr)
        return 1
    py = kernels.backend("python")

    rows = []
    for n in args.n:
        for task, family, param, where in CASES:
            Delta = None if where is None else (n // 2 if where == "mid" else 2)
            t_cy, out_cy = _best(lambda: _run(cy, task, n, family, param, Delta), args.repeat)
            row = {"n": n, "task": task, "family": family, "param": param, "Delta": Delta, "cython_s": t_cy}
            if n <= args.python_max_n:
                t_py, out_py = _best(lambda: _run(py, task, n, family, param, Delta), 1)
                if out_py != out_cy:
                    print(f"backends disagree on {row}", file=sys.stderr)
                    return 2
                row.update(python_s=t_py, speedup=t_py / t_cy if t_cy else None)
            rows.append(row)

    if args.json:
        print(json.dumps(rows, indent=2))
        return 0
    print(f"{'n':>3} {'task':<11} {'mode':<10} {'Delta':>5} {'cython s':>10} {'python s':>10} {'speedup':>8}")
    for r in rows:
        mode = f"{r['family']}:{r['param']}"
        d = "" if r["Delta"] is None else r["Delta"]
        py_s = f"{r['python_s']:.4f}" if "python_s" in r else "-"
        sp = f"{r['speedup']:.1f}x" if r.get("speedup") else "-"
        print(f"{r['n']:>3} {r['task']:<11} {mode:<10} {d:>5} {r['cython_s']:>10.4f} {py_s:>10} {sp:>8}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
