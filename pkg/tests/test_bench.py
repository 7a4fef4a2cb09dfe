from __future__ import annotations

import runpy
from pathlib import Path

import pytest

from aeskit import kernels

BENCH = Path(__file__).resolve().parents[1] / "benchmarks" / "bench_enum.py"


@pytest.mark.skipif(kernels.BACKEND != "cython", reason="compiled kernel not built")
def test_benchmark_runs_and_backends_agree(capsys):
    main = runpy.run_path(str(BENCH))["main"]
    assert main(["--n", "5", "6", "--repeat", "1"]) == 0
    out = capsys.readouterr().out
    assert "speedup" in out and out.count("hypothesis") == 6
