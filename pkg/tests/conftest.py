from __future__ import annotations

import functools
import os
import sys

from hypothesis import HealthCheck, settings, strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from aeskit.graph import Graph  # noqa: E402

settings.register_profile("default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@st.composite
def graphs(draw, min_n=1, max_n=8, p=None):
    n = draw(st.integers(min_n, max_n))
    rows = [0] * n
    for j in range(1, n):
        for i in range(j):
            if draw(st.booleans()) if p is None else draw(st.floats(0, 1)) < p:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Graph(n, tuple(rows))


@functools.lru_cache(maxsize=None)
def hypothesis_masks(n: int, family: str, param: int) -> tuple[int, ...]:
    """Kernel candidates, cached for the whole session (n = 9 scans take seconds)."""
    from aeskit import kernels

    return tuple(kernels.scan_hypothesis(n, family, param)[1])


ACCEPTANCE: dict[int, list[tuple[bool, str]]] = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for num in sorted(ACCEPTANCE):
            parts = ACCEPTANCE[num]
            ok = all(p[0] for p in parts)
            if len(parts) == 1:
                detail = parts[0][1]
            else:
                detail = "; ".join(f"{d} [{'ok' if good else 'fails'}]" for good, d in parts)
            terminalreporter.write_line(f"criterion {num:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
