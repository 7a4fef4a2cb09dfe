from __future__ import annotations

import os
import subprocess
import sys

import pytest
from hypothesis import given, strategies as st

from aeskit import _enum_py, kernels
from aeskit.graph import Graph

from conftest import graphs, hypothesis_masks

# labeled triangle-free graphs on n vertices; n = 8 cross-checked by a vectorised brute force
TRIANGLE_FREE = {1: 1, 2: 2, 3: 7, 4: 41, 5: 388, 6: 5789, 7: 133501, 8: 4682270}

# hypothesis-passing free graphs per n, from an independent numpy enumeration of every mask (n <= 7)
HYP_COUNTS = {
    ("clique", 2): [0, 1, 3, 7, 15, 31, 63],
    ("clique", 3): [0, 0, 1, 0, 15, 15, 70],
    ("odd", 2): [0, 1, 3, 19, 135, 781, 8883],
}
# n = 8 and 9, agreed between both backends
HYP_COUNTS_8 = {("clique", 2): 127, ("clique", 3): 280, ("odd", 2): 225499}
HYP_COUNTS_9 = {("clique", 2): 255, ("clique", 3): 595}

needs_cython = pytest.mark.skipif(kernels.BACKEND != "cython", reason="compiled kernel not built")


def _backends():
    out = [_enum_py]
    try:
        out.append(kernels.backend("cython"))
    except ImportError:
        pass
    return out


@pytest.mark.parametrize("impl", _backends(), ids=lambda m: m.__name__)
def test_triangle_free_counts(impl):
    for n in range(1, 8):
        count, _ = kernels.scan_hypothesis(n, "clique", 2, prune=False, impl=impl)
        assert count == TRIANGLE_FREE[n]


@needs_cython
def test_triangle_free_count_n8():
    assert kernels.scan_hypothesis(8, "clique", 2, prune=False)[0] == TRIANGLE_FREE[8]


@pytest.mark.parametrize("impl", _backends(), ids=lambda m: m.__name__)
@pytest.mark.parametrize("mode", list(HYP_COUNTS))
def test_hypothesis_counts(impl, mode):
    counts = [len(kernels.scan_hypothesis(n, *mode, impl=impl)[1]) for n in range(1, 8)]
    assert counts == HYP_COUNTS[mode]


@pytest.mark.parametrize("mode", list(HYP_COUNTS))
def test_pruning_loses_nothing(mode):
    for n in range(1, 7):
        _, pruned = kernels.scan_hypothesis(n, *mode)
        _, full = kernels.scan_hypothesis(n, *mode, prune=False)
        assert pruned == full


@needs_cython
@pytest.mark.parametrize("mode", list(HYP_COUNTS_8))
def test_hypothesis_counts_n8(mode):
    assert len(hypothesis_masks(8, *mode)) == HYP_COUNTS_8[mode]


@needs_cython
@pytest.mark.parametrize("mode", list(HYP_COUNTS_9))
def test_hypothesis_counts_n9(mode):
    assert len(hypothesis_masks(9, *mode)) == HYP_COUNTS_9[mode]


@needs_cython
@pytest.mark.parametrize("n", [6, 7])
@pytest.mark.parametrize("mode", list(HYP_COUNTS))
def test_backends_agree(n, mode):
    py, cy = kernels.backend("python"), kernels.backend("cython")
    assert kernels.scan_hypothesis(n, *mode, impl=py) == kernels.scan_hypothesis(n, *mode, impl=cy)
    for D in range(n):
        assert kernels.scan_tightness(n, *mode, D, impl=py) == kernels.scan_tightness(n, *mode, D, impl=cy)


@pytest.mark.parametrize("plen", [1, 3, 5])
def test_sharding_is_a_partition(plen):
    n = 7
    _, whole = kernels.scan_hypothesis(n, "odd", 2)
    parts = []
    for v in range(1 << plen):
        _, masks = kernels.scan_hypothesis(n, "odd", 2, plen, v)
        assert all(m & ((1 << plen) - 1) == v for m in masks)
        parts.extend(masks)
    assert sorted(parts) == whole


def test_kernel_rejects_large_n():
    with pytest.raises(ValueError):
        kernels.scan_hypothesis(kernels.MAX_N + 1, "clique", 2)


def test_edge_order_is_graph6_column_order():
    assert kernels.edge_order(4) == [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)]


@given(graphs(max_n=10))
def test_mask_roundtrip(G: Graph):
    assert kernels.mask_to_graph(G.n, kernels.graph_to_mask(G)) == G


def test_env_var_forces_pure_python():
    env = dict(os.environ, AESKIT_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", "import aeskit.kernels as k; print(k.BACKEND)"], env=env, capture_output=True, text=True, check=True
    )
    assert out.stdout.strip() == "python"


@given(st.integers(3, 7), st.sampled_from([("clique", 2), ("clique", 3), ("odd", 2)]), st.data())
def test_tightness_witness_is_minimal_mask(n, mode, data):
    D = data.draw(st.integers(0, n - 1))
    best, mask = kernels.scan_tightness(n, *mode, D)
    if best < 0:
        assert mask == 0
        return
    G = kernels.mask_to_graph(n, mask)
    assert max(G.degrees) == D and min(G.degrees) == best
