"""Select the enumeration backend at import time.

The compiled ``_enum`` extension is used when it imports; otherwise the
pure-Python ``_enum_py`` module provides the same functions. Setting
``AESKIT_PURE_PYTHON=1`` forces the fallback.
"""

from __future__ import annotations

import functools
import os

from . import _enum_py
from .graph import Graph

if os.environ.get("AESKIT_PURE_PYTHON"):
    _impl = _enum_py
else:
    try:
        from . import _enum as _impl  # type: ignore[attr-defined]
    except ImportError:
        _impl = _enum_py

BACKEND = "python" if _impl is _enum_py else "cython"
MAX_N = _impl.MAX_N

FAMILY_CODES = {"clique": 0, "odd": 1}


def backend(name: str | None = None):
    """The module implementing the kernel; ``name`` picks one explicitly."""
    if name is None:
        return _impl
    if name == "python":
        return _enum_py
    if name == "cython":
        from . import _enum  # type: ignore[attr-defined]

        return _enum
    raise ValueError(f"unknown backend {name!r}")


@functools.lru_cache(maxsize=None)
def _order(n: int) -> tuple[tuple[int, int], ...]:
    return tuple(_enum_py.edge_order(n))


def edge_order(n: int) -> list[tuple[int, int]]:
    return list(_order(n))


def mask_to_graph(n: int, mask: int) -> Graph:
    rows = [0] * n
    order = _order(n)
    while mask:
        low = mask & -mask
        i, j = order[low.bit_length() - 1]
        rows[i] |= 1 << j
        rows[j] |= 1 << i
        mask ^= low
    return Graph._symmetric(n, tuple(rows))


def graph_to_mask(G: Graph) -> int:
    mask = 0
    for b, (i, j) in enumerate(edge_order(G.n)):
        if G.has_edge(i, j):
            mask |= 1 << b
    return mask


def scan_hypothesis(n, family, param, prefix_len=0, prefix_value=0, prune=True, impl=None):
    return (impl or _impl).scan_hypothesis(n, FAMILY_CODES[family], param, prefix_len, prefix_value, prune)


def scan_tightness(n, family, param, Delta, prefix_len=0, prefix_value=0, impl=None):
    return (impl or _impl).scan_tightness(n, FAMILY_CODES[family], param, Delta, prefix_len, prefix_value)
