"""Slow, obviously-correct reference implementations used only by the tests.

Nothing here shares code with the package beyond the Graph value itself.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

import numpy as np


def adjacency(G) -> np.ndarray:
    A = np.zeros((G.n, G.n), dtype=bool)
    for u in range(G.n):
        for v in range(G.n):
            A[u, v] = bool(G.rows[u] >> v & 1)
    return A


def clique_number(G) -> int:
    best = 1 if G.n else 0
    for t in range(2, G.n + 1):
        if any(all(G.has_edge(a, b) for a, b in itertools.combinations(S, 2)) for S in itertools.combinations(range(G.n), t)):
            best = t
        else:
            break
    return best


def odd_girth(G):
    """Least odd L with a closed walk of length L (a shortest odd closed walk is a cycle)."""
    A = adjacency(G).astype(np.int64)
    P = A.copy()
    for L in range(1, G.n + 1):
        if L % 2 == 1 and L >= 3 and np.trace(P) > 0:
            return L
        P = ((P @ A) > 0).astype(np.int64)
    return None


def colourable(G, r: int) -> bool:
    edges = G.edges()
    for col in itertools.product(range(r), repeat=G.n):
        if all(col[u] != col[v] for u, v in edges):
            return True
    return False


def clique_threshold(n, r, Delta):
    # written in the published shape, not the cleared-denominator shape
    return min(Fraction(3 * r - 4, 3 * r - 2) * n - Fraction(Delta, 3 * r - 2), n - Fraction(Delta + 1, r - 1))


def odd_threshold(n, k, Delta):
    return min(Fraction(n, k + 1) - Fraction(Delta, 2 * k + 2), Fraction(n - 1 - Delta, k))


def graph6_encode(G) -> str:
    bits = "".join("1" if G.has_edge(i, j) else "0" for j in range(1, G.n) for i in range(j))
    bits += "0" * (-len(bits) % 6)
    if G.n <= 62:
        head = chr(G.n + 63)
    else:
        s = format(G.n, "018b")
        head = "~" + "".join(chr(int(s[i:i + 6], 2) + 63) for i in range(0, 18, 6))
    return head + "".join(chr(int(bits[i:i + 6], 2) + 63) for i in range(0, len(bits), 6))
