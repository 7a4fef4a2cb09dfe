"""Pure-Python enumeration kernel; reference for and fallback to ``_enum.pyx``.

Labeled graphs on ``n`` vertices are edge masks: bit ``b`` is the ``b``-th
pair of :func:`edge_order` (graph6 column order). The search walks the pairs
in that order, only ever adding an edge when it keeps the graph free, so the
leaves are exactly the free graphs.

family 0 = clique (K_{param+1}-free), family 1 = odd (C_{<=2*param+1}-free).
"""

from __future__ import annotations

import sys

MAX_N = 11


def edge_order(n: int) -> list[tuple[int, int]]:
    return [(i, j) for j in range(1, n) for i in range(j)]


def _hyp(family: int, p: int, n: int, delta: int, Delta: int) -> bool:
    if family == 0 or p == 1:
        r = p if family == 0 else 2
        return (3 * r - 2) * delta + Delta > (3 * r - 4) * n or (r - 1) * delta + Delta >= (r - 1) * n
    return (2 * p + 2) * delta + Delta > 2 * n or p * delta + Delta + 1 > n


class _Scanner:
    def __init__(self, n, family, param, task, target, prefix_len, prefix_value, prune=True):
        if not 1 <= n <= MAX_N:
            raise ValueError(f"kernel supports 1 <= n <= {MAX_N}, got {n}")
        self.n = n
        self.family = family
        self.param = param
        self.task = task
        self.target = target
        self.parts = param if family == 0 else 2
        self.pairs = edge_order(n)
        self.E = len(self.pairs)
        self.prefix_len = min(prefix_len, self.E)
        self.prefix_value = prefix_value
        # rem[b][v]: pairs at positions >= b that touch v
        rem = [[0] * n for _ in range(self.E + 1)]
        for b in range(self.E - 1, -1, -1):
            rem[b] = rem[b + 1][:]
            i, j = self.pairs[b]
            rem[b][i] += 1
            rem[b][j] += 1
        self.rem = rem
        self.col_start = {b for b, (i, j) in enumerate(self.pairs) if i == 0} if prune else set()
        self.adj = [0] * n
        self.deg = [0] * n
        self.mask = 0
        self.free_count = 0
        self.found: list[int] = []
        self.best_delta = -1
        self.best_mask = 0

    def has_clique(self, cand: int, t: int) -> bool:
        if t <= 0:
            return True
        if cand.bit_count() < t:
            return False
        if t == 1:
            return cand != 0
        adj = self.adj
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            if self.has_clique(cand & adj[v], t - 1):
                return True
        return False

    def allowed(self, i: int, j: int) -> bool:
        adj = self.adj
        if self.family == 0:
            return not self.has_clique(adj[i] & adj[j], self.param - 1)
        w = 1 << i
        for step in range(1, 2 * self.param + 1):
            nw = 0
            t = w
            while t:
                low = t & -t
                nw |= adj[low.bit_length() - 1]
                t ^= low
            w = nw
            if not w:
                return True
            if step % 2 == 0 and w >> j & 1:
                return False
        return True

    def colourable(self, cls: list[int], v: int, used: int) -> bool:
        if v == self.n:
            return True
        row = self.adj[v]
        for c in range(min(used + 1, self.parts)):
            if not row & cls[c]:
                cls[c] |= 1 << v
                ok = self.colourable(cls, v + 1, max(used, c + 1))
                cls[c] &= ~(1 << v)
                if ok:
                    return True
        return False

    def leaf(self) -> None:
        self.free_count += 1
        delta, Delta = min(self.deg), max(self.deg)
        if self.task == 0:
            if _hyp(self.family, self.param, self.n, delta, Delta):
                self.found.append(self.mask)
            return
        if Delta != self.target or delta < self.best_delta:
            return
        if delta == self.best_delta and self.mask > self.best_mask:
            return
        if self.colourable([0] * self.parts, 0, 0):
            return
        self.best_delta, self.best_mask = delta, self.mask

    def dfs(self, b: int) -> None:
        if b == self.E:
            self.leaf()
            return
        if b in self.col_start:
            ub = [d + r for d, r in zip(self.deg, self.rem[b])]
            if self.task == 0:
                if not _hyp(self.family, self.param, self.n, min(ub), max(ub)):
                    return
            elif min(ub) < self.best_delta or max(ub) < self.target:
                return
        forced = b < self.prefix_len
        bit = self.prefix_value >> b & 1
        if not forced or not bit:
            self.dfs(b + 1)
        if forced and not bit:
            return
        i, j = self.pairs[b]
        if self.task == 1 and (self.deg[i] >= self.target or self.deg[j] >= self.target):
            return
        if not self.allowed(i, j):
            return
        self.adj[i] |= 1 << j
        self.adj[j] |= 1 << i
        self.deg[i] += 1
        self.deg[j] += 1
        self.mask |= 1 << b
        self.dfs(b + 1)
        self.mask &= ~(1 << b)
        self.deg[i] -= 1
        self.deg[j] -= 1
        self.adj[i] &= ~(1 << j)
        self.adj[j] &= ~(1 << i)


def scan_hypothesis(n: int, family: int, param: int, prefix_len: int = 0, prefix_value: int = 0, prune: bool = True):
    """Free graphs whose (delta, Delta) pass the integer-form hypothesis.

    Returns ``(free_count, masks)`` with masks ascending. With ``prune`` set,
    subtrees whose degree upper bounds already fail the hypothesis are cut and
    ``free_count`` is ``-1``; without it every free graph is visited and counted.
    """
    s = _Scanner(n, family, param, 0, 0, prefix_len, prefix_value, prune)
    _run(s)
    return (-1 if prune else s.free_count), sorted(s.found)


def scan_tightness(n: int, family: int, param: int, Delta: int, prefix_len: int = 0, prefix_value: int = 0):
    """Largest delta over free graphs with max degree exactly ``Delta`` that are
    not colourable with the promised number of classes.

    Returns ``(best_delta, best_mask)`` with ``best_delta = -1`` when no such
    graph exists; ties go to the smallest mask.
    """
    s = _Scanner(n, family, param, 1, Delta, prefix_len, prefix_value)
    _run(s)
    return s.best_delta, s.best_mask


def _run(s: _Scanner) -> None:
    limit = sys.getrecursionlimit()
    if limit < 200:
        sys.setrecursionlimit(200)
    s.dfs(0)
