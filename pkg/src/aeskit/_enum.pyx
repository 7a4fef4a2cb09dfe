# distutils: language = c++
# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernel. Same contract as ``_enum_py``; see there."""

from libc.stdint cimport uint64_t
from libcpp.vector cimport vector

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

cdef enum:
    CMAX_N = 11
    CMAX_E = 55

MAX_N = CMAX_N


def edge_order(int n):
    return [(i, j) for j in range(1, n) for i in range(j)]


cdef inline bint _hyp(int family, int p, int n, int delta, int Delta) nogil:
    cdef int r
    if family == 0 or p == 1:
        r = p if family == 0 else 2
        return (3 * r - 2) * delta + Delta > (3 * r - 4) * n or (r - 1) * delta + Delta >= (r - 1) * n
    return (2 * p + 2) * delta + Delta > 2 * n or p * delta + Delta + 1 > n


cdef class _Scanner:
    cdef int n, E, family, param, task, target, parts, prefix_len
    cdef uint64_t prefix_value
    cdef int eu[CMAX_E]
    cdef int ev[CMAX_E]
    cdef bint col_start[CMAX_E + 1]
    cdef int rem[CMAX_E + 1][CMAX_N]
    cdef uint64_t adj[CMAX_N]
    cdef int deg[CMAX_N]
    cdef uint64_t cls[CMAX_N]
    cdef uint64_t mask
    cdef long long free_count
    cdef int best_delta
    cdef uint64_t best_mask
    cdef vector[uint64_t] found

    def __init__(self, int n, int family, int param, int task, int target,
                 int prefix_len, uint64_t prefix_value, bint prune=True):
        cdef int b, i, j, v
        if n < 1 or n > CMAX_N:
            raise ValueError(f"kernel supports 1 <= n <= {CMAX_N}, got {n}")
        self.n = n
        self.family = family
        self.param = param
        self.task = task
        self.target = target
        self.parts = param if family == 0 else 2
        self.E = n * (n - 1) // 2
        self.prefix_len = min(prefix_len, self.E)
        self.prefix_value = prefix_value
        b = 0
        for j in range(1, n):
            for i in range(j):
                self.eu[b] = i
                self.ev[b] = j
                self.col_start[b] = prune and i == 0
                b += 1
        self.col_start[self.E] = False
        for v in range(n):
            self.rem[self.E][v] = 0
            self.adj[v] = 0
            self.deg[v] = 0
        for b in range(self.E - 1, -1, -1):
            for v in range(n):
                self.rem[b][v] = self.rem[b + 1][v]
            self.rem[b][self.eu[b]] += 1
            self.rem[b][self.ev[b]] += 1
        self.mask = 0
        self.free_count = 0
        self.best_delta = -1
        self.best_mask = 0
        self.found.clear()

    cdef bint has_clique(self, uint64_t cand, int t) noexcept nogil:
        cdef int v
        if t <= 0:
            return True
        if __builtin_popcountll(cand) < t:
            return False
        if t == 1:
            return cand != 0
        while cand:
            v = __builtin_ctzll(cand)
            cand &= cand - 1
            if self.has_clique(cand & self.adj[v], t - 1):
                return True
        return False

    cdef bint allowed(self, int i, int j) noexcept nogil:
        cdef uint64_t w, nw, t
        cdef int step
        if self.family == 0:
            return not self.has_clique(self.adj[i] & self.adj[j], self.param - 1)
        w = (<uint64_t>1) << i
        for step in range(1, 2 * self.param + 1):
            nw = 0
            t = w
            while t:
                nw |= self.adj[__builtin_ctzll(t)]
                t &= t - 1
            w = nw
            if w == 0:
                return True
            if step % 2 == 0 and (w >> j) & 1:
                return False
        return True

    cdef bint colourable(self, int v, int used) noexcept nogil:
        cdef int c, top
        cdef uint64_t row, bit
        cdef bint ok
        if v == self.n:
            return True
        row = self.adj[v]
        bit = (<uint64_t>1) << v
        top = used + 1 if used + 1 < self.parts else self.parts
        for c in range(top):
            if not (row & self.cls[c]):
                self.cls[c] |= bit
                ok = self.colourable(v + 1, used if used > c + 1 else c + 1)
                self.cls[c] &= ~bit
                if ok:
                    return True
        return False

    cdef void leaf(self) noexcept nogil:
        cdef int v, delta = 1 << 30, Delta = 0
        self.free_count += 1
        for v in range(self.n):
            if self.deg[v] < delta:
                delta = self.deg[v]
            if self.deg[v] > Delta:
                Delta = self.deg[v]
        if self.task == 0:
            if _hyp(self.family, self.param, self.n, delta, Delta):
                self.found.push_back(self.mask)
            return
        if Delta != self.target or delta < self.best_delta:
            return
        if delta == self.best_delta and self.mask > self.best_mask:
            return
        for v in range(self.parts):
            self.cls[v] = 0
        if self.colourable(0, 0):
            return
        self.best_delta = delta
        self.best_mask = self.mask

    cdef void dfs(self, int b) noexcept nogil:
        cdef int v, u, lo, hi, i, j
        cdef bint forced, bit
        if b == self.E:
            self.leaf()
            return
        if self.col_start[b]:
            lo = 1 << 30
            hi = 0
            for v in range(self.n):
                u = self.deg[v] + self.rem[b][v]
                if u < lo:
                    lo = u
                if u > hi:
                    hi = u
            if self.task == 0:
                if not _hyp(self.family, self.param, self.n, lo, hi):
                    return
            elif lo < self.best_delta or hi < self.target:
                return
        forced = b < self.prefix_len
        bit = (self.prefix_value >> b) & 1
        if not forced or not bit:
            self.dfs(b + 1)
        if forced and not bit:
            return
        i = self.eu[b]
        j = self.ev[b]
        if self.task == 1 and (self.deg[i] >= self.target or self.deg[j] >= self.target):
            return
        if not self.allowed(i, j):
            return
        self.adj[i] |= (<uint64_t>1) << j
        self.adj[j] |= (<uint64_t>1) << i
        self.deg[i] += 1
        self.deg[j] += 1
        self.mask |= (<uint64_t>1) << b
        self.dfs(b + 1)
        self.mask &= ~((<uint64_t>1) << b)
        self.deg[i] -= 1
        self.deg[j] -= 1
        self.adj[i] &= ~((<uint64_t>1) << j)
        self.adj[j] &= ~((<uint64_t>1) << i)

    def run(self):
        with nogil:
            self.dfs(0)

    def masks(self):
        return sorted(self.found)


def scan_hypothesis(int n, int family, int param, int prefix_len=0, prefix_value=0, bint prune=True):
    cdef _Scanner s = _Scanner(n, family, param, 0, 0, prefix_len, prefix_value, prune)
    s.run()
    return (-1 if prune else s.free_count), s.masks()


def scan_tightness(int n, int family, int param, int Delta, int prefix_len=0, prefix_value=0):
    cdef _Scanner s = _Scanner(n, family, param, 1, Delta, prefix_len, prefix_value, True)
    s.run()
    return s.best_delta, s.best_mask
