"""Brute-force ground truth on small graphs.

The enumeration kernels (:mod:`aeskit.kernels`) only propose candidate edge
masks. Everything reported here is re-derived from the decoded graph through
:mod:`aeskit.detect`, :mod:`aeskit.thresholds` and :mod:`aeskit.partitioner`,
so a kernel bug can hide a graph but never invent a verdict.
"""

from __future__ import annotations

import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, floor
from typing import Optional

import numpy as np

from . import kernels
from .constructions import blowup, pattern_odd_cycle
from .detect import Witness, cycle_adjacency_profile, find_clique, is_c_le_free, odd_girth, r_partition_exact
from .errors import ParameterError
from .graph import Graph, build_graph, degree_profile, validate_partition
from .partitioner import extract_bipartition, extract_r_partition
from .thresholds import HypothesisVerdict, Mode, classical_bound, hypothesis, threshold

DEFAULT_CAP = 7
DEEP_CAP = 8


def is_free(G: Graph, mode: Mode) -> Optional[Witness] | bool:
    """``True`` when ``G`` is free for ``mode``, else the offending witness."""
    if mode.family == "clique":
        w = find_clique(G, mode.param + 1)
    else:
        g, w = odd_girth(G)
        if g.value is None or g.value >= 2 * mode.param + 3:
            w = None
    return True if w is None else w


@dataclass
class Counterexample:
    n: int
    mask: int
    edges: list[tuple[int, int]]
    verdict: HypothesisVerdict
    reason: str

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "mask": self.mask,
            "edges": [list(e) for e in self.edges],
            "verdict": self.verdict.to_dict(),
            "reason": self.reason,
        }


@dataclass
class LevelReport:
    n: int
    scanned: int
    hypothesis_count: int
    counterexamples: list[Counterexample] = field(default_factory=list)
    constructive_misses: int = 0

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "scanned": self.scanned,
            "hypothesis_count": self.hypothesis_count,
            "counterexamples": [c.to_dict() for c in self.counterexamples],
            "constructive_misses": self.constructive_misses,
        }


@dataclass
class VerifyReport:
    mode: Mode
    n_max: int
    levels: list[LevelReport]
    wall_time: float
    jobs: int
    backend: str

    @property
    def scanned(self) -> int:
        return sum(lv.scanned for lv in self.levels)

    @property
    def hypothesis_count(self) -> int:
        return sum(lv.hypothesis_count for lv in self.levels)

    @property
    def counterexamples(self) -> list[Counterexample]:
        return [c for lv in self.levels for c in lv.counterexamples]

    def to_dict(self, timing: bool = True) -> dict:
        out = {
            "mode": {"family": self.mode.family, "param": self.mode.param},
            "n_range": [1, self.n_max],
            "scanned": self.scanned,
            "hypothesis_count": self.hypothesis_count,
            "counterexample_count": len(self.counterexamples),
            "levels": [lv.to_dict() for lv in self.levels],
        }
        if timing:
            out["wall_time"] = round(self.wall_time, 3)
            out["jobs"] = self.jobs
            out["backend"] = self.backend
        return out


def _shard_bits(n: int, jobs: int) -> int:
    if jobs <= 1:
        return 0
    E = n * (n - 1) // 2
    # a few shards per worker evens out the very uneven subtrees
    return min(E, max(1, (4 * jobs - 1).bit_length()))


def _scan_shard(args) -> list[int]:
    n, family, param, plen, pval = args
    _, masks = kernels.scan_hypothesis(n, family, param, plen, pval)
    return masks


def candidate_masks(n: int, mode: Mode, jobs: int = 1, pool: ProcessPoolExecutor | None = None) -> list[int]:
    """Edge masks of free graphs on ``n`` vertices passing the integer-form hypothesis.

    The mask space is split on a fixed-width prefix of edge bits; shards are
    merged in prefix order and sorted, so the output does not depend on ``jobs``.
    """
    plen = _shard_bits(n, jobs)
    tasks = [(n, mode.family, mode.param, plen, v) for v in range(1 << plen)]
    if pool is None or plen == 0:
        parts = [_scan_shard(t) for t in tasks]
    else:
        parts = list(pool.map(_scan_shard, tasks))
    return sorted(m for part in parts for m in part)


def _check_candidate(n: int, mask: int, mode: Mode) -> tuple[Optional[Counterexample], bool]:
    """Independent re-check of one kernel candidate. Returns (counterexample, constructive_miss)."""
    G = kernels.mask_to_graph(n, mask)
    delta, Delta = degree_profile(G)
    verdict = hypothesis(n, mode, delta, Delta)

    def cx(reason):
        return Counterexample(n, mask, G.edges(), verdict, reason)

    free = is_free(G, mode)
    if free is not True:
        return cx(f"kernel proposed a non-free graph: {free.kind} {list(free.vertices)}"), False
    if not verdict.holds:
        return cx("kernel proposed a graph failing the hypothesis"), False
    P = r_partition_exact(G, mode.parts)
    if P is None or not validate_partition(G, P, mode.parts):
        return cx(f"free, hypothesis holds, not {mode.parts}-partite"), False

    if mode.family == "clique":
        out = extract_r_partition(G, mode.param)
        if not out.ok:
            return cx(f"constructive partitioner stopped at: {out.violation.step}"), False
        if not validate_partition(G, out.partition, mode.param):
            return cx("constructive partitioner returned an invalid partition"), False
        return None, False
    # Odd family: the constructive route is the triangle-free bipartition, whose
    # own degree condition need not hold here; a miss is counted but is not a counterexample.
    out = extract_bipartition(G)
    if out.ok and not validate_partition(G, out.partition, 2):
        return cx("constructive bipartition returned an invalid partition"), False
    return None, not out.ok


def exhaustive_verify(n_max: int, mode: Mode, jobs: int = 1, deep: bool = False) -> VerifyReport:
    """Check the degree bound for ``mode`` on every labeled graph with at most ``n_max`` vertices."""
    cap = DEEP_CAP if deep else DEFAULT_CAP
    if n_max > cap:
        hint = "" if deep else " (pass deep=True to allow 8)"
        raise ParameterError(f"exhaustive verification is capped at n={cap}{hint}; use fuzzing beyond that")
    if n_max < 1:
        raise ParameterError(f"n_max must be >= 1, got {n_max}")
    if mode.param < (2 if mode.family == "clique" else 1):
        raise ParameterError(f"invalid parameter for {mode.family}: {mode.param}")
    if mode.family == "odd" and mode.param == 1:
        mode = Mode.clique(2)

    t0 = time.perf_counter()
    levels = []
    pool = ProcessPoolExecutor(max_workers=jobs) if jobs > 1 else None
    try:
        for n in range(1, n_max + 1):
            masks = candidate_masks(n, mode, jobs, pool)
            lv = LevelReport(n, 1 << comb(n, 2), len(masks))
            for m in masks:
                c, miss = _check_candidate(n, m, mode)
                if c is not None:
                    lv.counterexamples.append(c)
                lv.constructive_misses += miss
            levels.append(lv)
    finally:
        if pool is not None:
            pool.shutdown()
    return VerifyReport(mode, n_max, levels, time.perf_counter() - t0, jobs, kernels.BACKEND)


def default_jobs() -> int:
    return len(os.sched_getaffinity(0)) if hasattr(os, "sched_getaffinity") else (os.cpu_count() or 1)


@dataclass
class TightnessResult:
    n: int
    mode: Mode
    Delta: int
    max_delta: Optional[int]
    witness: Optional[Graph]
    threshold: Fraction

    @property
    def empty(self) -> bool:
        return self.max_delta is None

    @property
    def floor_threshold(self) -> int:
        return floor(self.threshold)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "mode": {"family": self.mode.family, "param": self.mode.param},
            "Delta": self.Delta,
            "empty": self.empty,
            "max_delta": self.max_delta,
            "witness_edges": None if self.witness is None else [list(e) for e in self.witness.edges()],
            "threshold": str(self.threshold),
            "floor_threshold": self.floor_threshold,
        }


def tightness_oracle(n: int, mode: Mode, Delta: int) -> TightnessResult:
    """Largest minimum degree of a free, non-partite graph on ``n`` vertices with max degree ``Delta``."""
    if n > DEEP_CAP:
        raise ParameterError(f"tightness oracle is exhaustive and capped at n={DEEP_CAP}")
    if not 0 <= Delta <= n - 1:
        raise ParameterError(f"Delta={Delta} outside 0..{n - 1}")
    thr = threshold(n, mode, Delta)
    best, mask = kernels.scan_tightness(n, mode.family, mode.param, Delta)
    if best < 0:
        return TightnessResult(n, mode, Delta, None, None, thr)
    G = kernels.mask_to_graph(n, mask)
    delta, D = degree_profile(G)
    if (delta, D) != (best, Delta):
        raise AssertionError(f"kernel witness has profile {(delta, D)}, expected {(best, Delta)}")
    if is_free(G, mode) is not True:
        raise AssertionError("kernel witness is not free")
    if r_partition_exact(G, mode.parts) is not None:
        raise AssertionError(f"kernel witness is {mode.parts}-partite")
    return TightnessResult(n, mode, Delta, best, G, thr)


# ---- integer-grid sweeps -------------------------------------------------


def _integer_form_grid(family: str, p: int, n: int, delta: np.ndarray, Delta: np.ndarray) -> np.ndarray:
    if family == "clique":
        return ((3 * p - 2) * delta + Delta > (3 * p - 4) * n) | ((p - 1) * delta + Delta >= (p - 1) * n)
    return ((2 * p + 2) * delta + Delta > 2 * n) | (p * delta + Delta + 1 > n)


def _params(family: str, param_max: int) -> range:
    # odd k = 1 reads the two-branch formula directly; it coincides with clique r = 2
    return range(2 if family == "clique" else 1, param_max + 1)


@dataclass
class SweepReport:
    family: str
    n_max: int
    param_max: int
    tuples: int
    violations: list[dict]
    wall_time: float

    def to_dict(self, timing: bool = True) -> dict:
        out = {
            "family": self.family,
            "n_max": self.n_max,
            "param_max": self.param_max,
            "tuples": self.tuples,
            "violation_count": len(self.violations),
            "violations": self.violations[:50],
        }
        if timing:
            out["wall_time"] = round(self.wall_time, 3)
        return out


def _grid(n: int):
    Delta, delta = np.triu_indices(n, 0)[::-1]
    return delta.astype(np.int64), Delta.astype(np.int64)


def form_agreement_sweep(n_max: int, param_max: int, family: str) -> SweepReport:
    """Rational threshold vs. integer inequality forms on every (n, p, delta <= Delta <= n-1).

    Per (n, p, Delta) the rational route gives the cutoff ``floor(threshold) + 1``
    (the least integer delta exceeding it); the integer forms are evaluated on
    the whole delta column and must switch on exactly at that cutoff.
    """
    t0 = time.perf_counter()
    violations = []
    tuples = 0
    for p in _params(family, param_max):
        mode = Mode(family, p)
        for n in range(1, n_max + 1):
            delta, Delta = _grid(n)
            tuples += delta.size
            int_ok = _integer_form_grid(family, p, n, delta, Delta)
            cutoff = np.array([floor(threshold(n, mode, D)) + 1 for D in range(n)], dtype=np.int64)
            rat_ok = delta >= cutoff[Delta]
            bad = np.nonzero(int_ok != rat_ok)[0]
            for i in bad[:10]:
                violations.append({"n": n, "param": p, "delta": int(delta[i]), "Delta": int(Delta[i])})
    return SweepReport(family, n_max, param_max, tuples, violations, time.perf_counter() - t0)


def corollary_sweep(n_max: int, param_max: int, family: str) -> SweepReport:
    """The classical bound implies the max-degree hypothesis on every integer tuple.

    Two routes must agree: a numpy pass over every (delta, Delta) with the
    integer forms, and an exact rational pass per (n, p, Delta) testing the
    least integer above the classical bound against the threshold.
    """
    t0 = time.perf_counter()
    violations = []
    tuples = 0
    for p in _params(family, param_max):
        mode = Mode(family, p)
        for n in range(1, n_max + 1):
            delta, Delta = _grid(n)
            tuples += delta.size
            if family == "clique":
                above = (3 * p - 1) * delta > (3 * p - 4) * n
            else:
                above = (2 * p + 3) * delta > 2 * n
            grid_bad = above & ~_integer_form_grid(family, p, n, delta, Delta)

            d0 = floor(classical_bound(n, mode)) + 1
            exact_bad = np.array([d0 <= D and d0 <= threshold(n, mode, D) for D in range(n)])
            # a violation at some delta forces one at d0 (the hypothesis is monotone in delta)
            col_bad = np.zeros(n, dtype=bool)
            np.logical_or.at(col_bad, Delta[grid_bad], True)
            if not np.array_equal(col_bad, exact_bad):
                violations.append({"n": n, "param": p, "route_mismatch": True})
            for i in np.nonzero(grid_bad)[0][:10]:
                violations.append({"n": n, "param": p, "delta": int(delta[i]), "Delta": int(Delta[i])})
    return SweepReport(family, n_max, param_max, tuples, violations, time.perf_counter() - t0)


# ---- structural fuzzing ----------------------------------------------------


@dataclass
class FuzzReport:
    samples: int
    n: int
    k: int
    seed: int
    skipped: int
    profiles: dict
    violations: list[dict]

    def to_dict(self) -> dict:
        return {
            "samples": self.samples,
            "n": self.n,
            "k": self.k,
            "seed": self.seed,
            "skipped_no_odd_cycle": self.skipped,
            "profiles": dict(self.profiles),
            "violation_count": len(self.violations),
            "violations": self.violations[:20],
        }


def random_odd_girth_graph(rng: random.Random, n: int, k: int, noise: int = 6) -> Graph:
    """Random graph with no odd cycle shorter than ``2k+3``.

    A random subgraph of a blowup of ``C_{2m+1}`` (``m > k``) on at most ``n``
    vertices, padded to ``n`` and then given random extra edges, each kept only
    if the graph stays free.
    """
    m_max = (n - 1) // 2
    if m_max <= k:
        raise ParameterError(f"n={n} too small for an odd cycle longer than {2 * k + 1}")
    m = rng.randint(k + 1, m_max)
    L = 2 * m + 1
    sizes = [1] * L
    for _ in range(rng.randint(0, n - L)):
        sizes[rng.randrange(L)] += 1
    base = blowup(pattern_odd_cycle(m - 1), sizes)
    keep = rng.uniform(0.7, 1.0)
    edges = [e for e in base.edges() if rng.random() < keep]
    perm = list(range(n))
    rng.shuffle(perm)
    b = build_graph(n, [(perm[u], perm[v]) for u, v in edges]).builder()
    for _ in range(noise):
        u, v = rng.sample(range(n), 2)
        if b.has_edge(u, v):
            continue
        b.add_edge(u, v)
        if not is_c_le_free(b.freeze(), k):
            b.remove_edge(u, v)
    return b.freeze()


def fact31_fuzz(samples: int, n: int, k: int, seed: int = 0) -> FuzzReport:
    """Profile every outside vertex against a shortest odd cycle of random free graphs."""
    rng = random.Random(seed)
    skipped = 0
    profiles = {"empty": 0, "single": 0, "pair": 0, "violation": 0}
    violations = []
    for s in range(samples):
        G = random_odd_girth_graph(rng, n, k)
        g, C = odd_girth(G)
        if C is None:
            skipped += 1
            continue
        on = set(C.vertices)
        for u in range(G.n):
            if u in on:
                continue
            prof = cycle_adjacency_profile(G, C, u, g)
            profiles[prof.kind] += 1
            if prof.is_violation:
                violations.append({"sample": s, "edges": [list(e) for e in G.edges()], "cycle": list(C.vertices), "u": u})
    return FuzzReport(samples, n, k, seed, skipped, profiles, violations)
