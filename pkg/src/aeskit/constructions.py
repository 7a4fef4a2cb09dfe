"""Extremal blowup families showing the degree thresholds are tight.

Two patterns are used: ``W_r`` (a 5-cycle joined to ``K_{r-2}``) for the
clique family and the odd cycle ``C_{2k+3}`` for the odd-girth family. Each
comes in a low-Delta and a high-Delta regime. Real part sizes are exact
fractions; :func:`apportion` turns them into integers summing to ``n``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Literal, Optional, Sequence

from .detect import Witness, find_clique, odd_girth, r_partition_exact
from .errors import InfeasibleError, ParameterError, SpecInconsistencyError
from .graph import Graph, build_graph, degree_profile, induced
from .thresholds import Mode, threshold

Regime = Literal["low-Delta", "high-Delta"]


@dataclass(frozen=True)
class Pattern:
    name: str
    base: Graph

    @property
    def labels(self) -> tuple[int, ...]:
        """1-based class names, matching the vertex numbering of the formulas."""
        return tuple(range(1, self.base.n + 1))


def pattern_w(r: int) -> Pattern:
    """``W_r``: 5-cycle on classes 1..5 joined to a clique on classes 6..r+3."""
    if r < 2:
        raise ParameterError(f"r must be >= 2, got {r}")
    edges = [(i, (i + 1) % 5) for i in range(5)]
    hub = range(5, r + 3)
    edges += [(i, j) for i in range(5) for j in hub]
    edges += [(i, j) for i in hub for j in hub if i < j]
    return Pattern(f"W_{r}", build_graph(r + 3, edges))


def pattern_odd_cycle(k: int) -> Pattern:
    if k < 1:
        raise ParameterError(f"k must be >= 1, got {k}")
    L = 2 * k + 3
    return Pattern(f"C_{L}", build_graph(L, [(i, (i + 1) % L) for i in range(L)]))


def class_ranges(sizes: Sequence[int]) -> list[range]:
    out, start = [], 0
    for s in sizes:
        out.append(range(start, start + s))
        start += s
    return out


def blowup(P: Pattern | Graph, sizes: Sequence[int]) -> Graph:
    """Replace pattern vertex ``i`` by an independent class of ``sizes[i]`` vertices.

    Classes occupy consecutive vertex ranges in pattern order (see
    :func:`class_ranges`); zero-size classes simply vanish.
    """
    base = P.base if isinstance(P, Pattern) else P
    if len(sizes) != base.n:
        raise ParameterError(f"pattern has {base.n} vertices but {len(sizes)} sizes were given")
    if any(s < 0 for s in sizes):
        raise ParameterError(f"sizes must be nonnegative: {list(sizes)}")
    n = sum(sizes)
    if n < 1:
        raise ParameterError("blowup would have no vertices")
    ranges = class_ranges(sizes)
    cmask = [((1 << s) - 1) << rg.start for s, rg in zip(sizes, ranges)]
    rows = [0] * n
    for i, rg in enumerate(ranges):
        row = 0
        for j in range(base.n):
            if base.has_edge(i, j):
                row |= cmask[j]
        for v in rg:
            rows[v] = row
    return Graph(n, tuple(rows))


def apportion(real_sizes: Sequence[Fraction], n: int) -> list[int]:
    """Largest-remainder rounding of ``real_sizes`` to integers summing to ``n``.

    Floors first; the residual goes one unit at a time to the largest
    fractional remainders, ties to the lowest index. A residual larger than
    the class count wraps around in the same order; a negative residual takes
    units back from the smallest remainders (ties to the highest index).
    """
    real = [Fraction(x) for x in real_sizes]
    if any(x < 0 for x in real):
        raise ParameterError(f"real sizes must be nonnegative: {[str(x) for x in real]}")
    total = sum(real, Fraction(0))
    if abs(total - n) > len(real):
        raise SpecInconsistencyError(
            f"real sizes sum to {total}, which is more than {len(real)} away from n={n}", total, n
        )
    floors = [math.floor(x) for x in real]
    residual = n - sum(floors)
    if residual >= 0:
        order = sorted(range(len(real)), key=lambda i: (-(real[i] - floors[i]), i))
        for t in range(residual):
            floors[order[t % len(order)]] += 1
    else:
        order = sorted(range(len(real)), key=lambda i: (real[i] - floors[i], -i))
        t = 0
        while residual < 0:
            i = order[t % len(order)]
            if floors[i] > 0:
                floors[i] -= 1
                residual += 1
            t += 1
    return floors


@dataclass(frozen=True)
class BlowupSpec:
    """A fully determined member of one extremal family."""

    mode: Mode
    pattern: Pattern
    regime: Regime
    alpha_or_beta: Fraction
    real_sizes: tuple[Fraction, ...]
    sizes: tuple[int, ...]
    n: int
    Delta: int

    @property
    def real_sum(self) -> Fraction:
        return sum(self.real_sizes, Fraction(0))

    def graph(self) -> Graph:
        return blowup(self.pattern, self.sizes)

    def to_dict(self) -> dict:
        return {
            "family": self.mode.family,
            "param": self.mode.param,
            "pattern": self.pattern.name,
            "regime": self.regime,
            "alpha_or_beta": str(self.alpha_or_beta),
            "real_sizes": [str(x) for x in self.real_sizes],
            "sizes": list(self.sizes),
            "n": self.n,
            "Delta": self.Delta,
        }


def _require_nonnegative(real: Sequence[Fraction], names: Sequence[str]) -> None:
    for x, name in zip(real, names):
        if x < 0:
            raise InfeasibleError(f"part size {name} = {x} is negative", f"{name} >= 0")


def clique_extremal_spec(n: int, r: int, Delta: int) -> BlowupSpec:
    if r < 2:
        raise ParameterError(f"r must be >= 2, got {r}")
    if not 0 <= Delta <= n - 1:
        raise InfeasibleError(f"Delta={Delta} outside 0..{n - 1}", "0 <= Delta <= n-1")
    d = Fraction(Delta, n)
    low_floor = Fraction(3 * r - 4, 3 * r - 1)
    if d < low_floor:
        raise InfeasibleError(
            f"Delta={Delta} is below (3r-4)n/(3r-1) = {low_floor * n}", "Delta >= (3r-4)n/(3r-1)"
        )
    names = [f"x{i}" for i in range(1, r + 4)]
    if d < Fraction(2 * r - 2, 2 * r - 1):
        regime: Regime = "low-Delta"
        a = d - low_floor
        big = (Fraction(1, 3 * r - 1) + r * a / (3 * r - 2)) * n
        small = (Fraction(1, 3 * r - 1) - (2 * r - 1) * a / (3 * r - 2)) * n
        hub = (Fraction(3, 3 * r - 1) + a / (3 * r - 2)) * n
        real = [big, big, small, small, big] + [hub] * (r - 2)
    else:
        regime = "high-Delta"
        a = d - Fraction(2 * r - 2, 2 * r - 1)
        y1 = (Fraction(1, 2 * r - 1) - a) * n - 2
        y2 = (Fraction(1, 2 * r - 1) + a / (2 * r - 2)) * n
        hub = (Fraction(2, 2 * r - 1) + a / (r - 1)) * n
        real = [y1, y2, Fraction(1), Fraction(1), y2] + [hub] * (r - 2)
        names = [f"y{i}" for i in range(1, r + 4)]
        if y1 < 1:
            raise InfeasibleError(f"y1 = {y1} < 1 at Delta={Delta}", "y1 >= 1")
    _require_nonnegative(real, names)
    sizes = apportion(real, n)
    return BlowupSpec(Mode.clique(r), pattern_w(r), regime, a, tuple(real), tuple(sizes), n, Delta)


def odd_extremal_spec(n: int, k: int, Delta: int) -> BlowupSpec:
    """Blowup of ``C_{2k+3}``. The high-Delta sizes follow the published
    formulas verbatim; :func:`audit_construction` reports where they fall short."""
    if k < 1:
        raise ParameterError(f"k must be >= 1, got {k}")
    if k == 1:
        # C_5 = W_2: the triangle case, whose high-Delta formulas are well defined
        return replace(clique_extremal_spec(n, 2, Delta), mode=Mode.odd(1))
    if not 0 <= Delta <= n - 1:
        raise InfeasibleError(f"Delta={Delta} outside 0..{n - 1}", "0 <= Delta <= n-1")
    L = 2 * k + 3
    d = Fraction(Delta, n)
    if d < Fraction(2, L):
        raise InfeasibleError(f"Delta={Delta} is below 2n/(2k+3) = {Fraction(2 * n, L)}", "Delta >= 2n/(2k+3)")
    if d < Fraction(2, k + 2):
        regime: Regime = "low-Delta"
        a = Fraction(k + 2, 2) * (d - Fraction(2, L))
        up = (Fraction(1, L) + a / (k + 2)) * n
        down = (Fraction(1, L) - a / (k + 1)) * n
        real = [up if i % 4 in (1, 2) else down for i in range(1, L + 1)]
        names = [f"x{i}" for i in range(1, L + 1)]
    else:
        regime = "high-Delta"
        a = d - Fraction(2, k + 2)
        outer = (Fraction(1, k + 2) + a / 2) * n
        long_k = (Fraction(k, k * (k + 2)) - a / k) * n - Fraction(2 * k + 1, k)
        one = Fraction(1)
        real = [outer, one, outer]
        if k % 2 == 0:
            real += [long_k if i % 4 in (1, 2) else one for i in range(4, L + 1)]
        else:
            real[1] = long_k
            long_odd = (Fraction(k, (k - 1) * (k + 2)) - a / (k - 1)) * n - Fraction(2 * k, k - 1)
            real += [one if i % 4 in (0, 1) else long_odd for i in range(4, L + 1)]
        names = [f"y{i}" for i in range(1, L + 1)]
    _require_nonnegative(real, names)
    sizes = apportion(real, n)
    return BlowupSpec(Mode.odd(k), pattern_odd_cycle(k), regime, a, tuple(real), tuple(sizes), n, Delta)


def extremal_spec(n: int, mode: Mode, Delta: int) -> BlowupSpec:
    if mode.family == "clique":
        return clique_extremal_spec(n, mode.param, Delta)
    return odd_extremal_spec(n, mode.param, Delta)


@dataclass
class AuditReport:
    """Realized parameters of a construction, all recomputed from the graph."""

    spec: BlowupSpec
    n: int
    delta: int
    Delta: int
    free: bool
    witness: Optional[Witness]
    partite: bool
    partite_pattern: bool
    threshold: Fraction
    gap: Fraction
    Delta_deviation: int
    real_sum: Fraction
    flags: list[str] = field(default_factory=list)

    @property
    def tight(self) -> bool:
        return self.free and not self.partite and self.gap == 0

    def to_dict(self) -> dict:
        return {
            "spec": self.spec.to_dict(),
            "n": self.n,
            "delta": self.delta,
            "Delta": self.Delta,
            "free": self.free,
            "witness": None if self.witness is None else {"kind": self.witness.kind, "vertices": list(self.witness.vertices)},
            "partite": self.partite,
            "partite_pattern": self.partite_pattern,
            "threshold": str(self.threshold),
            "gap": str(self.gap),
            "Delta_deviation": self.Delta_deviation,
            "real_sum": str(self.real_sum),
            "flags": list(self.flags),
        }


def audit_construction(spec: BlowupSpec) -> AuditReport:
    G = spec.graph()
    mode = spec.mode
    delta, Delta = degree_profile(G)
    flags = []

    if mode.family == "clique":
        witness = find_clique(G, mode.param + 1)
        free = witness is None
    else:
        g, cyc = odd_girth(G)
        free = g.value is None or g.value >= 2 * mode.param + 3
        witness = None if free else cyc

    partite = r_partition_exact(G, mode.parts) is not None
    kept = [i for i, s in enumerate(spec.sizes) if s > 0]
    core, _ = induced(spec.pattern.base, kept)
    partite_pattern = r_partition_exact(core, mode.parts) is not None
    if partite != partite_pattern:
        flags.append("colourability of realized graph disagrees with its pattern")
    if len(kept) < spec.pattern.base.n:
        flags.append(f"{spec.pattern.base.n - len(kept)} pattern classes are empty")

    thr = threshold(G.n, mode, Delta)
    gap = thr - delta
    real_sum = spec.real_sum
    if real_sum != spec.n:
        flags.append(f"real part sizes sum to {real_sum}, not n={spec.n}")
    if not free:
        flags.append("realized graph is not free")
    if partite:
        flags.append(f"realized graph is {mode.parts}-partite")
    if gap < 0:
        flags.append(f"delta={delta} exceeds the threshold {thr}")
    elif gap > mode.param + 2:
        flags.append(f"delta={delta} is {gap} below the threshold {thr}")
    return AuditReport(
        spec=spec,
        n=G.n,
        delta=delta,
        Delta=Delta,
        free=free,
        witness=witness,
        partite=partite,
        partite_pattern=partite_pattern,
        threshold=thr,
        gap=gap,
        Delta_deviation=Delta - spec.Delta,
        real_sum=real_sum,
        flags=flags,
    )
