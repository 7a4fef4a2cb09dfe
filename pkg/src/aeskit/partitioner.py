"""Constructive r-partitions that follow an induction on r.

``extract_r_partition`` never returns an invalid partition: either it hands
back classes that :func:`~aeskit.graph.validate_partition` accepts, or it
returns a :class:`Violation` naming the step that got stuck together with the
leftover vertex set. When the degree hypothesis holds the procedure is
guaranteed to finish, so a violation under a true hypothesis would refute the
degree bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .detect import Witness, clique_in_mask, find_clique
from .errors import HypothesisError, ParameterError, WitnessError
from .graph import Graph, Partition, degree_profile, from_mask, induced, iter_bits, lowest, validate_partition
from .thresholds import HypothesisVerdict, clique_hypothesis


@dataclass(frozen=True)
class Violation:
    step: str
    leftover: frozenset[int]
    verdict: HypothesisVerdict
    detail: str = ""
    witness: Optional[Witness] = None

    def to_dict(self) -> dict:
        return {
            "step": self.step,
            "leftover": sorted(self.leftover),
            "verdict": self.verdict.to_dict(),
            "detail": self.detail,
            "witness": None if self.witness is None else list(self.witness.vertices),
        }


@dataclass(frozen=True)
class PartitionOutcome:
    partition: Optional[Partition] = None
    violation: Optional[Violation] = None

    @property
    def ok(self) -> bool:
        return self.partition is not None


def _verdict(G: Graph, r: int) -> HypothesisVerdict:
    delta, Delta = degree_profile(G)
    return clique_hypothesis(G.n, r, delta, Delta)


def _require_free(G: Graph, r: int) -> None:
    w = find_clique(G, r + 1)
    if w is not None:
        raise WitnessError(f"graph contains K_{r + 1} on {list(w.vertices)}", w)


def maximal_completion(G: Graph, r: int) -> Graph:
    """Add non-edges in lexicographic order whenever that keeps the graph K_{r+1}-free.

    A non-edge ``uv`` is added iff the common neighbourhood of ``u`` and ``v``
    holds no ``K_{r-1}``. Rejections are permanent as the graph only grows, so
    one pass already gives an edge-maximal graph.
    """
    if r < 2:
        raise ParameterError(f"r must be >= 2, got {r}")
    _require_free(G, r)
    b = G.builder()
    for u in range(G.n):
        for v in range(u + 1, G.n):
            if b.has_edge(u, v):
                continue
            common = b.rows[u] & b.rows[v]
            if clique_in_mask(b.rows, common, r - 1) is None:
                b.add_edge(u, v)
    return b.freeze()


def extract_bipartition(G: Graph, strict: bool = False) -> PartitionOutcome:
    """Two independent classes for a triangle-free graph, following both proof cases.

    If ``delta + Delta >= n`` the classes are ``N(u)`` and its complement for a
    maximum-degree vertex ``u``. Otherwise ``N(v)`` and ``N(u)`` seed the two
    sides for an edge ``uv`` and leftover vertices are moved into whichever
    side they have no neighbour in, until nothing moves.
    """
    tri = find_clique(G, 3)
    if tri is not None:
        raise WitnessError(f"graph contains a triangle on {list(tri.vertices)}", tri)
    verdict = _verdict(G, 2)
    if strict and not verdict.holds:
        raise HypothesisError(f"hypothesis fails: delta is not above {verdict.threshold}", verdict)
    delta, Delta = degree_profile(G)
    V = G.vertex_mask
    if Delta == 0:
        return PartitionOutcome(Partition.from_masks([V]))
    u = G.degrees.index(Delta)
    if delta + Delta >= G.n:
        A = G.rows[u]
        return _finish(G, 2, [A, V & ~A], verdict, "case-1 neighbourhood split")

    v = lowest(G.rows[u])
    side1, side2 = G.rows[v], G.rows[u]
    T = V & ~(side1 | side2)
    moved = True
    while T and moved:
        moved = False
        for w in iter_bits(T):
            bit = 1 << w
            if not G.rows[w] & side1:
                side1 |= bit
            elif not G.rows[w] & side2:
                side2 |= bit
            else:
                continue
            T &= ~bit
            moved = True
    if T:
        return PartitionOutcome(
            violation=Violation(
                "case-2 exchange",
                from_mask(T),
                verdict,
                "every leftover vertex has neighbours on both sides",
            )
        )
    return _finish(G, 2, [side1, side2], verdict, "case-2 exchange")


def _finish(G: Graph, r: int, masks: list[int], verdict: HypothesisVerdict, step: str) -> PartitionOutcome:
    P = Partition.from_masks(masks)
    if validate_partition(G, P, r):
        return PartitionOutcome(P)
    bad = 0
    for m in masks:
        for x in iter_bits(m):
            if G.rows[x] & m:
                bad |= 1 << x
    return PartitionOutcome(violation=Violation(step, from_mask(bad), verdict, "assembled classes are not independent"))


def extract_r_partition(G: Graph, r: int, strict: bool = False) -> PartitionOutcome:
    """Partition a K_{r+1}-free graph into ``r`` independent classes.

    With ``strict`` the hypothesis is checked up front and a failure raises
    :class:`HypothesisError`; otherwise the construction is attempted anyway
    and reports a violation if it cannot complete.
    """
    if r < 2:
        raise ParameterError(f"r must be >= 2, got {r}")
    _require_free(G, r)
    if r == 2:
        return extract_bipartition(G, strict=strict)
    verdict = _verdict(G, r)
    if strict and not verdict.holds:
        raise HypothesisError(f"hypothesis fails: delta is not above {verdict.threshold}", verdict)
    return _extract(G, r, verdict)


def _extract(G: Graph, r: int, verdict: HypothesisVerdict) -> PartitionOutcome:
    Gc = maximal_completion(G, r)
    V = G.vertex_mask
    Delta = max(Gc.degrees)
    if Delta == 0:
        return PartitionOutcome(Partition.from_masks([V]))
    u = Gc.degrees.index(Delta)
    X = Gc.rows[u]

    H, vmap = induced(Gc, X)
    inner = extract_r_partition(H, r - 1)
    if not inner.ok:
        sub = inner.violation
        return PartitionOutcome(
            violation=Violation(
                f"induction on N(u) for r={r - 1}",
                frozenset(vmap[i] for i in sub.leftover),
                verdict,
                f"neighbourhood of vertex {u} could not be split: {sub.step}; "
                f"its own hypothesis holds: {sub.verdict.holds}",
            )
        )
    classes = []
    for cls in inner.partition.classes:
        m = 0
        for i in cls:
            m |= 1 << vmap[i]
        classes.append(m)

    rest = V & ~X & ~(1 << u)
    if not rest:
        return _finish(G, r, [1 << u] + classes, verdict, "u completes the partition")

    w = lowest(rest)
    clique = clique_in_mask(Gc.rows, Gc.rows[u] & Gc.rows[w], r - 1)
    if clique is None:
        return PartitionOutcome(
            violation=Violation(
                "clique in N(u) & N(w)",
                from_mask(rest),
                verdict,
                f"no K_{r - 1} in the common neighbourhood of {u} and {w}",
            )
        )
    kmask = 0
    for x in clique:
        kmask |= 1 << x
    side = Gc.common_mask(kmask)
    for z in iter_bits(V & ~X & ~side):
        if not Gc.rows[z] & side:
            side |= 1 << z
    Z = V & ~X & ~side
    if Z:
        return PartitionOutcome(
            violation=Violation(
                "first-class growth",
                from_mask(Z),
                verdict,
                "leftover vertices outside N(u) each see the grown class",
            )
        )
    return _finish(G, r, [side] + classes, verdict, "first-class growth")
