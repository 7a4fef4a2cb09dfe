"""Structure detection: cliques, odd girth, exact r-colouring, odd-cycle neighbourhoods."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Optional, Sequence

from .errors import ContractError, ParameterError
from .graph import Graph, Partition, iter_bits, lowest


@dataclass(frozen=True)
class Witness:
    """A clique, or an odd cycle listed in traversal order."""

    kind: Literal["clique", "odd-cycle"]
    vertices: tuple[int, ...]

    def __len__(self):
        return len(self.vertices)

    def verify(self, G: Graph) -> bool:
        vs = self.vertices
        if len(set(vs)) != len(vs) or any(not 0 <= v < G.n for v in vs):
            return False
        if self.kind == "clique":
            return all(G.has_edge(a, b) for i, a in enumerate(vs) for b in vs[i + 1:])
        if len(vs) < 3 or len(vs) % 2 == 0:
            return False
        return all(G.has_edge(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs)))


def twin_classes(G: Graph) -> list[int]:
    """Group vertices with identical open neighbourhoods; returns one bitmask per class.

    False twins are never adjacent, so a clique meets each class at most once
    and a proper colouring may give a whole class the same colour.
    """
    groups: dict[int, int] = {}
    for v, row in enumerate(G.rows):
        groups[row] = groups.get(row, 0) | (1 << v)
    return sorted(groups.values(), key=lowest)


def _quotient(G: Graph) -> tuple[list[int], list[int]]:
    """Rows of the twin quotient (indexed by class) and the class masks."""
    classes = twin_classes(G)
    rep_to_idx = {}
    for i, c in enumerate(classes):
        for v in iter_bits(c):
            rep_to_idx[v] = i
    rows = []
    for c in classes:
        row = 0
        for u in iter_bits(G.rows[lowest(c)]):
            row |= 1 << rep_to_idx[u]
        rows.append(row)
    return rows, classes


def _search_clique(rows: list[int], order: list[int], cand: int, need: int, chosen: list[int]):
    if need == 0:
        return list(chosen)
    if cand.bit_count() < need:
        return None
    for v in order:
        if not cand >> v & 1:
            continue
        if cand.bit_count() < need:
            return None
        cand &= ~(1 << v)
        nxt = cand & rows[v]
        if nxt.bit_count() >= need - 1:
            chosen.append(v)
            found = _search_clique(rows, order, nxt, need - 1, chosen)
            if found is not None:
                return found
            chosen.pop()
    return None


def find_clique(G: Graph, t: int) -> Optional[Witness]:
    """Return a clique on ``t`` vertices if one exists (exact backtracking), else ``None``."""
    if t < 1:
        raise ParameterError(f"clique size must be >= 1, got {t}")
    if t > G.n:
        return None
    rows, classes = _quotient(G)
    m = len(rows)
    order = sorted(range(m), key=lambda i: (-rows[i].bit_count(), i))
    found = _search_clique(rows, order, (1 << m) - 1, t, [])
    if found is None:
        return None
    return Witness("clique", tuple(sorted(lowest(classes[i]) for i in found)))


def clique_in_mask(rows: Sequence[int], mask: int, t: int) -> Optional[list[int]]:
    """Clique of size ``t`` inside the vertex set ``mask`` of the adjacency ``rows``."""
    if t <= 0:
        return []
    order = sorted(iter_bits(mask), key=lambda v: (-(rows[v] & mask).bit_count(), v))
    return _search_clique(rows, order, mask, t, [])


@dataclass(frozen=True)
class OddGirth:
    """Length of the shortest odd cycle, ``None`` for bipartite graphs."""

    value: Optional[int]

    @property
    def m(self) -> Optional[int]:
        return None if self.value is None else (self.value - 1) // 2


def _bfs_layers(G: Graph, s: int, max_depth: int):
    layers = [1 << s]
    seen = 1 << s
    while len(layers) - 1 < max_depth:
        nxt = G.neighborhood_union(layers[-1]) & ~seen
        if not nxt:
            break
        seen |= nxt
        layers.append(nxt)
    return layers


def _intra_layer_edge(G: Graph, layer: int) -> Optional[tuple[int, int]]:
    for x in iter_bits(layer):
        hit = G.rows[x] & layer
        if hit:
            return x, lowest(hit)
    return None


def odd_girth(G: Graph) -> tuple[OddGirth, Optional[Witness]]:
    """Shortest odd cycle via parity-layered BFS from every vertex.

    From a source ``s`` the first BFS layer ``d`` containing an edge yields a
    closed odd walk of length ``2d+1``; the minimum over all sources is the
    odd girth and the two tree paths are then internally disjoint.
    """
    best = None
    best_src = best_d = None
    for s in range(G.n):
        if not G.rows[s]:
            continue
        layer, seen, d = 1 << s, 1 << s, 0
        while best is None or 2 * d + 1 < best:
            if d and _intra_layer_edge(G, layer) is not None:
                best, best_src, best_d = 2 * d + 1, s, d
                break
            layer = G.neighborhood_union(layer) & ~seen
            if not layer:
                break
            seen |= layer
            d += 1
    if best is None:
        return OddGirth(None), None
    return OddGirth(best), Witness("odd-cycle", _rebuild_cycle(G, best_src, best_d))


def _rebuild_cycle(G: Graph, s: int, d: int) -> tuple[int, ...]:
    layers = _bfs_layers(G, s, d)
    x, y = _intra_layer_edge(G, layers[d])

    def path_to(v):
        path = [v]
        for j in range(d - 1, -1, -1):
            v = lowest(G.rows[v] & layers[j])
            path.append(v)
        return path[::-1]

    px, py = path_to(x), path_to(y)
    cycle = tuple(px + py[:0:-1])
    if len(set(cycle)) != len(cycle):
        raise AssertionError(f"odd-girth walk from {s} is not a cycle: {cycle}")
    return cycle


def is_c_le_free(G: Graph, k: int) -> bool:
    """True iff ``G`` has no odd cycle of length 3, 5, ..., 2k+1."""
    if k < 1:
        raise ParameterError(f"k must be >= 1, got {k}")
    g, _ = odd_girth(G)
    return g.value is None or g.value >= 2 * k + 3


def r_partition_exact(G: Graph, r: int) -> Optional[Partition]:
    """Exact r-colouring by backtracking; ``None`` when no proper r-colouring exists.

    Twins are merged first. Vertices are coloured in descending-degree order,
    and a new colour is only opened as the next unused one.
    """
    if r < 1:
        raise ParameterError(f"r must be >= 1, got {r}")
    rows, classes = _quotient(G)
    m = len(rows)
    order = sorted(range(m), key=lambda i: (-rows[i].bit_count(), i))
    colour = [0] * r
    assign = [-1] * m

    def place(pos: int, used: int) -> bool:
        if pos == m:
            return True
        v = order[pos]
        for c in range(min(used + 1, r)):
            if rows[v] & colour[c]:
                continue
            colour[c] |= 1 << v
            assign[v] = c
            if place(pos + 1, max(used, c + 1)):
                return True
            colour[c] &= ~(1 << v)
        assign[v] = -1
        return False

    if not place(0, 0):
        return None
    out = [0] * r
    for i, c in enumerate(assign):
        out[c] |= classes[i]
    return Partition.from_masks(out)


@dataclass(frozen=True)
class CycleProfile:
    """How an outside vertex meets a shortest odd cycle.

    ``kind`` is ``"empty"``, ``"single"``, ``"pair"`` (neighbours at cycle
    distance two, ``indices[1] == indices[0] + 2 mod |C|``) or ``"violation"``.
    """

    kind: Literal["empty", "single", "pair", "violation"]
    indices: tuple[int, ...] = ()
    vertices: tuple[int, ...] = ()

    @property
    def is_violation(self) -> bool:
        return self.kind == "violation"


def cycle_adjacency_profile(G: Graph, C: Witness, u: int, girth: OddGirth | None = None) -> CycleProfile:
    if C.kind != "odd-cycle" or not C.verify(G):
        raise ContractError("expected an odd cycle of G")
    if girth is None:
        girth, _ = odd_girth(G)
    if girth.value != len(C):
        raise ContractError(f"cycle has length {len(C)} but the odd girth is {girth.value}")
    if u in C.vertices:
        raise ContractError(f"vertex {u} lies on the cycle")
    L = len(C)
    hits = tuple(i for i, v in enumerate(C.vertices) if G.has_edge(u, v))
    if not hits:
        return CycleProfile("empty")
    if len(hits) == 1:
        return CycleProfile("single", hits, (C.vertices[hits[0]],))
    if len(hits) == 2:
        a, b = hits
        for i, j in ((a, b), (b, a)):
            if (i + 2) % L == j:
                return CycleProfile("pair", (i, j), (C.vertices[i], C.vertices[j]))
    return CycleProfile("violation", hits, tuple(C.vertices[i] for i in hits))
