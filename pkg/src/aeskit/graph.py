"""Immutable simple graphs on vertices ``0..n-1`` with bitset adjacency rows.

Vertex sets are passed around as Python ints used as bitmasks (bit ``v`` set
means vertex ``v`` is a member). The public helpers accept any iterable of
vertices and convert with :func:`to_mask`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple, Sequence

from .errors import ContractError, GraphError


def to_mask(vertices: Iterable[int] | int) -> int:
    if isinstance(vertices, int):
        return vertices
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def iter_bits(mask: int) -> Iterator[int]:
    """Yield set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def from_mask(mask: int) -> frozenset[int]:
    return frozenset(iter_bits(mask))


def lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph. ``rows[v]`` is the neighbourhood bitmask of ``v``."""

    n: int
    rows: tuple[int, ...]
    _degrees: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 1:
            raise GraphError(f"graph needs at least one vertex, got n={self.n}")
        if len(self.rows) != self.n:
            raise GraphError(f"expected {self.n} adjacency rows, got {len(self.rows)}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.rows):
            if row & ~full:
                raise GraphError(f"row {v} references vertices outside 0..{self.n - 1}")
            if row >> v & 1:
                raise GraphError(f"loop at vertex {v}", (v, v))
        for v, row in enumerate(self.rows):
            for u in iter_bits(row):
                if not self.rows[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}", (v, u))
        object.__setattr__(self, "_degrees", tuple(row.bit_count() for row in self.rows))

    @classmethod
    def _symmetric(cls, n: int, rows: tuple[int, ...]) -> "Graph":
        # rows built pairwise by the caller; skips the O(m) symmetry walk
        G = object.__new__(cls)
        object.__setattr__(G, "n", n)
        object.__setattr__(G, "rows", rows)
        object.__setattr__(G, "_degrees", tuple(row.bit_count() for row in rows))
        return G

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def degrees(self) -> tuple[int, ...]:
        return self._degrees

    def degree(self, v: int) -> int:
        return self._degrees[v]

    def neighbors(self, v: int) -> frozenset[int]:
        return from_mask(self.rows[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    @property
    def num_edges(self) -> int:
        return sum(self._degrees) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        out = []
        for u, row in enumerate(self.rows):
            for v in iter_bits(row >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def common_mask(self, mask: int) -> int:
        """Intersection of the neighbourhoods of every vertex in ``mask``."""
        if not mask:
            raise ContractError("common neighbourhood of an empty set is undefined")
        acc = self.vertex_mask
        for v in iter_bits(mask):
            acc &= self.rows[v]
        return acc

    def neighborhood_union(self, mask: int) -> int:
        acc = 0
        for v in iter_bits(mask):
            acc |= self.rows[v]
        return acc

    def builder(self) -> "GraphBuilder":
        return GraphBuilder(self.n, list(self.rows))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.num_edges})"


class GraphBuilder:
    """Mutable single-owner adjacency used to grow a graph edge by edge."""

    def __init__(self, n: int, rows: list[int] | None = None):
        if n < 1:
            raise GraphError(f"graph needs at least one vertex, got n={n}")
        self.n = n
        self.rows = rows if rows is not None else [0] * n

    def add_edge(self, u: int, v: int) -> None:
        _check_pair(self.n, u, v)
        self.rows[u] |= 1 << v
        self.rows[v] |= 1 << u

    def remove_edge(self, u: int, v: int) -> None:
        _check_pair(self.n, u, v)
        self.rows[u] &= ~(1 << v)
        self.rows[v] &= ~(1 << u)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def freeze(self) -> Graph:
        return Graph(self.n, tuple(self.rows))


def _check_pair(n: int, u: int, v: int) -> None:
    if not (0 <= u < n and 0 <= v < n):
        raise GraphError(f"edge ({u}, {v}) has a vertex outside 0..{n - 1}", (u, v))
    if u == v:
        raise GraphError(f"edge ({u}, {v}) is a loop", (u, v))


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a graph on ``n`` vertices; duplicate edges collapse, loops raise."""
    b = GraphBuilder(n)
    for e in edges:
        u, v = e
        b.add_edge(u, v)
    return b.freeze()


class DegreeProfile(NamedTuple):
    delta: int
    Delta: int


def degree_profile(G: Graph) -> DegreeProfile:
    return DegreeProfile(min(G.degrees), max(G.degrees))


def is_independent(G: Graph, S: Iterable[int] | int) -> bool:
    mask = to_mask(S)
    for v in iter_bits(mask):
        if G.rows[v] & mask:
            return False
    return True


def common_neighborhood(G: Graph, S: Iterable[int] | int) -> frozenset[int]:
    return from_mask(G.common_mask(to_mask(S)))


def induced(G: Graph, S: Iterable[int] | int) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced on ``S``.

    Returns the new graph together with ``vmap`` where ``vmap[i]`` is the
    original vertex that became vertex ``i``.
    """
    mask = to_mask(S)
    if not mask:
        raise ContractError("cannot induce a subgraph on the empty set")
    vmap = tuple(iter_bits(mask))
    index = {v: i for i, v in enumerate(vmap)}
    rows = []
    for v in vmap:
        row = 0
        for u in iter_bits(G.rows[v] & mask):
            row |= 1 << index[u]
        rows.append(row)
    return Graph(len(vmap), tuple(rows)), vmap


@dataclass(frozen=True)
class Partition:
    """Ordered vertex classes. Empty classes are only legal when ``padding`` is set."""

    classes: tuple[frozenset[int], ...]
    padding: bool = False

    @classmethod
    def from_masks(cls, masks: Iterable[int], drop_empty: bool = True) -> "Partition":
        masks = [m for m in masks if m or not drop_empty]
        return cls(tuple(from_mask(m) for m in masks), padding=not drop_empty)

    @property
    def masks(self) -> list[int]:
        return [to_mask(c) for c in self.classes]

    def __len__(self):
        return len(self.classes)

    def as_lists(self) -> list[list[int]]:
        return [sorted(c) for c in self.classes]


def validate_partition(G: Graph, P: Partition, r: int) -> bool:
    """True iff ``P`` has at most ``r`` classes, covers V disjointly, and every class is independent."""
    if len(P.classes) > r:
        return False
    seen = 0
    for cls in P.classes:
        if not cls and not P.padding:
            return False
        if any(not 0 <= v < G.n for v in cls):
            return False
        mask = to_mask(cls)
        if seen & mask:
            return False
        seen |= mask
        if not is_independent(G, mask):
            return False
    return seen == G.vertex_mask


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def cycle_graph(n: int) -> Graph:
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_multipartite(sizes: Sequence[int]) -> Graph:
    n = sum(sizes)
    full = (1 << n) - 1
    rows = []
    start = 0
    for s in sizes:
        part = ((1 << s) - 1) << start
        rows.extend([full & ~part] * s)
        start += s
    return Graph(n, tuple(rows))
