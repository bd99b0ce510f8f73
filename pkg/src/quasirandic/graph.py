"""Small simple graphs stored as one adjacency word per vertex.

Vertices are ``0..n-1`` and ``n <= 64`` so that every row fits in a 64-bit
word.  Graphs are immutable; every operation returns a new graph.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

MAX_ORDER = 64


class GraphError(ValueError):
    """Raised for invalid graph input (bad vertex, self-loop, bad order)."""


def pair_index(i: int, j: int) -> int:
    """Position of the pair ``{i, j}`` in the upper-triangle, column-major order.

    This is the bit order used by graph6 and by the edge masks of the
    enumeration kernels: (0,1), (0,2), (1,2), (0,3), ...
    """
    if i > j:
        i, j = j, i
    return j * (j - 1) // 2 + i


def pair_count(n: int) -> int:
    return n * (n - 1) // 2


@dataclass(frozen=True)
class Graph:
    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_ORDER:
            raise GraphError(f"order must be in 1..{MAX_ORDER}, got {self.n}")
        if len(self.rows) != self.n:
            raise GraphError("one adjacency row per vertex required")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.rows):
            if row & ~full:
                raise GraphError(f"row {v} references a vertex outside 0..{self.n - 1}")
            if row >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            w = row
            while w:
                low = w & -w
                u = low.bit_length() - 1
                if not self.rows[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")
                w ^= low

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"

    @property
    def m(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return [u for u in range(self.n) if self.rows[v] >> u & 1]

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        out = []
        for u, row in enumerate(self.rows):
            w = row >> (u + 1)
            v = u + 1
            while w:
                if w & 1:
                    out.append((u, v))
                w >>= 1
                v += 1
        return out

    def non_edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in range(u + 1, self.n):
                if not self.rows[u] >> v & 1:
                    yield u, v

    def to_mask(self) -> int:
        """Edge set as an integer whose bit ``pair_index(u, v)`` marks edge uv."""
        mask = 0
        for u, v in self.edges():
            mask |= 1 << pair_index(u, v)
        return mask

    @classmethod
    def from_mask(cls, n: int, mask: int) -> "Graph":
        rows = [0] * n
        b = 0
        for j in range(1, n):
            for i in range(j):
                if mask >> b & 1:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
                b += 1
        return cls(n, tuple(rows))


@dataclass(frozen=True, order=True)
class DegreeMultiset:
    """Sorted (non-increasing) degree sequence; compares and hashes by value."""

    degrees: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(a < b for a, b in zip(self.degrees, self.degrees[1:])):
            object.__setattr__(self, "degrees", tuple(sorted(self.degrees, reverse=True)))
        n = len(self.degrees)
        if n and (self.degrees[-1] < 0 or self.degrees[0] > n - 1):
            raise GraphError(f"degrees must lie in 0..{n - 1}: {self.degrees}")

    @classmethod
    def from_counts(cls, counts: dict[int, int]) -> "DegreeMultiset":
        seq: list[int] = []
        for d, c in counts.items():
            if c < 0:
                raise GraphError("negative multiplicity")
            seq.extend([d] * c)
        return cls(tuple(sorted(seq, reverse=True)))

    @property
    def n(self) -> int:
        return len(self.degrees)

    @property
    def counts(self) -> dict[int, int]:
        return dict(sorted(Counter(self.degrees).items(), reverse=True))

    def total(self) -> int:
        return sum(self.degrees)

    def __str__(self) -> str:
        parts = [str(d) if c == 1 else f"{d}^{c}" for d, c in self.counts.items()]
        return "[" + ",".join(parts) + "]"


def make_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    if not isinstance(n, int) or not 1 <= n <= MAX_ORDER:
        raise GraphError(f"order must be an integer in 1..{MAX_ORDER}, got {n!r}")
    rows = [0] * n
    for e in edges:
        u, v = e
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has a vertex outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def _vertex_mask(n: int, S: Iterable[int]) -> int:
    mask = 0
    for s in S:
        if not 0 <= s < n:
            raise GraphError(f"vertex {s} not in 0..{n - 1}")
        mask |= 1 << s
    return mask


def induced_on_mask(G: Graph, keep: int) -> Graph:
    """Induced subgraph on the vertices set in ``keep``, relabelled in ascending order."""
    kept = [v for v in range(G.n) if keep >> v & 1]
    if not kept:
        raise GraphError("induced subgraph would be empty")
    rows = []
    for v in kept:
        r = G.rows[v] & keep
        nr = 0
        for new, old in enumerate(kept):
            if r >> old & 1:
                nr |= 1 << new
        rows.append(nr)
    return Graph(len(kept), tuple(rows))


def delete_vertices(G: Graph, S: Iterable[int]) -> Graph:
    full = (1 << G.n) - 1
    removed = _vertex_mask(G.n, S)
    if removed == full:
        raise GraphError("cannot delete every vertex")
    if not removed:
        return G
    return induced_on_mask(G, full & ~removed)


def component_of(rows: Sequence[int], start: int, within: int) -> int:
    """Vertex mask of the component containing ``start`` inside vertex set ``within``."""
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        w = frontier
        while w:
            low = w & -w
            nxt |= rows[low.bit_length() - 1]
            w ^= low
        nxt &= within & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def is_connected(G: Graph) -> bool:
    full = (1 << G.n) - 1
    return component_of(G.rows, 0, full) == full


def is_tree(G: Graph) -> bool:
    return G.m == G.n - 1 and is_connected(G)


def join(G: Graph, H: Graph) -> Graph:
    """``G + H``: disjoint union plus every edge between the two sides.

    G keeps labels ``0..|G|-1``; H is shifted up by ``|G|``.
    """
    n = G.n + H.n
    if n > MAX_ORDER:
        raise GraphError(f"join has order {n} > {MAX_ORDER}")
    g_all = (1 << G.n) - 1
    h_all = ((1 << H.n) - 1) << G.n
    rows = [r | h_all for r in G.rows] + [(r << G.n) | g_all for r in H.rows]
    return Graph(n, tuple(rows))


def disjoint_union(G: Graph, H: Graph) -> Graph:
    n = G.n + H.n
    if n > MAX_ORDER:
        raise GraphError(f"union has order {n} > {MAX_ORDER}")
    return Graph(n, tuple(G.rows) + tuple(r << G.n for r in H.rows))


def bullet(G: Graph, H: Graph, u: int, v: int) -> Graph:
    """Join every vertex of G to the two vertices ``u`` and ``v`` of H.

    Labels follow :func:`join`: G first, then H shifted by ``|G|``.
    """
    if u == v:
        raise GraphError("bullet needs two distinct attachment vertices")
    if not (0 <= u < H.n and 0 <= v < H.n):
        raise GraphError(f"attachment vertices must lie in 0..{H.n - 1}")
    U = disjoint_union(G, H)
    rows = list(U.rows)
    su, sv = u + G.n, v + G.n
    for x in range(G.n):
        rows[x] |= (1 << su) | (1 << sv)
        rows[su] |= 1 << x
        rows[sv] |= 1 << x
    return Graph(U.n, tuple(rows))


def add_edge(G: Graph, u: int, v: int) -> Graph:
    if u == v:
        raise GraphError(f"self-loop at vertex {u}")
    rows = list(G.rows)
    rows[u] |= 1 << v
    rows[v] |= 1 << u
    return Graph(G.n, tuple(rows))


def remove_edge(G: Graph, u: int, v: int) -> Graph:
    rows = list(G.rows)
    rows[u] &= ~(1 << v)
    rows[v] &= ~(1 << u)
    return Graph(G.n, tuple(rows))


def relabel(G: Graph, perm: Sequence[int]) -> Graph:
    """Graph with vertex ``v`` renamed to ``perm[v]``."""
    if sorted(perm) != list(range(G.n)):
        raise GraphError("relabelling must be a permutation of the vertices")
    return make_graph(G.n, [(perm[u], perm[v]) for u, v in G.edges()])


def degree_multiset(G: Graph) -> DegreeMultiset:
    return DegreeMultiset(tuple(sorted(G.degrees(), reverse=True)))
