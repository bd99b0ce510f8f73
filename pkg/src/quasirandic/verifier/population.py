"""Members of T_k(n) grouped by exact degree multiset."""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator

import numpy as np

from ..graph import DegreeMultiset, Graph, degree_multiset, is_connected, pair_index
from ..quasitree import deletion_number
from .canonical import canonical_form
from .enumeration import scan_connected


class InputGraphError(ValueError):
    """A supplied graph violates the verifier's input contract."""


def _incidence(n: int) -> list[int]:
    return [sum(1 << pair_index(v, u) for u in range(n) if u != v) for v in range(n)]


class Population:
    """Graphs of one order and one deletion number, bucketed by degree multiset.

    Internally enumerated populations keep edge masks; supplied ones keep
    the graphs themselves.
    """

    def __init__(self, n: int, k: int, groups: dict[DegreeMultiset, list], *, masks: bool) -> None:
        self.n = n
        self.k = k
        self._groups = dict(sorted(groups.items()))
        self._masks = masks

    @property
    def size(self) -> int:
        return sum(len(v) for v in self._groups.values())

    @property
    def multisets(self) -> list[DegreeMultiset]:
        return list(self._groups)

    def __contains__(self, ms: DegreeMultiset) -> bool:
        return ms in self._groups

    def count(self, ms: DegreeMultiset) -> int:
        return len(self._groups.get(ms, ()))

    def graphs(self, ms: DegreeMultiset) -> Iterator[Graph]:
        for item in self._groups.get(ms, ()):
            yield Graph.from_mask(self.n, int(item)) if self._masks else item

    def all_graphs(self) -> Iterator[Graph]:
        for ms in self._groups:
            yield from self.graphs(ms)

    def classes(self, ms: DegreeMultiset) -> list[bytes]:
        """Sorted distinct canonical forms among members with multiset ``ms``."""
        return sorted({canonical_form(G) for G in self.graphs(ms)})

    @classmethod
    def enumerate(cls, n: int, k: int, jobs: int = 1) -> "Population":
        return _internal(n, k, max(1, jobs))

    @classmethod
    def from_graphs(cls, graphs: Iterable[Graph], n: int, k: int) -> "Population":
        """Members of T_k(n) among ``graphs``; other orders are ignored, disconnected input is rejected."""
        groups: dict[DegreeMultiset, list] = {}
        for idx, G in enumerate(graphs, 1):
            if G.n != n:
                continue
            if not is_connected(G):
                raise InputGraphError(f"graph {idx} is disconnected; T_k(n) members must be connected")
            if n >= k + 2 and deletion_number(G) == k:
                groups.setdefault(degree_multiset(G), []).append(G)
        return cls(n, k, groups, masks=False)


@lru_cache(maxsize=64)
def _internal(n: int, k: int, jobs: int) -> Population:
    masks, ks = scan_connected(n, jobs)
    if n < k + 2:
        return Population(n, k, {}, masks=True)
    sel = masks[ks == k]
    if sel.size == 0:
        return Population(n, k, {}, masks=True)
    deg = np.stack([np.bitwise_count(sel & np.uint64(M)) for M in _incidence(n)], axis=1)
    deg = -np.sort(-deg.astype(np.int16), axis=1)
    rows, inverse = np.unique(deg, axis=0, return_inverse=True)
    inverse = inverse.reshape(-1)
    order = np.argsort(inverse, kind="stable")
    bounds = np.searchsorted(inverse[order], np.arange(len(rows) + 1))
    groups = {}
    for g, row in enumerate(rows):
        ms = DegreeMultiset(tuple(int(d) for d in row))
        groups[ms] = sel[order[bounds[g] : bounds[g + 1]]].tolist()
    return Population(n, k, groups, masks=True)
