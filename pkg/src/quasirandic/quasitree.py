"""Tree-deletion number and membership in the k-generalized quasi-tree class T_k(n)."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from . import kernels
from .graph import Graph, GraphError, delete_vertices, is_connected, is_tree


class NotConnectedError(GraphError):
    pass


def _mask_to_set(mask: int) -> tuple[int, ...]:
    return tuple(v for v in range(mask.bit_length()) if mask >> v & 1)


@dataclass(frozen=True)
class QuasiClassification:
    """Minimal deletion count ``k`` and the minimum witness sets.

    ``witnesses`` is sorted by the integer encoding of each set (bit ``v``
    set for vertex ``v``).  ``admissible`` records ``n >= k + 2``; it is
    always true for trees (``k = 0``) with ``n >= 2``.
    """

    n: int
    k: int
    witnesses: tuple[tuple[int, ...], ...]
    admissible: bool

    @property
    def quasi_vertices(self) -> frozenset[int]:
        """Vertices that appear in at least one minimum witness."""
        return frozenset(v for S in self.witnesses for v in S)


def tree_deletion_number(G: Graph, witnesses: bool = True) -> QuasiClassification:
    """Classify a connected graph; with ``witnesses=False`` only the first witness is kept."""
    if G.n < 2:
        raise GraphError("tree deletion number needs n >= 2")
    if not is_connected(G):
        raise NotConnectedError("T_k(n) members are connected; got a disconnected graph")
    k, masks = kernels.deletion_search(G.rows, G.n, witnesses)
    return QuasiClassification(
        n=G.n,
        k=k,
        witnesses=tuple(_mask_to_set(S) for S in masks),
        admissible=(k == 0 or G.n >= k + 2),
    )


def deletion_number(G: Graph) -> int:
    """Just ``k``, no connectivity check and no witness list (hot path)."""
    return kernels.min_deletion(G.rows, G.n)


def is_member(G: Graph, k: int) -> bool:
    """True iff ``G`` lies in T_k(n): deletion number exactly ``k`` and ``n >= k + 2``."""
    if k < 1:
        raise ValueError("T_k(n) is defined for k >= 1")
    if not is_connected(G):
        raise NotConnectedError("T_k(n) members are connected; got a disconnected graph")
    return G.n >= k + 2 and kernels.min_deletion(G.rows, G.n) == k


def naive_tree_deletion_number(G: Graph) -> int:
    """Reference search: every vertex subset in increasing size, no pruning."""
    for j in range(G.n):
        for S in combinations(range(G.n), j):
            if is_tree(delete_vertices(G, S)):
                return j
    raise AssertionError("unreachable")
