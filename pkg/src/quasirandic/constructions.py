"""Named graph families and the extremal configurations of the bounds.

Labelling conventions:

* path ``P_n``: vertices ``0..n-1`` in path order;
* star ``S_n``: centre ``0``;
* bistar ``S_{p,q}(u,v)``: ``u = 0``, ``v = 1``, then u's ``p-1`` pendants,
  then v's ``q-1`` pendants;
* join and bullet families keep the operand order of :func:`graph.join` and
  :func:`graph.bullet`, so the quasi side (``K_k`` or its complement) takes
  labels ``0..k-1``;
* :func:`degree23_family` puts the residual path first and gives the quasi
  vertices the highest labels.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal

from .graph import Graph, GraphError, bullet, join, make_graph

KINDS = (
    "path", "star", "bistar", "complete", "empty", "cycle",
    "join_path", "join_star", "join_tree", "bullet_star", "bullet_bistar", "degree23",
)


class FamilyError(GraphError):
    pass


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    n: int | None = None
    k: int | None = None
    p: int | None = None
    q: int | None = None
    tree: Graph | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise FamilyError(f"unknown family {self.kind!r}; expected one of {', '.join(KINDS)}")


def path(n: int) -> Graph:
    if n < 1:
        raise FamilyError("path needs n >= 1")
    return make_graph(n, [(i, i + 1) for i in range(n - 1)])


def star(n: int) -> Graph:
    if n < 1:
        raise FamilyError("star needs n >= 1")
    return make_graph(n, [(0, i) for i in range(1, n)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise FamilyError("cycle needs n >= 3")
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(k: int) -> Graph:
    if k < 1:
        raise FamilyError("complete graph needs k >= 1 (a graph has at least one vertex)")
    return make_graph(k, [(i, j) for i in range(k) for j in range(i + 1, k)])


def empty(k: int) -> Graph:
    if k < 1:
        raise FamilyError("edgeless graph needs k >= 1")
    return make_graph(k, [])


def bistar(p: int, q: int) -> Graph:
    """``S_{p,q}(u,v)``: adjacent ``u = 0`` and ``v = 1`` with ``p-1`` and ``q-1`` pendants."""
    if p < 1 or q < 1:
        raise FamilyError("bistar needs p >= 1 and q >= 1")
    edges = [(0, 1)]
    edges += [(0, 2 + i) for i in range(p - 1)]
    edges += [(1, p + 1 + i) for i in range(q - 1)]
    return make_graph(p + q, edges)


def join_family(n: int, k: int, kind: Literal["path", "star"]) -> Graph:
    """``K_k + P_{n-k}`` or ``K_k + S_{n-k}``."""
    if k < 1 or n < k + 2:
        raise FamilyError(f"join family needs k >= 1 and n >= k + 2 (got n={n}, k={k})")
    if kind == "path":
        return join(complete(k), path(n - k))
    if kind == "star":
        return join(complete(k), star(n - k))
    raise FamilyError(f"join family kind must be 'path' or 'star', got {kind!r}")


def join_tree(k: int, tree: Graph) -> Graph:
    if k < 1:
        raise FamilyError("join_tree needs k >= 1")
    return join(complete(k), tree)


def bullet_family(n: int, k: int) -> Graph:
    """Extremal graph of the bullet type.

    ``k = 1``: the single quasi vertex joined to the centre and one pendant of
    ``S_{n-1}``.  ``k >= 2``: ``k`` independent quasi vertices joined to both
    centres of ``S_{n-k-2,2}(u,v)``.
    """
    if k == 1:
        if n < 4:
            raise FamilyError("bullet family with k = 1 needs n >= 4")
        return bullet(empty(1), star(n - 1), 0, 1)
    if k >= 2:
        if n < k + 4:
            raise FamilyError(
                f"bullet family with k >= 2 needs n >= k + 4 so the bistar keeps p >= 2 (got n={n}, k={k})"
            )
        return bullet(empty(k), bistar(n - k - 2, 2), 0, 1)
    raise FamilyError("bullet family needs k >= 1")


def degree23_family(n: int, k: int) -> Graph:
    """Member of T_k(n) whose degrees are ``2`` (``n-2k+2`` times) and ``3`` (``2k-2`` times).

    Residual path ``v_0..v_{r-1}`` (``r = n-k``) plus quasi vertices
    ``z_1..z_k`` labelled ``r..n-1``.  For ``k = 1`` the quasi vertex closes
    the path into ``C_n``.  Otherwise every ``z_i`` is joined to two
    consecutive path vertices: ``z_1`` to ``v_0, v_1``, ``z_2`` to
    ``v_{r-2}, v_{r-1}`` and ``z_i`` (``i >= 3``) to ``v_{2i-4}, v_{2i-3}``.
    The ``k`` triangles are vertex-disjoint, which pins the deletion number
    at ``k``; fitting them needs ``n >= 3k``.
    """
    if k < 1:
        raise FamilyError("degree23 family needs k >= 1")
    if k == 1:
        if n < 3:
            raise FamilyError("degree23 family with k = 1 needs n >= 3")
        return cycle(n)
    if n < 3 * k:
        raise FamilyError(
            f"this constructor needs n >= 3k to place {k} disjoint triangles (got n={n}, k={k}); "
            "the bound itself may still be attained by other graphs"
        )
    r = n - k
    edges = [(i, i + 1) for i in range(r - 1)]
    attach = [(0, 1), (r - 2, r - 1)] + [(2 * i - 4, 2 * i - 3) for i in range(3, k + 1)]
    for idx, (a, b) in enumerate(attach):
        z = r + idx
        edges += [(z, a), (z, b)]
    return make_graph(n, edges)


def standard_graph(spec: FamilySpec) -> Graph:
    kind = spec.kind

    def need(name: str) -> int:
        val = getattr(spec, name)
        if val is None:
            raise FamilyError(f"family {kind!r} needs parameter {name}")
        return val

    if kind == "path":
        return path(need("n"))
    if kind == "star":
        return star(need("n"))
    if kind == "cycle":
        return cycle(need("n"))
    if kind == "complete":
        return complete(need("k"))
    if kind == "empty":
        return empty(need("k"))
    if kind == "bistar":
        return bistar(need("p"), need("q"))
    if kind == "join_path":
        return join_family(need("n"), need("k"), "path")
    if kind == "join_star":
        return join_family(need("n"), need("k"), "star")
    if kind == "join_tree":
        if spec.tree is None:
            raise FamilyError("join_tree needs a tree")
        return join_tree(need("k"), spec.tree)
    if kind in ("bullet_star", "bullet_bistar"):
        k = need("k")
        if (kind == "bullet_star") != (k == 1):
            raise FamilyError("bullet_star is the k = 1 case, bullet_bistar the k >= 2 case")
        return bullet_family(need("n"), k)
    if kind == "degree23":
        return degree23_family(need("n"), need("k"))
    raise FamilyError(f"unknown family {kind!r}")
