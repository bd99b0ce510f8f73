"""Isomorphism-class identity via the lexicographically minimal adjacency string."""

from __future__ import annotations

from functools import lru_cache

from .. import kernels
from ..graph import Graph, GraphError, pair_count
from ..graph6 import _encode_order

MAX_CANON_ORDER = 10


def code_to_graph6(n: int, code: int) -> str:
    E = pair_count(n)
    bits = format(code, f"0{E}b") if E else ""
    bits += "0" * (-len(bits) % 6)
    return _encode_order(n) + "".join(chr(63 + int(bits[i : i + 6], 2)) for i in range(0, len(bits), 6))


@lru_cache(maxsize=1 << 16)
def _canonical_rows(n: int, rows: tuple[int, ...]) -> bytes:
    return code_to_graph6(n, kernels.canonical_code(rows, n)).encode("ascii")


def canonical_form(G: Graph) -> bytes:
    """graph6 bytes of the relabelling with the smallest upper-triangle bit string.

    Two graphs get the same bytes exactly when they are isomorphic.
    """
    if G.n > MAX_CANON_ORDER:
        raise GraphError(f"canonical_form is limited to n <= {MAX_CANON_ORDER} (got {G.n})")
    return _canonical_rows(G.n, G.rows)


def canonical_str(G: Graph) -> str:
    return canonical_form(G).decode("ascii")
