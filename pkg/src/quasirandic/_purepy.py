"""Pure-Python kernels: tree-deletion search, connected-graph scan, canonical codes.

Same API as the compiled ``_ckernels`` module; see ``kernels.py`` for selection.
"""

from __future__ import annotations

from itertools import combinations
from typing import Sequence

import numpy as np

NAME = "python"


def _component(rows: Sequence[int], start: int, within: int) -> int:
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


def deletion_search(rows: Sequence[int], n: int, all_witnesses: bool = False) -> tuple[int, list[int]]:
    """Smallest ``j`` such that deleting some ``j`` vertices leaves a tree.

    Returns ``(j, witnesses)`` where witnesses are vertex masks in ascending
    order; with ``all_witnesses=False`` only the first one found is listed.
    A ``j``-set qualifies only if it removes exactly ``m - (n - j - 1)``
    edges, which is checked before the connectivity test.
    """
    full = (1 << n) - 1
    deg = [r.bit_count() for r in rows]
    m = sum(deg) // 2
    for j in range(n):
        target = m - (n - j - 1)
        if target < 0:
            continue
        found: list[int] = []
        for combo in combinations(range(n), j):
            S = 0
            dsum = 0
            for s in combo:
                S |= 1 << s
                dsum += deg[s]
            if dsum < target:
                continue
            inner = 0
            for s in combo:
                inner += (rows[s] & S).bit_count()
            if dsum - inner // 2 != target:
                continue
            keep = full & ~S
            low = keep & -keep
            if _component(rows, low.bit_length() - 1, keep) == keep:
                found.append(S)
                if not all_witnesses:
                    return j, found
        if found:
            return j, sorted(found)
    raise AssertionError("unreachable: a single vertex is always a tree")


def min_deletion(rows: Sequence[int], n: int) -> int:
    return deletion_search(rows, n, False)[0]


def _pairs(n: int) -> list[tuple[int, int]]:
    return [(i, j) for j in range(1, n) for i in range(j)]


def scan(n: int, start: int, stop: int) -> tuple[np.ndarray, np.ndarray]:
    """Connected graphs among edge masks ``start <= mask < stop`` and their deletion numbers."""
    pairs = _pairs(n)
    full = (1 << n) - 1
    masks: list[int] = []
    ks: list[int] = []
    for mask in range(start, stop):
        if n > 1 and mask.bit_count() < n - 1:
            continue
        rows = [0] * n
        w = mask
        while w:
            low = w & -w
            i, j = pairs[low.bit_length() - 1]
            rows[i] |= 1 << j
            rows[j] |= 1 << i
            w ^= low
        if _component(rows, 0, full) != full:
            continue
        masks.append(mask)
        ks.append(min_deletion(rows, n))
    return np.array(masks, dtype=np.uint64), np.array(ks, dtype=np.int8)


def canonical_code(rows: Sequence[int], n: int) -> int:
    """Lexicographically smallest upper-triangle bit string over all relabellings.

    Bits are read in column-major pair order, first pair most significant.
    Level-synchronous search: at depth ``j`` only partial orderings whose
    first ``j`` columns are minimal survive.  Two unused vertices that are
    twins (same neighbourhood apart from each other) give equivalent
    branches, so only the smaller label is expanded.
    """
    if n <= 1:
        return 0
    smaller_twins = [0] * n
    for v in range(n):
        for u in range(v):
            if rows[u] & ~(1 << v) == rows[v] & ~(1 << u):
                smaller_twins[v] |= 1 << u
    beam: list[tuple[tuple[int, ...], int]] = [((), 0)]
    code = 0
    for j in range(n):
        best = -1
        nxt: list[tuple[tuple[int, ...], int]] = []
        for perm, used in beam:
            for v in range(n):
                if used >> v & 1 or smaller_twins[v] & ~used:
                    continue
                col = 0
                for x in perm:
                    col = col << 1 | (rows[x] >> v & 1)
                if best < 0 or col < best:
                    best = col
                    nxt = [(perm + (v,), used | 1 << v)]
                elif col == best:
                    nxt.append((perm + (v,), used | 1 << v))
        code = code << j | best
        beam = nxt
    return code
