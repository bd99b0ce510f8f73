"""Labelled enumeration: connected graphs (edge-mask scan) and trees (Pruefer codes)."""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache
from itertools import product
from typing import Iterator

import numpy as np

from .. import kernels
from ..graph import Graph, make_graph, pair_count

MAX_SCAN_ORDER = 7
MAX_TREE_ORDER = 9


class EnumerationRangeError(ValueError):
    pass


def _check_scan_order(n: int) -> None:
    if not 2 <= n <= MAX_SCAN_ORDER:
        raise EnumerationRangeError(
            f"internal enumeration covers 2 <= n <= {MAX_SCAN_ORDER}; "
            "for larger orders supply graphs as a graph6 stream"
        )


def _chunks(n: int, jobs: int) -> list[tuple[int, int]]:
    """Split the edge-mask space by its top bits into contiguous, ordered ranges."""
    E = pair_count(n)
    prefix_bits = 0
    while (1 << prefix_bits) < 4 * jobs and prefix_bits < E:
        prefix_bits += 1
    step = 1 << (E - prefix_bits)
    return [(c * step, (c + 1) * step) for c in range(1 << prefix_bits)]


def _scan_chunk(args: tuple[int, int, int]) -> tuple[np.ndarray, np.ndarray]:
    n, lo, hi = args
    return kernels.scan(n, lo, hi)


def scan_connected(n: int, jobs: int = 1) -> tuple[np.ndarray, np.ndarray]:
    """Edge masks of all connected labelled graphs on ``n`` vertices and their deletion numbers.

    Results are in ascending mask order regardless of ``jobs``.
    """
    _check_scan_order(n)
    return _scan_cached(n, max(1, jobs))


@lru_cache(maxsize=None)
def _scan_cached(n: int, jobs: int) -> tuple[np.ndarray, np.ndarray]:
    if jobs == 1:
        masks, ks = kernels.scan(n, 0, 1 << pair_count(n))
    else:
        tasks = [(n, lo, hi) for lo, hi in _chunks(n, jobs)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_scan_chunk, tasks))
        masks = np.concatenate([p[0] for p in parts])
        ks = np.concatenate([p[1] for p in parts])
    masks.setflags(write=False)
    ks.setflags(write=False)
    return masks, ks


def enumerate_connected_graphs(n: int, jobs: int = 1) -> Iterator[Graph]:
    masks, _ = scan_connected(n, jobs)
    for mask in masks.tolist():
        yield Graph.from_mask(n, mask)


def brute_force_connected_count(n: int) -> int:
    """Independent count: test every edge subset with a plain BFS on edge lists."""
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    count = 0
    for mask in range(1 << len(pairs)):
        adj: dict[int, list[int]] = {v: [] for v in range(n)}
        for b, (i, j) in enumerate(pairs):
            if mask >> b & 1:
                adj[i].append(j)
                adj[j].append(i)
        seen = {0}
        stack = [0]
        while stack:
            for u in adj[stack.pop()]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        count += len(seen) == n
    return count


def prufer_decode(seq: tuple[int, ...] | list[int], n: int) -> Graph:
    """Labelled tree on ``0..n-1`` with Pruefer code ``seq`` (length ``n - 2``)."""
    if n == 1:
        return make_graph(1, [])
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = next(v for v in range(n) if degree[v] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = (w for w in range(n) if degree[w] == 1)
    edges.append((u, v))
    return make_graph(n, edges)


def enumerate_labeled_trees(n: int) -> Iterator[Graph]:
    """Every labelled tree on ``n`` vertices once, in lexicographic Pruefer-code order."""
    if not 1 <= n <= MAX_TREE_ORDER:
        raise EnumerationRangeError(f"tree enumeration covers 1 <= n <= {MAX_TREE_ORDER}")
    if n <= 2:
        yield make_graph(n, [(0, 1)] if n == 2 else [])
        return
    for seq in product(range(n), repeat=n - 2):
        yield prufer_decode(seq, n)


def tree_degree_table(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Sorted degree sequences of all labelled trees and how many trees share each.

    Uses the Pruefer property ``d(v) = 1 + (occurrences of v in the code)``.
    """
    if not 2 <= n <= MAX_TREE_ORDER:
        raise EnumerationRangeError(f"tree tables cover 2 <= n <= {MAX_TREE_ORDER}")
    if n == 2:
        return np.array([[1, 1]]), np.array([1])
    codes = np.indices((n,) * (n - 2), dtype=np.int8).reshape(n - 2, -1).T
    deg = np.ones((codes.shape[0], n), dtype=np.int8)
    labels = np.arange(n, dtype=np.int8)
    for col in range(n - 2):
        deg += codes[:, col, None] == labels
    deg = -np.sort(-deg, axis=1)
    rows, counts = np.unique(deg, axis=0, return_counts=True)
    return rows, counts


def random_connected_graph(n: int, rng: random.Random, density: float | None = None) -> Graph:
    """Random spanning tree (uniform Pruefer code) plus independent extra edges."""
    if density is None:
        density = rng.random()
    if n <= 2:
        return make_graph(n, [(0, 1)] if n == 2 else [])
    tree = prufer_decode([rng.randrange(n) for _ in range(n - 2)], n)
    edges = set(tree.edges())
    for j in range(1, n):
        for i in range(j):
            if rng.random() < density:
                edges.add((i, j))
    return make_graph(n, edges)
