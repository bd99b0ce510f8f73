import numpy as np
import pytest

from quasirandic.graph import is_connected, is_tree
from quasirandic.verifier.enumeration import (
    EnumerationRangeError,
    _chunks,
    enumerate_connected_graphs,
    enumerate_labeled_trees,
    prufer_decode,
    scan_connected,
    tree_degree_table,
)


@pytest.mark.parametrize("n, count", [(2, 1), (3, 4), (4, 38)])
def test_connected_counts(n, count):
    gs = list(enumerate_connected_graphs(n))
    assert len(gs) == count
    assert all(is_connected(G) for G in gs)
    assert len({G.rows for G in gs}) == count


def test_range_guard():
    for n in (1, 8):
        with pytest.raises(EnumerationRangeError):
            list(enumerate_connected_graphs(n))
    with pytest.raises(EnumerationRangeError):
        list(enumerate_labeled_trees(10))


@pytest.mark.parametrize("n", range(1, 7))
def test_tree_counts(n):
    trees = list(enumerate_labeled_trees(n))
    assert len(trees) == max(1, n ** (n - 2))
    assert all(is_tree(T) for T in trees)
    assert len({T.rows for T in trees}) == len(trees)


def test_prufer_example():
    T = prufer_decode((3, 3), 4)
    assert T.edges() == [(0, 3), (1, 3), (2, 3)]


def test_degree_table_matches_trees():
    for n in range(2, 7):
        rows, counts = tree_degree_table(n)
        assert counts.sum() == n ** (n - 2)
        direct = {}
        for T in enumerate_labeled_trees(n):
            key = tuple(sorted(T.degrees(), reverse=True))
            direct[key] = direct.get(key, 0) + 1
        assert {tuple(int(x) for x in r): int(c) for r, c in zip(rows, counts)} == direct


def test_chunks_cover_space():
    for jobs in (1, 2, 3, 8):
        chunks = _chunks(5, jobs)
        assert chunks[0][0] == 0 and chunks[-1][1] == 1 << 10
        assert all(a[1] == b[0] for a, b in zip(chunks, chunks[1:]))


def test_scan_is_read_only_and_job_invariant():
    m1, k1 = scan_connected(5, 1)
    m2, k2 = scan_connected(5, 2)
    assert np.array_equal(m1, m2) and np.array_equal(k1, k2)
    with pytest.raises(ValueError):
        m1[0] = 0
