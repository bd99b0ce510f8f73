import pytest
from hypothesis import given
from hypothesis import strategies as st

from quasirandic.graph import (
    DegreeMultiset,
    Graph,
    GraphError,
    add_edge,
    bullet,
    degree_multiset,
    delete_vertices,
    disjoint_union,
    is_connected,
    is_tree,
    join,
    make_graph,
    pair_count,
    pair_index,
    relabel,
    remove_edge,
)
from quasirandic.constructions import complete, cycle, empty, path, star

from conftest import graphs


def test_pair_index_is_column_major():
    order = [(i, j) for j in range(1, 8) for i in range(j)]
    assert [pair_index(i, j) for i, j in order] == list(range(pair_count(8)))


def test_rejects_self_loop_and_bad_vertex():
    with pytest.raises(GraphError):
        make_graph(3, [(1, 1)])
    with pytest.raises(GraphError):
        make_graph(3, [(0, 3)])
    with pytest.raises(GraphError):
        Graph(2, (2, 0))  # asymmetric rows
    with pytest.raises(GraphError):
        make_graph(65, [])


def test_duplicate_edges_collapse():
    G = make_graph(3, [(0, 1), (1, 0), (0, 1)])
    assert G.m == 1


def test_basic_queries():
    G = path(4)
    assert G.degrees() == [1, 2, 2, 1]
    assert G.edges() == [(0, 1), (1, 2), (2, 3)]
    assert G.neighbors(1) == [0, 2]
    assert list(G.non_edges()) == [(0, 2), (0, 3), (1, 3)]
    assert is_tree(G) and is_connected(G)
    assert not is_tree(cycle(4))


def test_mask_round_trip():
    G = cycle(5)
    assert Graph.from_mask(5, G.to_mask()) == G


def test_delete_vertices_relabels_in_order():
    H = delete_vertices(path(5), [1])
    assert H.n == 4 and H.edges() == [(1, 2), (2, 3)]
    with pytest.raises(GraphError):
        delete_vertices(path(2), [0, 1])


def test_join_puts_first_operand_first():
    G = join(complete(2), path(3))
    assert G.n == 5 and G.m == 1 + 2 + 6
    assert G.has_edge(0, 1) and G.has_edge(2, 3) and not G.has_edge(2, 4)
    assert degree_multiset(G) == DegreeMultiset((4, 4, 4, 3, 3))


def test_bullet():
    G = bullet(empty(2), star(4), 0, 1)
    # quasi vertices 0, 1 see the centre (2) and one leaf (3)
    assert sorted(G.neighbors(0)) == [2, 3]
    assert G.degrees() == [2, 2, 5, 3, 1, 1]
    with pytest.raises(GraphError):
        bullet(empty(1), star(3), 1, 1)


def test_disjoint_union_is_disconnected():
    G = disjoint_union(path(2), path(3))
    assert G.n == 5 and G.m == 3 and not is_connected(G)


def test_add_remove_edge():
    G = add_edge(path(3), 0, 2)
    assert G == cycle(3)
    assert remove_edge(G, 0, 2) == path(3)


def test_degree_multiset_notation():
    D = DegreeMultiset.from_counts({3: 1, 2: 4, 1: 3})
    assert str(D) == "[3,2^4,1^3]"
    assert D.n == 8 and D.total() == 14
    assert DegreeMultiset((1, 2, 2, 1)).degrees == (2, 2, 1, 1)


@given(graphs(max_n=9), st.randoms(use_true_random=False))
def test_relabel_preserves_degree_multiset(G, rnd):
    perm = list(range(G.n))
    rnd.shuffle(perm)
    H = relabel(G, perm)
    assert degree_multiset(H) == degree_multiset(G)
    assert H.m == G.m
    assert all(H.has_edge(perm[u], perm[v]) for u, v in G.edges())
