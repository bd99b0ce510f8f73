import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from quasirandic.constructions import complete, cycle, join_family, path, star
from quasirandic.graph import DegreeMultiset, degree_multiset, make_graph
from quasirandic.indices import (
    ExponentError,
    close,
    exact_zeroth_order,
    first_zagreb,
    general_randic_edge,
    zeroth_order_general_randic,
)

from conftest import graphs


def test_zeroth_order_examples():
    assert zeroth_order_general_randic(path(4), 2) == 10
    assert zeroth_order_general_randic(cycle(5), -0.5) == pytest.approx(5 / math.sqrt(2), rel=1e-12)
    assert zeroth_order_general_randic(join_family(5, 1, "path"), -1) == pytest.approx(23 / 12, rel=1e-12)


def test_edge_randic_examples():
    assert general_randic_edge(path(3), -0.5) == pytest.approx(math.sqrt(2), rel=1e-12)
    assert general_randic_edge(complete(3), 1) == 12
    assert general_randic_edge(star(4), -0.5) == pytest.approx(math.sqrt(3), rel=1e-12)


@pytest.mark.parametrize("bad", [0, 0.0, float("nan"), float("inf")])
def test_alpha_rejected(bad):
    with pytest.raises(ExponentError):
        zeroth_order_general_randic(path(3), bad)


def test_isolated_vertex_domain():
    G = make_graph(3, [(0, 1)])
    with pytest.raises(ZeroDivisionError):
        zeroth_order_general_randic(G, -1)
    assert zeroth_order_general_randic(G, 2) == 2


def test_exact_matches_float():
    D = DegreeMultiset((4, 3, 3, 2, 2))
    assert exact_zeroth_order(D, -1) == Fraction(23, 12)
    with pytest.raises(ValueError):
        exact_zeroth_order(D, 0.5)


def test_close():
    assert close(1.0, 1.0 + 1e-12)
    assert not close(1.0, 1.0 + 1e-6)


@given(graphs(max_n=12))
def test_first_order_counts_edges(G):
    assert zeroth_order_general_randic(G, 1) == 2 * G.m
    assert first_zagreb(G) == zeroth_order_general_randic(G, 2)


@given(graphs(min_n=2, max_n=10), st.sampled_from([-2, -1, -0.5, 0.5, 2, 3]))
def test_multiset_suffices(G, a):
    if 0 in G.degrees() and a < 0:
        return
    assert zeroth_order_general_randic(G, a) == zeroth_order_general_randic(degree_multiset(G), a)
