import random
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cliquesat.graph import (
    MAX_ORDER,
    Graph,
    complete,
    cycle,
    disjoint_union,
    empty,
    independent,
    join,
    mask_of,
    path,
    star,
)


def test_empty():
    g = empty(3)
    assert g.n == 3 and g.num_edges() == 0
    assert empty(1).n == 1
    assert empty(64).n == 64
    assert empty(MAX_ORDER).n == MAX_ORDER


@pytest.mark.parametrize("n", [0, -1, MAX_ORDER + 1])
def test_empty_rejects_bad_order(n):
    with pytest.raises(ValueError):
        empty(n)


def test_add_edge():
    k2 = empty(2).add_edge(0, 1)
    assert k2 == complete(2)
    assert k2.add_edge(0, 1) == k2
    assert path(3).add_edge(0, 2) == complete(3)


@pytest.mark.parametrize("i,j", [(1, 1), (0, 3), (-1, 0)])
def test_add_edge_errors(i, j):
    with pytest.raises(ValueError):
        empty(3).add_edge(i, j)


def test_add_edge_leaves_original_untouched():
    g = empty(3)
    g.add_edge(0, 1)
    assert g.num_edges() == 0


def test_constructors():
    s = join(complete(1), independent(3))
    assert s == star(3)
    u = disjoint_union(complete(3), independent(4))
    assert u.n == 7 and u.num_edges() == 3
    assert join(complete(2), complete(3)) == complete(5)


def test_width_overflow():
    with pytest.raises(ValueError):
        disjoint_union(empty(100), empty(100))


def test_induced():
    g, index = complete(5).induced(mask_of([0, 2, 4]))
    assert g == complete(3) and index == [0, 2, 4]
    h, index = cycle(5).induced(mask_of([1, 2]))
    assert h == complete(2)


def test_induced_empty_set_gives_order_zero():
    g, index = cycle(5).induced(0)
    assert g.n == 0 and index == [] and g.num_edges() == 0
    assert g.non_edges() == [] and g.is_connected()


def test_non_edges():
    assert complete(4).non_edges() == []
    assert independent(3).non_edges() == [(0, 1), (0, 2), (1, 2)]


def test_non_edge_count_identity():
    rng = random.Random(7)
    for _ in range(50):
        n = rng.randint(1, 30)
        edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.3]
        g = Graph.from_edges(n, edges)
        assert len(g.non_edges()) == comb(n, 2) - len(edges)
        assert g.num_edges() == len(edges)


def test_invalid_rows_rejected():
    with pytest.raises(ValueError):
        Graph(2, [0b10, 0])  # asymmetric
    with pytest.raises(ValueError):
        Graph(2, [0b01, 0])  # loop
    with pytest.raises(ValueError):
        Graph(2, [0b100, 0])  # out of range


edge_scripts = st.integers(1, 20).flatmap(
    lambda n: st.tuples(
        st.just(n),
        st.lists(st.tuples(st.booleans(), st.integers(0, n - 1), st.integers(0, n - 1)),
                 max_size=60),
    )
)


@settings(max_examples=200, deadline=None)
@given(edge_scripts)
def test_symmetry_after_mutations(script):
    n, ops = script
    g = empty(n)
    for add, i, j in ops:
        if i == j:
            continue
        g = g.add_edge(i, j) if add else g.remove_edge(i, j)
    for i in range(n):
        assert not g.has_edge(i, i)
        for j in range(n):
            assert g.has_edge(i, j) == g.has_edge(j, i)
    Graph(n, g.rows)  # full validation


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 10), st.integers(1, 10), st.randoms(use_true_random=False))
def test_join_union_edge_counts(a, b, rnd):
    g = Graph.from_edges(a, [(i, j) for i in range(a) for j in range(i + 1, a) if rnd.random() < .5])
    h = Graph.from_edges(b, [(i, j) for i in range(b) for j in range(i + 1, b) if rnd.random() < .5])
    assert join(g, h).num_edges() == g.num_edges() + h.num_edges() + a * b
    assert disjoint_union(g, h).num_edges() == g.num_edges() + h.num_edges()


def test_components_and_connectivity():
    g = disjoint_union(path(3), complete(2))
    assert g.components() == [0b00111, 0b11000]
    assert not g.is_connected()
    assert path(4).is_connected()
