import random
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cliquesat.graph import Graph, complete, cycle, disjoint_union, independent, mask_of, star
from cliquesat.patterns import (
    CliquePattern,
    Embedding,
    contains_pattern,
    contains_pattern_through,
    enumerate_packings,
    find_clique,
    find_disjoint_cliques,
)
from cliquesat.saturation import build_extremal, theorem_n_bound

from oracles import contains_by_tuples, count_disjoint_edge_pairs_in_complete


def test_pattern_validation():
    with pytest.raises(ValueError):
        CliquePattern(1, 2, 2)
    with pytest.raises(ValueError):
        CliquePattern(3, 2, 2)
    with pytest.raises(ValueError):
        CliquePattern(2, 2, 0)
    pat = CliquePattern(2, 3, 3)
    assert pat.sizes() == (2, 3, 3)
    assert pat.order() == 8
    assert CliquePattern(4, 4, 1).sizes() == (4,)


def test_find_clique_basics():
    c = find_clique(cycle(5), 2)
    assert c is not None and c.bit_count() == 2 and cycle(5).is_clique(c)
    assert find_clique(cycle(5), 3) is None


def test_find_clique_in_construction_matches_brute_force():
    g = build_extremal(13, CliquePattern(2, 3, 2))
    brute = [s for s in combinations(range(13), 4) if g.is_clique(mask_of(s))]
    assert brute == [(0, 1, 2, 3)]
    assert find_clique(g, 4) == mask_of(brute[0])


def test_find_clique_respects_allowed():
    assert find_clique(complete(5), 3, mask_of([1, 3, 4])) == mask_of([1, 3, 4])
    assert find_clique(complete(5), 3, mask_of([1, 3])) is None


def test_find_disjoint_cliques():
    emb = find_disjoint_cliques(complete(5), [2, 3])
    assert emb is not None and emb.is_valid(complete(5), [2, 3])
    assert find_disjoint_cliques(star(4), [2, 2]) is None


GRID = [CliquePattern(p, q, t) for p in (2, 3, 4) for q in (2, 3, 4) if q >= p for t in (2, 3)]


@pytest.mark.parametrize("pat", GRID, ids=str)
def test_construction_is_pattern_free(pat):
    g = build_extremal(theorem_n_bound(pat) + 1, pat)
    assert find_disjoint_cliques(g, pat.sizes()) is None


def test_smallest_construction_free_by_tuple_oracle():
    pat = CliquePattern(2, 2, 2)
    g = build_extremal(7, pat)
    assert not contains_by_tuples(g, pat.sizes())


def test_contains_pattern():
    for pat in GRID:
        emb = contains_pattern(complete(pat.order()), pat)
        assert emb is not None and emb.parts[0].bit_count() == pat.p
        assert contains_pattern(independent(10), pat) is None


def test_every_non_edge_completes_pattern_in_construction():
    pat = CliquePattern(2, 3, 2)
    g = build_extremal(13, pat)
    for u, v in g.non_edges():
        emb = contains_pattern(g.add_edge(u, v), pat)
        assert emb is not None and emb.is_valid(g.add_edge(u, v), pat.sizes())


def test_enumerate_packings_counts():
    assert len(enumerate_packings(complete(4), [3], limit=10)) == 4
    two_triangles = disjoint_union(complete(3), complete(3))
    assert len(enumerate_packings(two_triangles, [3, 3], limit=10)) == 1
    expected = count_disjoint_edge_pairs_in_complete(5)
    assert expected == 15
    packs = enumerate_packings(complete(5), [2, 2], limit=100)
    assert len(packs) == expected
    assert len({p.key() for p in packs}) == expected


def test_enumerate_packings_limit():
    assert len(enumerate_packings(complete(6), [2, 2], limit=5)) == 5
    with pytest.raises(ValueError):
        enumerate_packings(complete(4), [2], limit=0)


def _brute_packing_count(g, sizes):
    """Unordered families of disjoint cliques with the given size multiset."""
    n = g.n
    found = set()

    def rec(k, used, parts):
        if k == len(sizes):
            found.add(frozenset(parts))
            return
        for s in combinations(range(n), sizes[k]):
            m = mask_of(s)
            if m & used or not g.is_clique(m):
                continue
            rec(k + 1, used | m, parts + [m])

    rec(0, 0, [])
    return len(found)


def _random_graph(rng, n, p):
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])


def test_enumerate_packings_matches_brute_force():
    rng = random.Random(5)
    for _ in range(60):
        g = _random_graph(rng, rng.randint(4, 8), rng.uniform(0.4, 0.9))
        sizes = rng.choice([[2, 2], [3, 2], [3, 3], [2, 2, 2], [3, 2, 2]])
        packs = enumerate_packings(g, sizes, limit=10**6)
        for emb in packs:
            assert emb.is_valid(g, sizes)
        assert len({p.key() for p in packs}) == len(packs)
        assert len(packs) == _brute_packing_count(g, sizes)


patterns_upto_8 = [CliquePattern(p, q, t) for p in range(2, 9) for q in range(p, 9)
                   for t in range(1, 5) if p + (t - 1) * q <= 8]


@settings(max_examples=300, deadline=None)
@given(st.integers(1, 8), st.floats(0, 1), st.sampled_from(patterns_upto_8),
       st.randoms(use_true_random=False))
def test_detector_agrees_with_tuple_oracle(n, p, pat, rnd):
    g = _random_graph(rnd, n, p)
    emb = contains_pattern(g, pat)
    assert (emb is not None) == contains_by_tuples(g, pat.sizes())
    if emb is not None:
        assert emb.is_valid(g, pat.sizes())
        assert emb.parts[0].bit_count() == pat.p


@settings(max_examples=200, deadline=None)
@given(st.integers(2, 9), st.floats(0, 1), st.sampled_from(patterns_upto_8),
       st.randoms(use_true_random=False))
def test_monotone_under_edge_addition(n, p, pat, rnd):
    g = _random_graph(rnd, n, p)
    if contains_pattern(g, pat) is None:
        return
    for u, v in g.non_edges():
        assert contains_pattern(g.add_edge(u, v), pat) is not None


@settings(max_examples=200, deadline=None)
@given(st.integers(2, 9), st.floats(0, 1), st.sampled_from(patterns_upto_8),
       st.randoms(use_true_random=False))
def test_through_search_matches_general_detector_on_free_graphs(n, p, pat, rnd):
    g = _random_graph(rnd, n, p)
    if contains_pattern(g, pat) is not None:
        return
    for u, v in g.non_edges():
        h = g.add_edge(u, v)
        direct = contains_pattern(h, pat)
        through = contains_pattern_through(h, pat, u, v)
        assert (direct is None) == (through is None)
        if through is not None:
            assert through.is_valid(h, pat.sizes())


def test_embedding_validity():
    g = complete(5)
    assert Embedding((mask_of([0, 1]), mask_of([2, 3, 4]))).is_valid(g, [2, 3])
    assert not Embedding((mask_of([0, 1]), mask_of([1, 3, 4]))).is_valid(g, [2, 3])
    assert not Embedding((mask_of([0, 1]), mask_of([2, 3]))).is_valid(g, [2, 3])
