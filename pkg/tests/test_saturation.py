from math import comb

import pytest

from cliquesat.graph import complete, disjoint_union, independent, join
from cliquesat.patterns import CliquePattern
from cliquesat.saturation import (
    build_extremal,
    certify_saturated,
    is_pattern_free,
    min_construction_order,
    sat_formula,
    theorem_n_bound,
)
from cliquesat.search import compute_sat, enumerate_graphs

from oracles import contains_by_tuples

GRID = [CliquePattern(p, q, t) for p in (2, 3, 4) for q in (2, 3, 4) if q >= p for t in (2, 3)]


def test_sat_formula_values():
    for n in range(4, 61):
        assert sat_formula(n, CliquePattern(2, 2, 2)) == 3
    assert sat_formula(13, CliquePattern(2, 3, 2)) == 6
    assert sat_formula(20, CliquePattern(3, 3, 2)) == 25
    assert sat_formula(16, CliquePattern(3, 3, 2)) == 21


def test_sat_formula_single_clique_identity():
    for p in range(2, 9):
        for n in range(p, 61):
            assert sat_formula(n, CliquePattern(p, p, 1)) == comb(n, 2) - comb(n - p + 2, 2)


def test_sat_formula_single_clique_against_search():
    # K_3-saturated graphs on n vertices: the star is minimum with n-1 edges
    for n in range(3, 8):
        report = compute_sat(n, CliquePattern(3, 3, 1))
        assert report.sat_value == n - 1 == sat_formula(n, CliquePattern(3, 3, 1))
    # K_2-saturated means edgeless
    assert compute_sat(5, CliquePattern(2, 2, 1)).sat_value == 0


def test_sat_formula_rejects_small_n():
    with pytest.raises(ValueError):
        sat_formula(4, CliquePattern(2, 3, 2))


@pytest.mark.parametrize("pat,bound", [((2, 2, 2), 6), ((2, 3, 2), 12), ((3, 3, 2), 15),
                                        ((4, 4, 3), 46)])
def test_theorem_n_bound(pat, bound):
    assert theorem_n_bound(CliquePattern(*pat)) == bound


def test_build_extremal_examples():
    g = build_extremal(7, CliquePattern(2, 2, 2))
    assert g == disjoint_union(complete(3), independent(4))
    g = build_extremal(13, CliquePattern(2, 3, 2))
    assert g == disjoint_union(complete(4), independent(9))
    g = build_extremal(16, CliquePattern(3, 3, 2))
    assert g == join(complete(1), disjoint_union(complete(4), independent(11)))
    assert g.num_edges() == 21 == sat_formula(16, CliquePattern(3, 3, 2))


def test_build_extremal_layout():
    pat = CliquePattern(4, 4, 3)
    g = build_extremal(20, pat)
    apex = [0, 1]
    blocks = [[2, 3, 4, 5, 6], [7, 8, 9, 10, 11]]
    for a in apex:
        assert g.degree(a) == 19
    for block in blocks:
        for x in block:
            assert set(i for i in range(20) if g.has_edge(x, i)) == set(apex) | set(block) - {x}
    for w in range(12, 20):
        assert set(i for i in range(20) if g.has_edge(w, i)) == set(apex)


def test_build_extremal_rejects_small_n():
    pat = CliquePattern(3, 3, 3)
    assert min_construction_order(pat) == 9
    build_extremal(9, pat)
    with pytest.raises(ValueError):
        build_extremal(8, pat)


def test_edge_count_equals_formula_over_grid():
    for pat in GRID + [CliquePattern(p, q, 1) for p in (2, 3, 5) for q in (p,)]:
        for n in range(max(pat.order(), min_construction_order(pat)), 50):
            assert build_extremal(n, pat).num_edges() == sat_formula(n, pat)


def test_is_pattern_free():
    pat = CliquePattern(2, 3, 2)
    assert is_pattern_free(build_extremal(13, pat), pat)
    assert not is_pattern_free(complete(13), pat)
    assert is_pattern_free(independent(13), pat)


@pytest.mark.parametrize("pat", GRID, ids=str)
def test_construction_certified_on_grid(pat):
    n = theorem_n_bound(pat) + 1
    v = certify_saturated(build_extremal(n, pat), pat)
    assert v.saturated and v.free and v.failing_witness is None and not v.below_bound


def test_block_edge_removed():
    pat = CliquePattern(2, 3, 2)
    g = build_extremal(13, pat).remove_edge(2, 3)
    v = certify_saturated(g, pat)
    assert v.free and not v.saturated and v.non_edge is not None
    full = certify_saturated(g, pat, collect_all=True)
    assert (2, 3) in full.failing_non_edges
    assert full.non_edge == v.non_edge == full.failing_non_edges[0]
    # the least failing non-edge is (0, 4): K_2 on it leaves no triangle
    assert v.non_edge == (0, 4)
    g01 = build_extremal(13, pat).remove_edge(0, 1)
    assert certify_saturated(g01, pat).non_edge == (0, 1)


def test_triangle_plus_four_isolated():
    pat = CliquePattern(2, 2, 2)
    g = disjoint_union(complete(3), independent(4))
    assert len(g.non_edges()) == 18
    for u, v in g.non_edges():
        assert contains_by_tuples(g.add_edge(u, v), pat.sizes())
    assert not contains_by_tuples(g, pat.sizes())
    assert certify_saturated(g, pat).saturated


def test_containing_graph_reports_embedding():
    pat = CliquePattern(2, 2, 2)
    v = certify_saturated(complete(4), pat)
    assert not v.free and not v.saturated
    assert v.embedding.is_valid(complete(4), pat.sizes())


def test_saturated_small_graphs_confirmed_by_tuple_oracle():
    # every saturated graph with at most 6 edges on 7 vertices, checked independently
    checked = 0
    for pat in [CliquePattern(2, 2, 2), CliquePattern(2, 3, 2), CliquePattern(3, 3, 1)]:
        for m in range(0, 7):
            for support in enumerate_graphs(7, m):
                if support.n > 7:
                    continue
                g = support.pad(7)
                verdict = certify_saturated(g, pat)
                oracle_free = not contains_by_tuples(g, pat.sizes())
                oracle_sat = oracle_free and all(
                    contains_by_tuples(g.add_edge(u, v), pat.sizes()) for u, v in g.non_edges())
                assert verdict.saturated == oracle_sat
                assert verdict.free == oracle_free
                checked += verdict.saturated
    assert checked > 0


@pytest.mark.parametrize("pat", GRID, ids=str)
def test_min_degree_on_grid(pat):
    g = build_extremal(theorem_n_bound(pat) + 1, pat)
    assert g.min_degree() == pat.p - 2


@pytest.mark.parametrize("pat", GRID[:6], ids=str)
def test_removing_any_edge_breaks_saturation(pat):
    g = build_extremal(theorem_n_bound(pat) + 1, pat)
    for e in g.edges():
        h = g.remove_edge(*e)
        v = certify_saturated(h, pat)
        assert not v.saturated
        assert is_pattern_free(h.add_edge(*e), pat)


def test_workers_do_not_change_verdict():
    pat = CliquePattern(2, 3, 2)
    g = build_extremal(13, pat).remove_edge(2, 3)
    one = certify_saturated(g, pat, collect_all=True)
    two = certify_saturated(g, pat, collect_all=True, workers=2)
    assert one.failing_non_edges == two.failing_non_edges
    assert certify_saturated(g, pat, workers=2).non_edge == one.non_edge


def test_below_bound_flag():
    pat = CliquePattern(2, 2, 2)
    assert certify_saturated(build_extremal(6, pat), pat).below_bound
    assert not certify_saturated(build_extremal(7, pat), pat).below_bound
