import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from strategies import connected_ish, cs, epsilons, graphs
from surpluscut import generators as gen
from surpluscut.embedding import embed
from surpluscut.errors import ArcsinDomain, InvalidParameter, InvalidPartialCut
from surpluscut.graph import Graph, induced_subgraph, remove_isolated
from surpluscut.oracle import exact_maxcut
from surpluscut.rounding import (
    Cut,
    TrialPlan,
    best_of_trials,
    dichotomy_cut,
    expected_cut_from_cosines,
    expected_cut_value,
    extend_cut,
    format_cut,
    hyperplane_cut,
    local_search_refine,
    parse_cut,
    trial_seed,
)
from surpluscut.sparsity import is_sparse


def test_orthogonal_vectors_give_half():
    assert expected_cut_from_cosines(7, np.zeros(7)) == 3.5


def test_arcsin_domain_guarded():
    with pytest.raises(ArcsinDomain):
        expected_cut_from_cosines(1, np.array([1.1]))


def test_single_edge_beats_half():
    assert expected_cut_value(embed(gen.complete(2), 1, 1)) > 0.5


def test_petersen_expected_value_above_lower_bound():
    value = expected_cut_value(embed(gen.petersen(), 1, 1))
    assert value >= 7.5 + 10 * math.sqrt(3) / 512


def test_hyperplane_cut_deterministic():
    e = embed(gen.petersen(), 1, 1)
    a = hyperplane_cut(e, trial_seed(3, 4))
    b = hyperplane_cut(e, trial_seed(3, 4))
    assert a == b
    assert 0 <= a.crossing <= 15


def test_local_search_examples():
    k2 = gen.complete(2)
    assert local_search_refine(k2, Cut.from_sides(k2, [0, 0])).crossing == 1
    p = gen.petersen()
    refined = local_search_refine(p, Cut.from_sides(p, np.zeros(10)))
    assert refined.crossing >= 8
    assert local_search_refine(p, refined) == refined


def test_single_trial_matches_hyperplane_cut():
    p = gen.petersen()
    e = embed(p, 1, 1)
    cut, stats = best_of_trials(e, TrialPlan(9, 1))
    assert cut == local_search_refine(p, hyperplane_cut(e, trial_seed(9, 0)))
    raw, _ = best_of_trials(e, TrialPlan(9, 1), refine=False)
    assert raw == hyperplane_cut(e, trial_seed(9, 0))
    assert stats.trials == 1 and stats.best_trial == 0


@pytest.mark.parametrize("seed", [0, 1])
def test_petersen_best_of_200_reaches_maximum(seed):
    cut, _ = best_of_trials(embed(gen.petersen(), 1, 1), TrialPlan(seed, 200))
    assert cut.crossing == 12


def test_parallel_trials_identical():
    g, _ = remove_isolated(gen.gnp(60, 0.2, 5))
    e = embed(g, 1, 4)
    serial = best_of_trials(e, TrialPlan(2, 50), workers=1)
    threaded = best_of_trials(e, TrialPlan(2, 50), workers=4)
    assert serial[0] == threaded[0] and serial[1] == threaded[1]


def test_trial_plan_rejects_zero():
    with pytest.raises(InvalidParameter):
        TrialPlan(0, 0)


def test_cut_text_roundtrip():
    p = gen.petersen()
    cut = Cut.from_sides(p, [0, 0, 1, 0, 1, 1, 1, 0, 0, 0])
    text = format_cut(cut)
    assert text.splitlines()[1] == f"crossing={cut.crossing} surplus={cut.surplus:.1f}"
    assert parse_cut(text, p) == cut
    with pytest.raises(InvalidPartialCut):
        parse_cut("0000000000\ncrossing=3 surplus=-4.5\n", p)


def test_extend_full_vertex_set_unchanged():
    p = gen.petersen()
    cut = Cut.from_sides(p, [0, 1] * 5)
    assert extend_cut(p, range(10), cut) == cut


def test_extend_two_disjoint_edges():
    g = Graph.from_edges([(0, 1), (2, 3)], 4)
    sub, _ = induced_subgraph(g, [0, 1])
    out = extend_cut(g, [0, 1], Cut.from_sides(sub, [0, 1]))
    assert out.surplus >= 0.5


def test_extend_petersen_outer_cycle():
    p = gen.petersen()
    outer, _ = induced_subgraph(p, range(5))
    partial = Cut.from_sides(outer, [0, 1, 0, 1, 1])
    assert partial.crossing == 4
    assert extend_cut(p, range(5), partial).surplus >= 1.5


def test_extend_rejects_mismatch():
    p = gen.petersen()
    with pytest.raises(InvalidPartialCut):
        extend_cut(p, range(5), Cut.from_sides(p, np.zeros(10)))


def test_dichotomy_tree_is_degenerate():
    res = dichotomy_cut(gen.path(30), 1, 1, plan=TrialPlan(0, 20))
    assert res.branch == "degenerate" and res.degeneracy == 1
    assert res.cut.surplus >= res.bound


def test_dichotomy_dense_core_on_k50():
    res = dichotomy_cut(gen.complete(50), 0, 1, plan=TrialPlan(0, 20))
    assert res.branch == "dense-core"
    assert res.threshold < 49 and res.degeneracy == 49
    assert res.cut.surplus >= res.bound


@pytest.mark.parametrize("scale", [0.25, 4.0])
def test_dichotomy_both_branches_on_triangle_free(scale):
    g = gen.random_triangle_free(400, 0)
    res = dichotomy_cut(g, 1, 1, scale=scale, plan=TrialPlan(0, 10))
    assert res.branch == ("dense-core" if scale < 1 else "degenerate")
    assert res.cut.surplus >= res.bound


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=14), st.integers(0, 2**16))
def test_local_search_floor(g, seed):
    side = np.random.default_rng(seed).integers(0, 2, g.n)
    start = Cut.from_sides(g, side)
    out = local_search_refine(g, start)
    assert out.crossing >= max(start.crossing, math.ceil(g.m / 2))


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=14), st.integers(0, 2**16))
def test_extend_never_lowers_surplus(g, seed):
    rng = np.random.default_rng(seed)
    u = [v for v in range(g.n) if rng.random() < 0.5]
    sub, _ = induced_subgraph(g, u)
    partial = Cut.from_sides(sub, rng.integers(0, 2, sub.n))
    out = extend_cut(g, u, partial)
    assert 2 * out.crossing - g.m >= 2 * partial.crossing - sub.m


@settings(max_examples=80, deadline=None)
@given(connected_ish(max_n=12), epsilons, cs, st.integers(0, 100))
def test_best_of_trials_below_exact(g, eps, c, seed):
    mc, _ = exact_maxcut(g)
    cut, stats = best_of_trials(embed(g, eps, c), TrialPlan(seed, 5))
    assert stats.min_crossing <= cut.crossing <= mc
    assert cut.crossing == stats.max_crossing


@settings(max_examples=150, deadline=None)
@given(connected_ish(max_n=14), epsilons, cs)
def test_expected_cut_beats_lower_bound_when_sparse(g, eps, c):
    if not is_sparse(g, c, eps)[0]:
        return
    e = embed(g, eps, c)
    p = e.params
    d = g.degrees.astype(float)
    pair = (d[g.edges[:, 0]] * d[g.edges[:, 1]]) ** p.tau
    floor = p.delta1 * np.sum(d**p.tau) + p.delta2 * np.sum(pair) / g.n
    assert expected_cut_value(e) - g.m / 2 >= floor - 1e-9


def test_monte_carlo_matches_expectation():
    p = gen.petersen()
    e = embed(p, 1, 1)
    trials = 20000
    z = np.random.default_rng(17).standard_normal((p.n, trials))
    side = e.project_all(z) < 0
    crossing = (side[p.edges[:, 0]] != side[p.edges[:, 1]]).sum(axis=0)
    bound = 4 * math.sqrt(p.m**2 / (4 * trials))
    assert abs(crossing.mean() - expected_cut_value(e)) <= bound
