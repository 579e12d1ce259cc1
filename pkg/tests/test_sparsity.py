import math

import pytest
from hypothesis import given, settings

from oracles import triangles_by_triples
from strategies import connected_ish, epsilons, graphs
from surpluscut import generators as gen
from surpluscut.errors import InvalidParameter, IsolatedVertexError, NotSparse, TooLarge
from surpluscut.graph import Graph
from surpluscut.sparsity import (
    codegree_sum_check,
    contains_kst,
    is_sparse,
    min_sparsity_constant,
    require_sparse,
    tau_of,
    triangle_count,
)


def test_c_star_examples():
    assert min_sparsity_constant(gen.petersen(), 1.0).c_star == 0
    assert min_sparsity_constant(gen.complete(4), 1.0).c_star == pytest.approx(1.0, abs=1e-15)
    dgt = min_sparsity_constant(gen.dgt_srg(5, 3), 1 / 3)
    assert dgt.c_star == pytest.approx(30 / 12 ** (5 / 3), rel=1e-12)
    assert dgt.witness == 0


def test_isolated_vertex_rejected():
    with pytest.raises(IsolatedVertexError):
        min_sparsity_constant(Graph.from_edges([(0, 1)], 3), 1.0)


def test_is_sparse_examples():
    assert is_sparse(gen.random_triangle_free(40, 1), 1e-6, 0.3)[0]
    ok, witness = is_sparse(gen.complete(4), 0.5, 1.0)
    assert not ok and witness in range(4)
    assert is_sparse(gen.complete(4), 1.0, 1.0) == (True, None)
    with pytest.raises(NotSparse) as info:
        require_sparse(gen.complete(4), 0.5, 1.0)
    assert info.value.witness == 0


def test_codegree_sum_examples():
    tf = codegree_sum_check(gen.petersen(), 1.0, 1.0)
    assert tf.lhs == 0 and tf.holds
    k4 = codegree_sum_check(gen.complete(4), 1.0, 1.0)
    assert k4.lhs == pytest.approx(4.0, rel=1e-12)
    assert k4.rhs == pytest.approx(4 * math.sqrt(3), rel=1e-12)
    assert k4.holds
    dgt = gen.dgt_srg(5, 3)
    c_star = min_sparsity_constant(dgt, 1 / 3).c_star
    res = codegree_sum_check(dgt, c_star, 1 / 3)
    # independent summation over edges
    lhs = 150 * (144 ** (1 / 3 - 1)) * 5
    assert res.lhs == pytest.approx(lhs, rel=1e-12) and res.holds


def test_triangle_count_examples():
    assert triangle_count(gen.complete(4)) == 4
    assert triangle_count(gen.petersen()) == 0
    assert triangle_count(gen.cycle(5)) == 0


def test_contains_kst_examples():
    assert contains_kst(gen.cycle(4), 2, 2)
    assert not contains_kst(gen.polarity_er(5), 2, 2)
    assert contains_kst(gen.complete_bipartite(3, 3), 3, 3)
    assert not contains_kst(gen.complete_bipartite(3, 3), 3, 4)
    assert contains_kst(gen.complete(7), 3, 4)
    with pytest.raises(TooLarge):
        contains_kst(gen.cycle(4), 4, 4)
    with pytest.raises(InvalidParameter):
        contains_kst(gen.cycle(4), 3, 2)


def test_csv_layout():
    text = min_sparsity_constant(gen.complete(4), 1.0).to_csv()
    lines = text.splitlines()
    assert lines[0] == "vertex,degree,nbhd_edges,local_c"
    assert lines[1] == "0,3,3,1.0"
    assert lines[-1].startswith("c_star,") and lines[-1].endswith(",witness,0")


def test_tau():
    assert tau_of(1.0) == 0.5
    assert tau_of(1 / 3) == 1 / 3


@settings(max_examples=200, deadline=None)
@given(connected_ish(), epsilons)
def test_c_star_is_minimal(g, eps):
    c_star = min_sparsity_constant(g, eps).c_star
    if c_star == 0:
        return
    assert is_sparse(g, c_star, eps)[0]
    assert not is_sparse(g, c_star * (1 - 1e-6) - 1e-12, eps)[0]


@settings(max_examples=200, deadline=None)
@given(connected_ish(), epsilons, epsilons)
def test_c_star_monotone_in_epsilon(g, e1, e2):
    lo, hi = sorted((e1, e2))
    assert min_sparsity_constant(g, lo).c_star <= min_sparsity_constant(g, hi).c_star + 1e-12


@settings(max_examples=200, deadline=None)
@given(connected_ish(), epsilons)
def test_triangle_free_iff_c_star_zero(g, eps):
    assert (triangle_count(g) == 0) == (min_sparsity_constant(g, eps).c_star == 0)


@settings(max_examples=200, deadline=None)
@given(connected_ish(), epsilons)
def test_codegree_sum_holds_when_sparse(g, eps):
    for c in (0.25, 1.0, 4.0, max(min_sparsity_constant(g, eps).c_star, 1e-3)):
        if is_sparse(g, c, eps)[0]:
            assert codegree_sum_check(g, c, eps).holds


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=11))
def test_triangle_count_matches_triples(g):
    assert triangle_count(g) == triangles_by_triples(g)
