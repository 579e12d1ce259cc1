import itertools

import numpy as np
import pytest

from surpluscut import generators as gen
from surpluscut.errors import InvalidParameter
from surpluscut.oracle import exact_surplus, smallest_eigenvalue
from surpluscut.sparsity import contains_kst, min_sparsity_constant, triangle_count


def test_small_families():
    w = gen.wheel_even(2)
    assert (w.n, w.m) == (5, 8)
    assert gen.complete(5).m == 10
    k23 = gen.complete_bipartite(2, 3)
    assert k23.m == 6 and exact_surplus(k23) == 3.0
    assert gen.cycle(5).m == 5
    p = gen.petersen()
    assert (p.n, p.m) == (10, 15) and p.is_regular()


@pytest.mark.parametrize(
    "call",
    [lambda: gen.complete(0), lambda: gen.cycle(2), lambda: gen.wheel_even(1), lambda: gen.gnp(5, 1.5, 0),
     lambda: gen.dgt_srg(4, 2), lambda: gen.dgt_srg(5, 7), lambda: gen.polarity_er(9)],
)
def test_invalid_sizes(call):
    with pytest.raises(InvalidParameter):
        call()


def test_gnp_extremes_and_seed():
    assert gen.gnp(8, 0, 1).m == 0
    assert gen.gnp(8, 1, 1).m == 28
    assert gen.gnp(30, 0.3, 7) == gen.gnp(30, 0.3, 7)
    assert gen.gnp(30, 0.3, 7) != gen.gnp(30, 0.3, 8)


def test_triangle_free_process():
    assert gen.random_triangle_free(3, 5).m == 2
    g = gen.random_triangle_free(200, 9)
    assert triangle_count(g) == 0
    assert g == gen.random_triangle_free(200, 9)


@pytest.mark.parametrize("seed", range(5))
def test_triangle_free_is_maximal(seed):
    g = gen.random_triangle_free(40, seed)
    for u, v in itertools.combinations(range(g.n), 2):
        if not g.has_edge(u, v):
            assert g.codegree(u, v) > 0


def test_dgt_examples():
    g = gen.dgt_srg(5, 3)
    assert g.n == 25 and set(g.degrees.tolist()) == {12}
    assert set(g.edge_codegrees().tolist()) == {5}
    assert smallest_eigenvalue(g) == pytest.approx(-3, abs=1e-6)


@pytest.mark.parametrize("q", [3, 5, 7, 11, 13])
def test_dgt_matches_params(q):
    for k in range(1, q + 2):
        params = gen.SrgParams(q, k)
        g = gen.dgt_srg(q, k)
        assert g.n == params.n
        assert set(g.degrees.tolist()) == {params.degree}
        assert set(g.edge_codegrees().tolist()) == ({params.adjacent_codegree} if g.m else set())
        if q <= 7 or k in (1, q // 2, q + 1):
            assert np.linalg.eigvalsh(_adj(g)).min() == pytest.approx(params.lambda_min, abs=1e-6)


def _adj(g):
    a = np.zeros((g.n, g.n))
    a[g.edges[:, 0], g.edges[:, 1]] = 1
    return a + a.T


def test_dgt_sparsity_stable_across_q():
    stars = [min_sparsity_constant(gen.dgt_srg(q, round(q**0.5)), 1 / 3).c_star for q in (5, 7, 11, 13)]
    assert max(stars) / min(stars) < 4


def test_lines_through_origin_order():
    assert gen.lines_through_origin(3) == [(1, 0), (1, 1), (1, 2), (0, 1)]


def test_polarity_fano():
    g = gen.polarity_er(2)
    assert g.n == 7
    assert max(g.codegree(u, v) for u, v in itertools.combinations(range(7), 2)) <= 1


@pytest.mark.parametrize("q", [2, 3, 5, 7, 11])
def test_polarity_properties(q):
    g = gen.polarity_er(q)
    assert g.n == q * q + q + 1
    assert set(g.degrees.tolist()) <= {q, q + 1}
    absolute = sum(1 for p in gen.projective_points(q) if sum(x * x for x in p) % q == 0)
    assert int(np.sum(g.degrees == q)) == absolute
    assert not contains_kst(g, 2, 2)
    assert max(g.codegree(u, v) for u, v in itertools.combinations(range(g.n), 2)) <= 1
