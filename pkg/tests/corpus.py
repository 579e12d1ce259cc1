"""Seeded random corpus shared by property and acceptance tests."""

from functools import lru_cache

import numpy as np

from surpluscut import generators as gen
from surpluscut.graph import remove_isolated

EPSILONS = (0.0, 1 / 3, 0.5, 1.0)
CS = (0.25, 1.0, 4.0)


def _one(i):
    rng = np.random.default_rng(1000 + i)
    kind = i % 4
    while True:
        seed = int(rng.integers(2**31))
        if kind == 0:
            g = gen.gnp(int(rng.integers(5, 17)), float(rng.uniform(0.2, 0.7)), seed)
        elif kind == 1:
            g = gen.gnp(int(rng.integers(20, 201)), float(rng.choice([0.02, 0.05, 0.1, 0.3])), seed)
        elif kind == 2:
            g = gen.random_triangle_free(int(rng.integers(10, 201)), seed)
        else:
            g = gen.gnp(int(rng.integers(30, 121)), 0.6, seed)
        g, _ = remove_isolated(g)
        if g.m:
            return g


@lru_cache(maxsize=1)
def corpus():
    """100 graphs, n <= 200, mixed densities, no isolated vertices."""
    return tuple(_one(i) for i in range(100))
