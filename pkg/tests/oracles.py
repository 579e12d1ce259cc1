"""Independent brute-force references used to check the fast paths.

Nothing here imports the algorithms under test; only the Graph container.
"""

import itertools
import math

import numpy as np


def adjacency_matrix(g):
    a = np.zeros((g.n, g.n), dtype=np.int64)
    for u, v in g.edges.tolist():
        a[u, v] = a[v, u] = 1
    return a


def literal_vectors(g, epsilon, c):
    """The n x n matrix whose row i is x^i, filled piecewise from the coordinate definition."""
    n = g.n
    tau = min(epsilon, 0.5)
    rho = min(c / 32, 1 / (32 * c))
    a = adjacency_matrix(g)
    d = a.sum(axis=1).astype(float)[:, None]
    x = np.where(a == 1, -rho * np.power(d, tau - 1), rho * np.power(d, tau) / n)
    x[np.diag_indices(n)] = 1 + rho * np.power(d[:, 0], tau) / n
    return x


def brute_maxcut(g):
    best = 0
    a = adjacency_matrix(g)
    edges = g.edges.tolist()
    for rest in itertools.product((0, 1), repeat=max(g.n - 1, 0)):
        side = (0,) + rest
        best = max(best, sum(side[u] != side[v] for u, v in edges))
    return best


def pair_scan_codegree(g, u, v):
    a = adjacency_matrix(g)
    return int(sum(a[u, k] and a[v, k] for k in range(g.n)))


def nbhd_edges_by_pairs(g, v):
    a = adjacency_matrix(g)
    nb = [j for j in range(g.n) if a[v, j]]
    return sum(1 for x, y in itertools.combinations(nb, 2) if a[x, y])


def triangles_by_triples(g):
    a = adjacency_matrix(g)
    return sum(1 for x, y, z in itertools.combinations(range(g.n), 3) if a[x, y] and a[y, z] and a[x, z])


def induced_edge_count(g, s):
    a = adjacency_matrix(g)
    s = sorted(s)
    return sum(1 for x, y in itertools.combinations(s, 2) if a[x, y])


def min_degree_of(g, s):
    a = adjacency_matrix(g)
    s = sorted(s)
    if not s:
        return math.inf
    return min(int(a[v, s].sum()) for v in s)


def arcsin_expectation(vectors, edges):
    total = len(edges) / 2
    for u, v in edges:
        cos = vectors[u] @ vectors[v] / (np.linalg.norm(vectors[u]) * np.linalg.norm(vectors[v]))
        total -= math.asin(cos) / math.pi
    return total
