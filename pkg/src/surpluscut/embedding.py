"""Degree-weighted vector embedding of a graph with sparse neighborhoods.

Vertex ``i`` is mapped to the vector ``x^i`` in R^n with coordinates

    x^i_i = 1 + rho * d_i^tau / n
    x^i_j = -rho * d_i^(tau - 1)         for j in N(i)
    x^i_j = rho * d_i^tau / n            otherwise

Equivalently ``x^i = a_i * ones + e_i - b_i * chi_N(i)`` with
``a_i = rho d_i^tau / n`` and ``b_i = rho d_i^(tau-1) + a_i``. The vectors
are never stored: norms and edge inner products have closed forms, and a
projection onto any direction ``z`` costs O(n + m) using the decomposition.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidParameter, IsolatedVertexError, LengthMismatch, NotAnEdge
from .graph import Graph


@dataclass(frozen=True)
class EmbeddingParams:
    epsilon: float
    c: float
    tau: float
    rho: float
    delta1: float
    delta2: float

    def __str__(self):
        return "\n".join(
            f"{name}={getattr(self, name)!r}"
            for name in ("epsilon", "c", "tau", "rho", "delta1", "delta2")
        )


def make_params(epsilon: float, c: float) -> EmbeddingParams:
    epsilon = float(epsilon)
    c = float(c)
    if not 0.0 <= epsilon <= 1.0:
        raise InvalidParameter(f"epsilon must lie in [0, 1], got {epsilon}")
    if not (c > 0 and math.isfinite(c)):
        raise InvalidParameter(f"c must be positive and finite, got {c}")
    tau = min(epsilon, 0.5)
    rho = min(c / 32.0, 1.0 / (32.0 * c))
    return EmbeddingParams(epsilon, c, tau, rho, rho / 16.0, rho * rho / 8.0)


def degree_power(d: np.ndarray, tau: float) -> np.ndarray:
    """``d ** tau`` for positive degrees, with exact paths for tau in {0, 1/2, 1}."""
    d = np.asarray(d, dtype=float)
    if tau == 0.0:
        return np.ones_like(d)
    if tau == 0.5:
        return np.sqrt(d)
    if tau == 1.0:
        return d.copy()
    return np.exp(tau * np.log(d))


class Embedding:
    """Virtual vectors for every vertex of an isolated-vertex-free graph."""

    def __init__(self, graph: Graph, params: EmbeddingParams):
        if graph.n and graph.degrees.min() == 0:
            raise IsolatedVertexError(int(np.argmin(graph.degrees)))
        self.graph = graph
        self.params = params
        n = max(graph.n, 1)  # the empty graph yields empty arrays
        rho, tau = params.rho, params.tau
        d = graph.degrees.astype(float)
        self.d = d
        self.d_tau = degree_power(d, tau)
        self.d_tau_m1 = self.d_tau / d
        self.a = rho * self.d_tau / n
        self.b = rho * self.d_tau_m1 + self.a
        d2t1 = self.d_tau * self.d_tau_m1  # d^(2 tau - 1)
        norm_sq = 1.0 + 2.0 * self.a + rho * rho * d2t1 * (1.0 + d / n - (d / n) ** 2)
        self.norms = np.sqrt(norm_sq)
        for arr in (self.d, self.d_tau, self.d_tau_m1, self.a, self.b, self.norms):
            arr.setflags(write=False)
        self._edge_ip = None

    @property
    def n(self) -> int:
        return self.graph.n

    def vertex_norm(self, i: int) -> float:
        self.graph._check(i)
        return float(self.norms[i])

    def _inner(self, i, j, codeg):
        rho, n = self.params.rho, self.graph.n
        di, dj = self.d[i], self.d[j]
        bracket = codeg * (1.0 / n + 1.0 / di) * (1.0 / n + 1.0 / dj) - (n + di + dj) / n**2
        return (
            -rho * self.d_tau_m1[i]
            - rho * self.d_tau_m1[j]
            + rho * rho * self.d_tau[i] * self.d_tau[j] * bracket
        )

    def edge_inner_product(self, i: int, j: int) -> float:
        if not self.graph.has_edge(i, j):
            raise NotAnEdge(i, j)
        return float(self._inner(i, j, self.graph.codegree(i, j)))

    def edge_inner_products(self) -> np.ndarray:
        """<x^i, x^j> for every edge, aligned with ``graph.edges``."""
        if self._edge_ip is None:
            g = self.graph
            u, v = g.edges[:, 0], g.edges[:, 1]
            ip = self._inner(u, v, g.edge_codegrees().astype(float))
            ip = np.asarray(ip, dtype=float).reshape(g.m)
            ip.setflags(write=False)
            self._edge_ip = ip
        return self._edge_ip

    def edge_cosines(self) -> np.ndarray:
        g = self.graph
        return self.edge_inner_products() / (self.norms[g.edges[:, 0]] * self.norms[g.edges[:, 1]])

    def project_all(self, z: np.ndarray) -> np.ndarray:
        """``<x^i, z>`` for all i. ``z`` may be a vector or an (n, k) batch."""
        z = np.asarray(z, dtype=float)
        g = self.graph
        if z.shape[:1] != (g.n,):
            raise LengthMismatch(f"expected leading dimension {g.n}, got shape {z.shape}")
        if g.n == 0:
            return z.copy()
        nbr_sum = np.add.reduceat(z[g.indices], g.indptr[:-1], axis=0)
        total = z.sum(axis=0)
        if z.ndim == 1:
            return self.a * total + z - self.b * nbr_sum
        return self.a[:, None] * total + z - self.b[:, None] * nbr_sum


def embed(graph: Graph, epsilon: float, c: float) -> Embedding:
    return Embedding(graph, make_params(epsilon, c))
