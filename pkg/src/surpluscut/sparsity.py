"""Neighborhood-sparsity audits and small forbidden-pattern checks.

A graph is (c, eps)-sparse when every neighborhood N(v) spans at most
``c * d(v) ** (2 - eps)`` edges.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass

import numpy as np

from .errors import InvalidParameter, IsolatedVertexError, NotSparse, TooLarge
from .graph import Graph

TOL = 1e-9


def _check_epsilon(epsilon):
    if not 0.0 <= epsilon <= 1.0:
        raise InvalidParameter(f"epsilon must lie in [0, 1], got {epsilon}")


def tau_of(epsilon: float) -> float:
    return min(float(epsilon), 0.5)


@dataclass(frozen=True)
class VertexSparsity:
    vertex: int
    degree: int
    nbhd_edges: int
    local_c: float


@dataclass(frozen=True)
class SparsityReport:
    epsilon: float
    per_vertex: tuple[VertexSparsity, ...]
    c_star: float
    witness: int | None

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["vertex", "degree", "nbhd_edges", "local_c"])
        for row in self.per_vertex:
            w.writerow([row.vertex, row.degree, row.nbhd_edges, repr(row.local_c)])
        w.writerow(["c_star", repr(self.c_star), "witness", "" if self.witness is None else self.witness])
        return buf.getvalue()

    def to_table(self) -> str:
        lines = [f"{'vertex':>8} {'degree':>8} {'nbhd_edges':>12} {'local_c':>14}"]
        for row in self.per_vertex:
            lines.append(f"{row.vertex:>8} {row.degree:>8} {row.nbhd_edges:>12} {row.local_c:>14.8g}")
        lines.append(f"epsilon={self.epsilon!r} c_star={self.c_star!r} witness={self.witness}")
        return "\n".join(lines) + "\n"


def _local_constants(g: Graph, epsilon: float) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    deg = g.degrees
    e = g.neighborhood_edge_counts()
    local = np.zeros(g.n)
    nz = e > 0
    local[nz] = e[nz] / np.power(deg[nz].astype(float), 2.0 - epsilon)
    return deg, e, local


def min_sparsity_constant(g: Graph, epsilon: float) -> SparsityReport:
    """Least c for which ``g`` is (c, epsilon)-sparse, with per-vertex detail."""
    _check_epsilon(epsilon)
    if g.n and g.degrees.min() == 0:
        raise IsolatedVertexError(int(np.argmin(g.degrees)))
    deg, e, local = _local_constants(g, epsilon)
    rows = tuple(
        VertexSparsity(v, int(d), int(k), float(c))
        for v, (d, k, c) in enumerate(zip(deg.tolist(), e.tolist(), local.tolist()))
    )
    if g.n == 0:
        return SparsityReport(float(epsilon), rows, 0.0, None)
    witness = int(np.argmax(local))  # first maximum = lowest index
    return SparsityReport(float(epsilon), rows, float(local[witness]), witness)


def is_sparse(g: Graph, c: float, epsilon: float) -> tuple[bool, int | None]:
    """``(True, None)`` if (c, epsilon)-sparse, else ``(False, first violating vertex)``."""
    _check_epsilon(epsilon)
    if not c > 0:
        raise InvalidParameter(f"c must be positive, got {c}")
    deg = g.degrees.astype(float)
    e = g.neighborhood_edge_counts()
    # 0 ** (2 - eps) is 0 for eps <= 1, and isolated vertices have e = 0.
    bad = np.flatnonzero(e > c * np.power(deg, 2.0 - epsilon) + TOL)
    if len(bad):
        return False, int(bad[0])
    return True, None


def require_sparse(g: Graph, c: float, epsilon: float) -> None:
    ok, witness = is_sparse(g, c, epsilon)
    if not ok:
        raise NotSparse(witness, c, epsilon)


@dataclass(frozen=True)
class CodegreeSum:
    lhs: float
    rhs: float
    holds: bool


def codegree_sum_check(g: Graph, c: float, epsilon: float) -> CodegreeSum:
    """Compare sum over edges of (d_i d_j)^(tau-1) d_ij with c * sum_i d_i^tau."""
    require_sparse(g, c, epsilon)
    tau = tau_of(epsilon)
    deg = g.degrees.astype(float)
    if g.m:
        du = deg[g.edges[:, 0]]
        dv = deg[g.edges[:, 1]]
        lhs = float(np.sum(np.power(du * dv, tau - 1.0) * g.edge_codegrees()))
    else:
        lhs = 0.0
    rhs = float(c * np.sum(np.power(deg, tau)))
    return CodegreeSum(lhs, rhs, lhs <= rhs + TOL)


def triangle_count(g: Graph) -> int:
    per_vertex = int(g.neighborhood_edge_counts().sum())
    per_edge = int(g.edge_codegrees().sum())
    if per_vertex != per_edge:
        raise AssertionError("triangle tallies disagree")
    return per_vertex // 3


def contains_kst(g: Graph, s: int, t: int) -> bool:
    """True iff some s vertices share at least t common neighbors (s <= 3, t <= 4)."""
    if s < 1 or t < 1 or s > t:
        raise InvalidParameter(f"need 1 <= s <= t, got s={s}, t={t}")
    if s > 3 or t > 4:
        raise TooLarge(f"K_{{s,t}} search supports s <= 3 and t <= 4, got s={s}, t={t}")
    bits = g.bitsets()
    candidates = [v for v in range(g.n) if g.degrees[v] >= t]

    def extend(start, common, depth):
        if depth == s:
            return True
        for idx in range(start, len(candidates)):
            v = candidates[idx]
            shared = bits[v] if common is None else common & bits[v]
            if shared.bit_count() >= t and extend(idx + 1, shared, depth + 1):
                return True
        return False

    return extend(0, None, 0)
