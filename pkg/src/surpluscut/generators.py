"""Graph families used as examples, tightness constructions and test inputs.

Seeded generators draw from ``numpy.random.Generator(PCG64(seed))`` so a
given seed reproduces the same graph on every platform.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .errors import InvalidParameter
from .graph import Graph


def _size(name, value, minimum):
    if int(value) != value or value < minimum:
        raise InvalidParameter(f"{name} must be an integer >= {minimum}, got {value}")
    return int(value)


def is_prime(q: int) -> bool:
    if q < 2:
        return False
    f = 2
    while f * f <= q:
        if q % f == 0:
            return False
        f += 1
    return True


def _check_prime(q):
    if int(q) != q or not is_prime(int(q)):
        raise InvalidParameter(f"q must be prime, got {q}")
    return int(q)


def complete(n: int) -> Graph:
    n = _size("n", n, 1)
    return Graph.from_edges(combinations(range(n), 2), n)


def cycle(n: int) -> Graph:
    n = _size("n", n, 3)
    return Graph.from_edges([(i, (i + 1) % n) for i in range(n)], n)


def path(n: int) -> Graph:
    n = _size("n", n, 1)
    return Graph.from_edges([(i, i + 1) for i in range(n - 1)], n)


def wheel_even(k: int) -> Graph:
    """Apex vertex 0 joined to every vertex of the cycle 1..2k."""
    k = _size("k", k, 2)
    rim = 2 * k
    edges = [(0, i) for i in range(1, rim + 1)]
    edges += [(i, i % rim + 1) for i in range(1, rim + 1)]
    return Graph.from_edges(edges, rim + 1)


def complete_bipartite(s: int, t: int) -> Graph:
    s = _size("s", s, 1)
    t = _size("t", t, 1)
    return Graph.from_edges([(i, s + j) for i in range(s) for j in range(t)], s + t)


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(outer + spokes + inner, 10)


def _rng(seed):
    return np.random.Generator(np.random.PCG64(seed))


def gnp(n: int, p: float, seed: int) -> Graph:
    """Erdős–Rényi graph: pair (u, v), u < v in lexicographic order, kept iff U < p."""
    n = _size("n", n, 0)
    if not 0.0 <= p <= 1.0:
        raise InvalidParameter(f"p must lie in [0, 1], got {p}")
    iu, iv = np.triu_indices(n, k=1)
    keep = _rng(seed).random(len(iu)) < p
    return Graph(n, np.stack([iu[keep], iv[keep]], axis=1))


def random_triangle_free(n: int, seed: int) -> Graph:
    """Greedy triangle-free process over a seeded random order of all pairs."""
    n = _size("n", n, 1)
    iu, iv = np.triu_indices(n, k=1)
    order = _rng(seed).permutation(len(iu))
    bits = [0] * n
    kept = []
    for u, v in zip(iu[order].tolist(), iv[order].tolist()):
        if bits[u] & bits[v] == 0:
            bits[u] |= 1 << v
            bits[v] |= 1 << u
            kept.append((u, v))
    return Graph.from_edges(kept, n)


@dataclass(frozen=True)
class SrgParams:
    q: int
    k: int

    def __post_init__(self):
        _check_prime(self.q)
        if not 1 <= self.k <= self.q + 1:
            raise InvalidParameter(f"k must lie in [1, q+1], got k={self.k}")

    @property
    def n(self) -> int:
        return self.q * self.q

    @property
    def degree(self) -> int:
        return self.k * (self.q - 1)

    @property
    def lambda_min(self) -> int:
        # k = q+1 uses every line: the graph is complete and the -k eigenspace is empty
        return -self.k if self.k <= self.q else -1

    @property
    def adjacent_codegree(self) -> int:
        return self.q - 2 + (self.k - 1) * (self.k - 2)


def lines_through_origin(q: int) -> list[tuple[int, int]]:
    """Direction vectors of the q+1 lines: slopes 0..q-1, then the vertical line."""
    return [(1, s) for s in range(q)] + [(0, 1)]


def dgt_srg(q: int, k: int) -> Graph:
    """Strongly regular graph on GF(q)^2: x ~ y iff x - y lies on one of the first k lines.

    Vertex (a, b) has label ``a * q + b``.
    """
    params = SrgParams(_check_prime(q), int(k))
    q = params.q
    edges = set()
    for dx, dy in lines_through_origin(q)[: params.k]:
        for a in range(q):
            for b in range(q):
                x = a * q + b
                for lam in range(1, q):
                    y = ((a + lam * dx) % q) * q + (b + lam * dy) % q
                    if x < y:
                        edges.add((x, y))
    return Graph.from_edges(sorted(edges), params.n)


def projective_points(q: int) -> list[tuple[int, int, int]]:
    """Points of PG(2, q) as triples whose first non-zero entry is 1."""
    q = _check_prime(q)
    pts = [(0, 0, 1)]
    pts += [(0, 1, b) for b in range(q)]
    pts += [(1, a, b) for a in range(q) for b in range(q)]
    return pts


def polarity_er(q: int) -> Graph:
    """Orthogonality polarity graph; absolute points keep all their non-loop edges."""
    pts = np.array(projective_points(q), dtype=np.int64)
    gram = (pts @ pts.T) % q
    iu, iv = np.nonzero(np.triu(gram == 0, k=1))
    return Graph(len(pts), np.stack([iu, iv], axis=1))
