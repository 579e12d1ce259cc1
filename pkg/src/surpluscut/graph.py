"""Immutable simple graphs and the structural primitives built on them.

Vertices are dense integers ``0..n-1``. Adjacency is stored in CSR form
(``indptr``/``indices``) with every neighbor list sorted ascending; the
canonical edge list has ``u < v`` and is sorted lexicographically.
"""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .errors import DuplicateEdge, EdgeListParseError, SelfLoop, VertexOutOfRange


def _frozen(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


class Graph:
    """Simple undirected graph; never mutated after construction."""

    __slots__ = ("n", "m", "indptr", "indices", "edges", "_degrees", "_bits", "_codeg")

    def __init__(self, n: int, edges: np.ndarray):
        # ``edges`` must already be canonical: u < v, unique, lexicographically sorted.
        self.n = int(n)
        self.m = int(len(edges))
        self.edges = _frozen(np.asarray(edges, dtype=np.int64).reshape(-1, 2))
        u, v = self.edges[:, 0], self.edges[:, 1]
        deg = np.bincount(np.concatenate([u, v]), minlength=self.n).astype(np.int64)
        heads = np.concatenate([u, v])
        tails = np.concatenate([v, u])
        order = np.lexsort((tails, heads))
        self.indices = _frozen(tails[order])
        indptr = np.zeros(self.n + 1, dtype=np.int64)
        np.cumsum(deg, out=indptr[1:])
        self.indptr = _frozen(indptr)
        self._degrees = _frozen(deg)
        self._bits = None
        self._codeg = None

    @classmethod
    def from_edges(cls, pairs: Iterable[Sequence[int]], n: int) -> "Graph":
        """Build a graph, rejecting self-loops, duplicates and out-of-range labels."""
        n = int(n)
        if n < 0:
            raise VertexOutOfRange(n, 0)
        seen = set()
        for pair in pairs:
            a, b = int(pair[0]), int(pair[1])
            for x in (a, b):
                if not 0 <= x < n:
                    raise VertexOutOfRange(x, n)
            if a == b:
                raise SelfLoop(a)
            key = (a, b) if a < b else (b, a)
            if key in seen:
                raise DuplicateEdge(*key)
            seen.add(key)
        edges = np.array(sorted(seen), dtype=np.int64).reshape(-1, 2)
        return cls(n, edges)

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.edges, other.edges)

    def __hash__(self):
        return hash((self.n, self.edges.tobytes()))

    @property
    def degrees(self) -> np.ndarray:
        return self._degrees

    def degree(self, v: int) -> int:
        self._check(v)
        return int(self._degrees[v])

    def neighbors(self, v: int) -> np.ndarray:
        self._check(v)
        return self.indices[self.indptr[v]:self.indptr[v + 1]]

    def adjacency_lists(self) -> list[list[int]]:
        ind = self.indices.tolist()
        ptr = self.indptr.tolist()
        return [ind[ptr[v]:ptr[v + 1]] for v in range(self.n)]

    def has_edge(self, u: int, v: int) -> bool:
        nb = self.neighbors(u)
        self._check(v)
        k = np.searchsorted(nb, v)
        return bool(k < len(nb) and nb[k] == v)

    def is_regular(self) -> bool:
        return self.n == 0 or bool(np.all(self._degrees == self._degrees[0]))

    def codegree(self, u: int, v: int) -> int:
        """|N(u) ∩ N(v)| by merging the two sorted neighbor lists."""
        if u == v:
            raise ValueError("codegree needs two distinct vertices")
        a = self.neighbors(u).tolist()
        b = self.neighbors(v).tolist()
        i = j = count = 0
        while i < len(a) and j < len(b):
            if a[i] == b[j]:
                count += 1
                i += 1
                j += 1
            elif a[i] < b[j]:
                i += 1
            else:
                j += 1
        return count

    def bitsets(self) -> list[int]:
        """Neighborhoods as Python-int bitmasks (bit j set iff j ∈ N(v))."""
        if self._bits is None:
            bits = [0] * self.n
            for v, nbrs in enumerate(self.adjacency_lists()):
                mask = 0
                for j in nbrs:
                    mask |= 1 << j
                bits[v] = mask
            self._bits = bits
        return self._bits

    def edge_codegrees(self) -> np.ndarray:
        """Codegree of every edge, aligned with ``self.edges``."""
        if self._codeg is None:
            bits = self.bitsets()
            out = np.fromiter(
                ((bits[u] & bits[v]).bit_count() for u, v in self.edges.tolist()),
                dtype=np.int64,
                count=self.m,
            )
            self._codeg = _frozen(out)
        return self._codeg

    def neighborhood_edge_counts(self) -> np.ndarray:
        """e(G[N(v)]) for every vertex: half the codegree sum over incident edges."""
        cd = self.edge_codegrees()
        twice = np.bincount(self.edges[:, 0], weights=cd, minlength=self.n)
        twice += np.bincount(self.edges[:, 1], weights=cd, minlength=self.n)
        return (twice.astype(np.int64)) // 2

    def neighborhood_edge_count(self, v: int) -> int:
        self._check(v)
        bits = self.bitsets()
        total = sum((bits[v] & bits[j]).bit_count() for j in self.neighbors(v).tolist())
        return total // 2

    def _check(self, v):
        if not 0 <= v < self.n:
            raise VertexOutOfRange(v, self.n)


def from_edges(pairs, n) -> Graph:
    return Graph.from_edges(pairs, n)


def codegree(g: Graph, u: int, v: int) -> int:
    return g.codegree(u, v)


def neighborhood_edge_count(g: Graph, v: int) -> int:
    return g.neighborhood_edge_count(v)


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, np.ndarray]:
    """Return ``(G[s], mapping)`` where ``mapping[i]`` is the original label of vertex i."""
    keep = sorted({int(v) for v in s})
    for v in keep:
        if not 0 <= v < g.n:
            raise VertexOutOfRange(v, g.n)
    keep_arr = np.array(keep, dtype=np.int64)
    relabel = np.full(g.n, -1, dtype=np.int64)
    relabel[keep_arr] = np.arange(len(keep))
    if g.m:
        ru, rv = relabel[g.edges[:, 0]], relabel[g.edges[:, 1]]
        inside = (ru >= 0) & (rv >= 0)
        edges = np.stack([ru[inside], rv[inside]], axis=1)
    else:
        edges = np.zeros((0, 2), dtype=np.int64)
    # Relabeling is monotone, so canonical order is preserved.
    return Graph(len(keep), edges), _frozen(keep_arr)


def remove_isolated(g: Graph) -> tuple[Graph, np.ndarray]:
    return induced_subgraph(g, np.flatnonzero(g.degrees > 0).tolist())


@dataclass(frozen=True)
class DegeneracyOrdering:
    """Vertex order in which each vertex has at most ``degeneracy`` earlier neighbors."""

    order: tuple[int, ...]
    back_degrees: tuple[int, ...]
    degeneracy: int


def degeneracy_ordering(g: Graph) -> DegeneracyOrdering:
    """Min-degree peeling with bucket queues (Batagelj–Zaversnik), O(n + m).

    Vertices are removed by repeatedly taking a minimum-degree vertex; the
    removal order reversed bounds every back degree by the largest core
    number, which is the exact degeneracy.
    """
    n = g.n
    if n == 0:
        return DegeneracyOrdering((), (), 0)
    adj = g.adjacency_lists()
    deg = g.degrees.tolist()
    maxdeg = max(deg)
    bin_ = [0] * (maxdeg + 1)
    for d in deg:
        bin_[d] += 1
    start = 0
    for d in range(maxdeg + 1):
        bin_[d], start = start, start + bin_[d]
    pos = [0] * n
    vert = [0] * n
    for v in range(n):
        pos[v] = bin_[deg[v]]
        vert[pos[v]] = v
        bin_[deg[v]] += 1
    for d in range(maxdeg, 0, -1):
        bin_[d] = bin_[d - 1]
    bin_[0] = 0
    core = 0
    for i in range(n):
        v = vert[i]
        core = max(core, deg[v])
        for u in adj[v]:
            if deg[u] > deg[v]:
                du, pu = deg[u], pos[u]
                pw = bin_[du]
                w = vert[pw]
                if u != w:
                    pos[u], vert[pu] = pw, w
                    pos[w], vert[pw] = pu, u
                bin_[du] += 1
                deg[u] -= 1
    order = tuple(reversed(vert))
    position = [0] * n
    for i, v in enumerate(order):
        position[v] = i
    back = tuple(sum(1 for u in adj[v] if position[u] < position[v]) for v in order)
    return DegeneracyOrdering(order, back, core)


def min_degree_peel(g: Graph, threshold: int) -> list[int]:
    """Vertex set of the maximal induced subgraph with minimum degree >= threshold."""
    if threshold < 0:
        raise ValueError("threshold must be non-negative")
    adj = g.adjacency_lists()
    deg = g.degrees.tolist()
    alive = [True] * g.n
    queue = deque(v for v in range(g.n) if deg[v] < threshold)
    for v in queue:
        alive[v] = False
    while queue:
        v = queue.popleft()
        for u in adj[v]:
            if alive[u]:
                deg[u] -= 1
                if deg[u] < threshold:
                    alive[u] = False
                    queue.append(u)
    return [v for v in range(g.n) if alive[v]]


def greedy_attachment_order(g: Graph, placed: Iterable[int]) -> list[tuple[int, int]]:
    """Order the unplaced vertices by descending number of already-placed neighbors.

    Returns ``(vertex, back_degree)`` pairs; the count is re-evaluated after
    every placement, ties go to the smaller vertex index.
    """
    adj = g.adjacency_lists()
    is_placed = [False] * g.n
    for v in placed:
        is_placed[v] = True
    count = [0] * g.n
    for v in range(g.n):
        if is_placed[v]:
            for u in adj[v]:
                count[u] += 1
    heap = [(-count[v], v) for v in range(g.n) if not is_placed[v]]
    heapq.heapify(heap)
    out = []
    while heap:
        negc, v = heapq.heappop(heap)
        if is_placed[v] or -negc != count[v]:
            continue
        is_placed[v] = True
        out.append((v, count[v]))
        for u in adj[v]:
            if not is_placed[u]:
                count[u] += 1
                heapq.heappush(heap, (-count[u], u))
    return out


# -- edge-list text format -------------------------------------------------


def parse_edgelist(text: str) -> Graph:
    """Parse ``# comments``, a header ``n m``, then ``m`` lines ``u v``."""
    header = None
    pairs = []
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise EdgeListParseError(lineno, f"expected two integers, got {line!r}")
        try:
            a, b = int(fields[0]), int(fields[1])
        except ValueError:
            raise EdgeListParseError(lineno, f"non-integer field in {line!r}") from None
        if header is None:
            if a < 0 or b < 0:
                raise EdgeListParseError(lineno, "negative vertex or edge count")
            header = (a, b)
        else:
            pairs.append((a, b))
            lines.append(lineno)
    if header is None:
        raise EdgeListParseError(0, "missing 'n m' header")
    n, m = header
    if len(pairs) != m:
        where = lines[-1] if lines else 0
        raise EdgeListParseError(where, f"header declares {m} edges, found {len(pairs)}")
    seen = set()
    for (a, b), lineno in zip(pairs, lines):
        if not (0 <= a < n and 0 <= b < n):
            raise EdgeListParseError(lineno, f"vertex out of range [0, {n})")
        if a == b:
            raise EdgeListParseError(lineno, f"self-loop at vertex {a}")
        key = (min(a, b), max(a, b))
        if key in seen:
            raise EdgeListParseError(lineno, f"duplicate edge {key[0]} {key[1]}")
        seen.add(key)
    return Graph.from_edges(pairs, n)


def format_edgelist(g: Graph, comment: str | None = None) -> str:
    parts = []
    if comment:
        parts.extend(f"# {line}" for line in comment.splitlines())
    parts.append(f"{g.n} {g.m}")
    parts.extend(f"{u} {v}" for u, v in g.edges.tolist())
    return "\n".join(parts) + "\n"


def read_edgelist(path) -> Graph:
    return parse_edgelist(Path(path).read_text())


def write_edgelist(g: Graph, path, comment: str | None = None) -> None:
    Path(path).write_text(format_edgelist(g, comment))
