"""Turning the embedding into concrete cuts.

Random-hyperplane rounding draws a Gaussian direction ``z`` and puts vertex
``v`` on side A (0) iff ``<x^v, z> >= 0``. Only signs matter, so ``z`` is
never normalized; a standard Gaussian vector has a uniformly random
direction. Per-trial randomness comes from
``numpy.random.SeedSequence(master_seed, spawn_key=(trial,))`` feeding a
PCG64 generator, so trial ``i`` is reproducible on its own and the result
of a run does not depend on how trials are scheduled.
"""

from __future__ import annotations

import math
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .embedding import Embedding, make_params
from .errors import ArcsinDomain, InvalidParameter, InvalidPartialCut
from .graph import (
    Graph,
    degeneracy_ordering,
    greedy_attachment_order,
    induced_subgraph,
    min_degree_peel,
    remove_isolated,
)
from .sparsity import is_sparse, require_sparse


@dataclass(frozen=True, eq=False)
class Cut:
    side: np.ndarray  # uint8, 0 = side A, 1 = side B
    crossing: int
    m: int

    @property
    def surplus(self) -> float:
        return self.crossing - self.m / 2

    @classmethod
    def from_sides(cls, g: Graph, side) -> "Cut":
        side = np.asarray(side, dtype=np.uint8).copy()
        if side.shape != (g.n,):
            raise InvalidPartialCut(f"side vector has shape {side.shape}, expected ({g.n},)")
        if side.size and side.max() > 1:
            raise InvalidPartialCut("side entries must be 0 or 1")
        side.setflags(write=False)
        return cls(side, count_crossing(g, side), g.m)

    def __eq__(self, other):
        if not isinstance(other, Cut):
            return NotImplemented
        return self.crossing == other.crossing and self.m == other.m and np.array_equal(self.side, other.side)


def count_crossing(g: Graph, side) -> int:
    if g.m == 0:
        return 0
    side = np.asarray(side)
    return int(np.count_nonzero(side[g.edges[:, 0]] != side[g.edges[:, 1]]))


def format_cut(cut: Cut) -> str:
    bits = "".join("1" if s else "0" for s in cut.side.tolist())
    return f"{bits}\ncrossing={cut.crossing} surplus={cut.surplus:.1f}\n"


def parse_cut(text: str, g: Graph) -> Cut:
    lines = text.splitlines()
    if not lines or any(ch not in "01" for ch in lines[0]):
        raise InvalidPartialCut("first line must be a 0/1 string")
    cut = Cut.from_sides(g, [int(ch) for ch in lines[0]])
    if len(lines) > 1 and lines[1].startswith("crossing="):
        declared = int(lines[1].split()[0].split("=")[1])
        if declared != cut.crossing:
            raise InvalidPartialCut(f"declared crossing {declared} != recount {cut.crossing}")
    return cut


def expected_cut_from_cosines(m: int, cosines: np.ndarray) -> float:
    """Exact expected hyperplane-cut size given the edge cosines."""
    cosines = np.asarray(cosines, dtype=float)
    if cosines.size and np.max(np.abs(cosines)) > 1 + 1e-12:
        raise ArcsinDomain(f"edge cosine {np.max(np.abs(cosines))!r} outside [-1, 1]")
    return m / 2 - float(np.sum(np.arcsin(np.clip(cosines, -1.0, 1.0)))) / math.pi


def expected_cut_value(e: Embedding) -> float:
    return expected_cut_from_cosines(e.graph.m, e.edge_cosines())


def trial_seed(master_seed: int, trial: int) -> np.random.SeedSequence:
    return np.random.SeedSequence(int(master_seed), spawn_key=(int(trial),))


def hyperplane_cut(e: Embedding, seed) -> Cut:
    rng = np.random.Generator(np.random.PCG64(seed))
    z = rng.standard_normal(e.n)
    side = (e.project_all(z) < 0).astype(np.uint8)
    return Cut.from_sides(e.graph, side)


def local_search_refine(g: Graph, cut: Cut) -> Cut:
    """Move vertices with more same-side than cross-side neighbors until none remain."""
    side = cut.side.astype(np.int8)
    adj = g.adjacency_lists()
    deg = g.degrees.tolist()
    s = side.tolist()
    # same[v] = neighbors of v on v's own side
    same = [0] * g.n
    if g.m:
        eq = side[g.edges[:, 0]] == side[g.edges[:, 1]]
        same = np.bincount(g.edges[eq].ravel(), minlength=g.n).tolist()
    crossing = cut.crossing
    queue = deque(v for v in range(g.n) if 2 * same[v] > deg[v])
    queued = [False] * g.n
    for v in queue:
        queued[v] = True
    while queue:
        v = queue.popleft()
        queued[v] = False
        if 2 * same[v] <= deg[v]:
            continue
        crossing += 2 * same[v] - deg[v]
        sv = s[v]
        s[v] = 1 - sv
        same[v] = deg[v] - same[v]
        for u in adj[v]:
            if s[u] == sv:
                same[u] -= 1
            else:
                same[u] += 1
                if not queued[u] and 2 * same[u] > deg[u]:
                    queued[u] = True
                    queue.append(u)
    out = Cut.from_sides(g, s)
    assert out.crossing == crossing
    return out


@dataclass(frozen=True)
class TrialPlan:
    master_seed: int = 0
    trials: int = 200

    def __post_init__(self):
        if self.trials < 1:
            raise InvalidParameter("trials must be >= 1")

    def seed(self, trial: int) -> np.random.SeedSequence:
        return trial_seed(self.master_seed, trial)


@dataclass(frozen=True)
class TrialStats:
    trials: int
    best_trial: int
    min_crossing: int
    mean_crossing: float
    max_crossing: int
    raw_mean_crossing: float  # before local search


def best_of_trials(
    e: Embedding, plan: TrialPlan, refine: bool = True, workers: int = 1
) -> tuple[Cut, TrialStats]:
    """Best cut over ``plan.trials`` hyperplane roundings; ties keep the lowest trial."""

    def run(trial):
        raw = hyperplane_cut(e, plan.seed(trial))
        return raw.crossing, (local_search_refine(e.graph, raw) if refine else raw)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(run, range(plan.trials)))
    else:
        results = [run(t) for t in range(plan.trials)]
    crossings = [cut.crossing for _, cut in results]
    best = int(np.argmax(crossings))
    stats = TrialStats(
        trials=plan.trials,
        best_trial=best,
        min_crossing=min(crossings),
        mean_crossing=float(np.mean(crossings)),
        max_crossing=crossings[best],
        raw_mean_crossing=float(np.mean([raw for raw, _ in results])),
    )
    return results[best][1], stats


def extend_cut(g: Graph, u, partial: Cut) -> Cut:
    """Lift a cut of G[u] to all of G without lowering the surplus.

    Outside vertices are placed greedily, the one with most already-placed
    neighbors first, each on the side holding fewer of those neighbors
    (side A on ties). Every placement cuts at least half its back edges.
    """
    keep = sorted({int(v) for v in u})
    sub, mapping = induced_subgraph(g, keep)
    if partial.side.shape != (sub.n,) or partial.m != sub.m:
        raise InvalidPartialCut("partial cut does not match the induced subgraph")
    if count_crossing(sub, partial.side) != partial.crossing:
        raise InvalidPartialCut("partial cut crossing count is inconsistent")
    side = np.zeros(g.n, dtype=np.uint8)
    side[mapping] = partial.side
    adj = g.adjacency_lists()
    placed = np.zeros(g.n, dtype=bool)
    placed[mapping] = True
    for v, _ in greedy_attachment_order(g, keep):
        on_b = sum(side[w] for w in adj[v] if placed[w])
        on_a = sum(1 for w in adj[v] if placed[w]) - on_b
        side[v] = 1 if on_b < on_a else 0
        placed[v] = True
    return Cut.from_sides(g, side)


@dataclass(frozen=True)
class DichotomyResult:
    branch: str  # "degenerate" or "dense-core"
    threshold: float
    degeneracy: int
    bound: float
    cut: Cut
    stats: TrialStats
    core_size: int
    core_sparse: bool
    notes: tuple[str, ...] = field(default=())


def dichotomy_cut(
    g: Graph,
    epsilon: float,
    c: float,
    scale: float = 1.0,
    plan: TrialPlan | None = None,
    refine: bool = True,
    workers: int = 1,
) -> DichotomyResult:
    """Round either the whole graph or its dense core, depending on degeneracy.

    With ``d = scale * m^(1/(2+tau))``: a graph of degeneracy at most ``d`` is
    rounded directly and certified by ``delta1 * m / d^(1-tau)``; otherwise the
    ceil(d/2)-core is rounded, the cut is extended to the whole graph, and the
    certificate is ``delta2 / 4^(1+tau) * d^(1+2tau)``.
    """
    if not scale > 0:
        raise InvalidParameter("scale must be positive")
    plan = plan or TrialPlan()
    params = make_params(epsilon, c)
    stripped, mapping = remove_isolated(g)
    require_sparse(stripped, c, epsilon)
    tau = params.tau
    m = stripped.m
    d = scale * m ** (1.0 / (2.0 + tau)) if m else 0.0
    degen = degeneracy_ordering(stripped).degeneracy
    notes = []
    if degen <= d or m == 0:
        cut, stats = best_of_trials(Embedding(stripped, params), plan, refine, workers)
        branch = "degenerate"
        bound = params.delta1 * m / d ** (1.0 - tau) if m else 0.0
        core_size, core_sparse = stripped.n, True
    else:
        core = min_degree_peel(stripped, math.ceil(d / 2))
        sub, sub_map = induced_subgraph(stripped, core)
        core_sparse, witness = is_sparse(sub, c, epsilon)
        if not core_sparse:
            notes.append(
                f"core is not ({c:g},{epsilon:g})-sparse at vertex {int(sub_map[witness])}; "
                "the branch bound is not certified by the embedding"
            )
        sub_cut, stats = best_of_trials(Embedding(sub, params), plan, refine, workers)
        cut = extend_cut(stripped, core, sub_cut)
        branch = "dense-core"
        bound = params.delta2 / 4.0 ** (1.0 + tau) * d ** (1.0 + 2.0 * tau)
        core_size = sub.n
    side = np.zeros(g.n, dtype=np.uint8)
    side[mapping] = cut.side
    return DichotomyResult(
        branch=branch,
        threshold=d,
        degeneracy=degen,
        bound=bound,
        cut=Cut.from_sides(g, side),
        stats=stats,
        core_size=core_size,
        core_sparse=bool(core_sparse),
        notes=tuple(notes),
    )
