"""Experiment pipeline: generate a sweep of instances, bound and round each one."""

from __future__ import annotations

import csv
import io
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import generators as gen
from .bounds import (
    avg_degree_bound,
    degeneracy_bound,
    degree_power_term,
    edwards_bound,
    eigen_upper_bound,
    embedding_lower_bound,
    predicted_exponents,
)
from .embedding import Embedding, make_params
from .errors import InvalidParameter, InvariantViolation
from .graph import Graph, remove_isolated
from .oracle import MAX_EXACT_N, exact_surplus
from .rounding import TrialPlan, best_of_trials, expected_cut_value
from .sparsity import TOL, min_sparsity_constant, require_sparse

CSV_VERSION = "# surplus-cut v1"
FAMILIES = ("complete", "cycle", "wheel", "kst", "gnp", "trianglefree", "dgt", "polarity")
MIN_FIT_POINTS = 5
C_FLOOR = 1e-9


def dgt_k(q: int, epsilon: float) -> int:
    """k = round(q^(eps/(1-eps))), clipped to the admissible range [1, q+1]."""
    if epsilon >= 1:
        return q + 1
    return int(min(max(round(q ** (epsilon / (1.0 - epsilon))), 1), q + 1))


def build_instance(family: str, size: int, *, epsilon: float = 1.0, seed: int = 0,
                   p: float = 0.5, s: int = 2, k: int | None = None) -> tuple[Graph, str]:
    """Graph for one sweep point; ``size`` is n, k (wheel), t (kst) or q (dgt, polarity)."""
    if family == "complete":
        return gen.complete(size), f"n={size}"
    if family == "cycle":
        return gen.cycle(size), f"n={size}"
    if family == "wheel":
        return gen.wheel_even(size), f"k={size}"
    if family == "kst":
        return gen.complete_bipartite(s, size), f"s={s};t={size}"
    if family == "gnp":
        return gen.gnp(size, p, seed), f"n={size};p={p!r};seed={seed}"
    if family == "trianglefree":
        return gen.random_triangle_free(size, seed), f"n={size};seed={seed}"
    if family == "dgt":
        kk = dgt_k(size, epsilon) if k is None else k
        return gen.dgt_srg(size, kk), f"q={size};k={kk}"
    if family == "polarity":
        return gen.polarity_er(size), f"q={size}"
    raise InvalidParameter(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")


def resolve_c(g: Graph, epsilon: float, c) -> float:
    """Numeric c, or for ``"auto"`` the audited c_star (triangle-free graphs get c = 1)."""
    if c != "auto":
        return float(c)
    stripped, _ = remove_isolated(g)
    c_star = min_sparsity_constant(stripped, epsilon).c_star
    if c_star == 0:
        return 1.0
    return max(c_star, C_FLOOR)


@dataclass
class ExperimentRecord:
    family: str
    params: str
    n: int
    m: int
    epsilon: float
    c: float
    edwards: float
    embedding_lower: float
    degree_power: float
    degeneracy_lower: float
    avg_degree_lower: float
    eigen_upper: float | None
    expected_cut: float
    best_crossing: int | None
    best_surplus: float | None
    exact_surplus: float | None
    ratio: float | None
    timings: dict = field(default_factory=dict)

    COLUMNS = (
        "family", "params", "n", "m", "epsilon", "c", "edwards", "embedding_lower",
        "degree_power", "degeneracy_lower", "avg_degree_lower", "eigen_upper",
        "expected_cut", "best_crossing", "best_surplus", "exact_surplus", "ratio",
    )
    TIMING_COLUMNS = ("t_gen", "t_bounds", "t_round", "t_exact")

    def check(self, tol: float = 1e-6) -> None:
        """lower <= achieved <= exact <= upper wherever the quantities exist."""
        expected_surplus = self.expected_cut - self.m / 2
        if self.embedding_lower > expected_surplus + TOL:
            raise InvariantViolation(f"{self.params}: embedding bound exceeds expected surplus")
        lows = [self.edwards, self.embedding_lower, expected_surplus]
        if self.best_surplus is not None:
            lows.append(self.best_surplus)
        highs = [v for v in (self.exact_surplus, self.eigen_upper) if v is not None]
        if self.exact_surplus is not None:
            lows.append(self.exact_surplus)
        for hi in highs:
            for lo in lows:
                if lo > hi + tol:
                    raise InvariantViolation(f"{self.params}: {lo!r} exceeds ceiling {hi!r}")

    def row(self, timings: bool = False) -> list[str]:
        out = []
        for name in self.COLUMNS:
            value = getattr(self, name)
            out.append("" if value is None else (repr(value) if isinstance(value, float) else str(value)))
        if timings:
            out += [f"{self.timings.get(name, 0.0):.6f}" for name in self.TIMING_COLUMNS]
        return out


def run_instance(family: str, size: int, epsilon: float, c="auto", *, trials: int = 200,
                 seed: int = 0, local_search: bool = True, p: float = 0.5, s: int = 2,
                 k: int | None = None) -> ExperimentRecord:
    clock = time.perf_counter
    t0 = clock()
    g, label = build_instance(family, size, epsilon=epsilon, seed=seed, p=p, s=s, k=k)
    t1 = clock()
    stripped, _ = remove_isolated(g)
    c_val = resolve_c(g, epsilon, c)
    require_sparse(stripped, c_val, epsilon)
    lower = embedding_lower_bound(stripped, epsilon, c_val)
    eigen = eigen_upper_bound(g) if g.is_regular() and g.n else None
    record = ExperimentRecord(
        family=family,
        params=label,
        n=g.n,
        m=g.m,
        epsilon=float(epsilon),
        c=c_val,
        edwards=edwards_bound(g.m),
        embedding_lower=lower,
        degree_power=degree_power_term(stripped, epsilon, c_val),
        degeneracy_lower=degeneracy_bound(stripped, epsilon, c_val),
        avg_degree_lower=avg_degree_bound(stripped, epsilon, c_val),
        eigen_upper=eigen,
        expected_cut=0.0,
        best_crossing=None,
        best_surplus=None,
        exact_surplus=None,
        ratio=eigen / lower if family == "dgt" and epsilon <= 1 / 3 and eigen and lower > 0 else None,
    )
    t2 = clock()
    emb = Embedding(stripped, make_params(epsilon, c_val))
    record.expected_cut = expected_cut_value(emb)
    if trials > 0:
        cut, _ = best_of_trials(emb, TrialPlan(seed, trials), refine=local_search)
        record.best_crossing = cut.crossing
        record.best_surplus = cut.surplus
    t3 = clock()
    if g.n <= MAX_EXACT_N:
        record.exact_surplus = exact_surplus(g)
    t4 = clock()
    record.timings = {"t_gen": t1 - t0, "t_bounds": t2 - t1, "t_round": t3 - t2, "t_exact": t4 - t3}
    record.check()
    return record


def run_sweep(family: str, sizes, epsilon: float, c="auto", *, jobs: int = 1, **kwargs) -> list[ExperimentRecord]:
    """One record per size, always returned in sweep order."""
    sizes = list(sizes)
    if not sizes:
        raise InvalidParameter("empty sweep")

    def one(size):
        return run_instance(family, size, epsilon, c, **kwargs)

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(one, sizes))
    return [one(size) for size in sizes]


def fit_loglog_slope(xs, ys) -> float:
    """Ordinary least-squares slope of log(ys) against log(xs)."""
    xs = np.asarray(xs, dtype=float)
    ys = np.asarray(ys, dtype=float)
    if len(xs) < MIN_FIT_POINTS:
        raise InvalidParameter(f"need at least {MIN_FIT_POINTS} sizes for an exponent fit, got {len(xs)}")
    if np.any(xs <= 0) or np.any(ys <= 0):
        raise InvalidParameter("log-log fit needs strictly positive values")
    slope, _ = np.polyfit(np.log(xs), np.log(ys), 1)
    return float(slope)


@dataclass(frozen=True)
class SweepSummary:
    slope: float
    chi3: float
    chi2: float | None
    ratio_spread: float | None


def summarize(records: list[ExperimentRecord], alpha: float | None = None) -> SweepSummary:
    slope = fit_loglog_slope([r.m for r in records], [r.embedding_lower for r in records])
    chi3, chi2 = predicted_exponents(records[0].epsilon, alpha)
    ratios = [r.ratio for r in records if r.ratio is not None]
    spread = max(ratios) / min(ratios) if ratios else None
    return SweepSummary(slope, chi3, chi2, spread)


def records_to_csv(records, summary: SweepSummary | None = None, timings: bool = False) -> str:
    buf = io.StringIO()
    buf.write(CSV_VERSION + "\n")
    w = csv.writer(buf, lineterminator="\n")
    header = list(ExperimentRecord.COLUMNS)
    if timings:
        header += list(ExperimentRecord.TIMING_COLUMNS)
    w.writerow(header)
    for r in records:
        w.writerow(r.row(timings))
    if summary is not None:
        buf.write(f"# fit_slope={summary.slope!r} predicted_chi3={summary.chi3!r}")
        if summary.chi2 is not None:
            buf.write(f" predicted_chi2={summary.chi2!r}")
        if summary.ratio_spread is not None:
            buf.write(f" ratio_spread={summary.ratio_spread!r}")
        buf.write("\n")
    return buf.getvalue()


def records_to_table(records, summary: SweepSummary | None = None) -> str:
    cols = ("params", "n", "m", "c", "embedding_lower", "expected_cut", "best_surplus", "exact_surplus", "eigen_upper", "ratio")
    rows = [cols]
    for r in records:
        cells = []
        for name in cols:
            v = getattr(r, name)
            cells.append("-" if v is None else (f"{v:.6g}" if isinstance(v, float) else str(v)))
        rows.append(cells)
    widths = [max(len(row[i]) for row in rows) for i in range(len(cols))]
    lines = ["  ".join(cell.rjust(wd) for cell, wd in zip(row, widths)) for row in rows]
    if summary is not None:
        line = f"fitted slope {summary.slope:.4f} (predicted exponent {summary.chi3:.4f}"
        if summary.chi2 is not None:
            line += f", {summary.chi2:.4f}"
        line += ")"
        lines.append(line)
        if summary.ratio_spread is not None:
            lines.append(f"eigen/embedding ratio spread {summary.ratio_spread:.4f}")
    return "\n".join(lines) + "\n"
