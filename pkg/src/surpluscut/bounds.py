"""Closed-form surplus bounds with explicit constants.

Lower bounds here hold for (c, eps)-sparse graphs with ``tau = min(eps, 1/2)``,
``rho = min(c/32, 1/(32c))``, ``delta1 = rho/16`` and ``delta2 = rho^2/8``.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field

import numpy as np

from .embedding import degree_power, make_params
from .errors import InvalidParameter, InvariantViolation, IsolatedVertexError, NotRegular
from .graph import Graph, degeneracy_ordering, induced_subgraph, remove_isolated
from .oracle import MAX_EXACT_N, exact_surplus, smallest_eigenvalue
from .sparsity import TOL, is_sparse, require_sparse

SRC_EDWARDS = "edwards (all graphs)"
SRC_EMBEDDING = "degree-weighted embedding (sparse graphs)"
SRC_POWER_SUM = "degree power sum term (sparse graphs)"
SRC_DEGENERACY = "degeneracy form (sparse graphs)"
SRC_AVG_DEGREE = "average-degree form via min-degree core (sparse graphs)"
SRC_EIGEN = "smallest adjacency eigenvalue (regular graphs)"
SRC_EXACT = "exhaustive enumeration"


def _no_isolated(g: Graph):
    if g.n and g.degrees.min() == 0:
        raise IsolatedVertexError(int(np.argmin(g.degrees)))


def edwards_bound(m: int) -> float:
    if m < 0:
        raise InvalidParameter("edge count must be non-negative")
    return (math.sqrt(8 * m + 1) - 1) / 8


def degree_power_sum(g: Graph, tau: float) -> float:
    return float(np.sum(degree_power(g.degrees[g.degrees > 0], tau)))


def degree_power_term(g: Graph, epsilon: float, c: float) -> float:
    """delta1 * sum_i d_i^tau, the first summand of the embedding bound."""
    params = make_params(epsilon, c)
    _no_isolated(g)
    require_sparse(g, c, epsilon)
    return params.delta1 * degree_power_sum(g, params.tau)


def embedding_lower_bound(g: Graph, epsilon: float, c: float) -> float:
    """delta1 * sum_i d_i^tau + delta2 * sum_{ij in E} (d_i d_j)^tau / n."""
    params = make_params(epsilon, c)
    _no_isolated(g)
    require_sparse(g, c, epsilon)
    if g.n == 0:
        return 0.0
    dt = degree_power(g.degrees, params.tau)
    pair = float(np.sum(dt[g.edges[:, 0]] * dt[g.edges[:, 1]])) if g.m else 0.0
    return params.delta1 * float(dt.sum()) + params.delta2 * pair / g.n


def degeneracy_bound(g: Graph, epsilon: float, c: float) -> float:
    """delta1 * m / D^(1-tau) with D the exact degeneracy."""
    params = make_params(epsilon, c)
    require_sparse(g, c, epsilon)
    if g.m == 0:
        return 0.0
    degen = degeneracy_ordering(g).degeneracy
    return params.delta1 * g.m / degen ** (1.0 - params.tau)


def avg_degree_bound(g: Graph, epsilon: float, c: float) -> float:
    """delta2 / 4^(1+tau) * d^(1+2tau) with d = 2m/n."""
    params = make_params(epsilon, c)
    require_sparse(g, c, epsilon)
    if g.m == 0:
        return 0.0
    d = 2.0 * g.m / g.n
    tau = params.tau
    return params.delta2 / 4.0 ** (1.0 + tau) * d ** (1.0 + 2.0 * tau)


def eigen_upper_bound(g: Graph, tol: float = 1e-9) -> float:
    """-lambda_min * n / 4, valid for regular graphs only."""
    if g.n < 1:
        raise InvalidParameter("graph must have at least one vertex")
    if not g.is_regular():
        raise NotRegular("eigenvalue upper bound needs a regular graph")
    return -smallest_eigenvalue(g, tol) * g.n / 4


@dataclass(frozen=True)
class PowerSumBound:
    bound: float
    t: int
    hypothesis_checked: bool


def appendix_sum_bound(g: Graph, c: float, alpha: float, tau: float) -> PowerSumBound:
    """Lower bound on sum_i d_i^tau from edge counts of dense prefixes.

    With the vertices sorted by degree (descending) and ``t = floor((m/2c)^(1/alpha))``,
    if the top-t prefix H spans ``e(H) <= c t^alpha`` edges then
    ``sum_i d_i^tau >= C t^(1-tau) (m - c t^alpha)^tau`` where
    ``1/C = (1-tau)^(1-tau) tau^tau`` (Young's inequality with p = 1/(1-tau)).
    """
    if not c > 0:
        raise InvalidParameter("c must be positive")
    if not 1.0 <= alpha <= 2.0:
        raise InvalidParameter(f"alpha must lie in [1, 2], got {alpha}")
    if not 0.0 < tau < 1.0:
        raise InvalidParameter(f"tau must lie in (0, 1), got {tau}")
    m = g.m
    t = int(math.floor((m / (2.0 * c)) ** (1.0 / alpha) + 1e-9))
    if t > g.n:
        return PowerSumBound(0.0, t, False)
    order = sorted(range(g.n), key=lambda v: (-int(g.degrees[v]), v))
    prefix, _ = induced_subgraph(g, order[:t])
    checked = prefix.m <= c * t**alpha + TOL
    slack = m - c * t**alpha
    if t < 1 or slack <= 0:
        return PowerSumBound(0.0, t, checked)
    const = 1.0 / ((1.0 - tau) ** (1.0 - tau) * tau**tau)
    return PowerSumBound(const * t ** (1.0 - tau) * slack**tau, t, checked)


def predicted_exponents(epsilon: float, alpha: float | None = None) -> tuple[float, float | None]:
    """Exponents chi with sp(m, H) = Omega(m^chi) for the two Turán-type regimes."""
    if not 0.0 <= epsilon <= 1.0:
        raise InvalidParameter(f"epsilon must lie in [0, 1], got {epsilon}")
    tau = min(float(epsilon), 0.5)
    chi3 = (1.0 + 2.0 * tau) / (2.0 + tau)
    if alpha is None:
        return chi3, None
    if not 0.0 <= alpha <= 1.0:
        raise InvalidParameter(f"alpha must lie in [0, 1], got {alpha}")
    return chi3, tau + (1.0 - tau) / (2.0 - alpha)


@dataclass(frozen=True)
class BoundEntry:
    name: str
    value: float
    kind: str  # "lower", "upper" or "exact"
    source: str
    note: str = ""


@dataclass(frozen=True)
class GraphSummary:
    n: int
    m: int
    degeneracy: int
    average_degree: float
    regular: bool


@dataclass(frozen=True)
class BoundReport:
    summary: GraphSummary
    epsilon: float
    c: float
    entries: tuple[BoundEntry, ...]
    notes: tuple[str, ...] = field(default=())

    def get(self, name: str) -> BoundEntry | None:
        return next((e for e in self.entries if e.name == name), None)

    def lower(self):
        return [e for e in self.entries if e.kind == "lower"]

    def upper(self):
        return [e for e in self.entries if e.kind == "upper"]

    def check_consistency(self, tol: float = TOL) -> None:
        exact = [e for e in self.entries if e.kind == "exact"]
        for lo in self.lower() + exact:
            for hi in self.upper() + exact:
                if lo is not hi and lo.value > hi.value + tol:
                    raise InvariantViolation(
                        f"{lo.name}={lo.value!r} exceeds {hi.name}={hi.value!r}"
                    )

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["name", "kind", "value", "source"])
        for e in self.entries:
            w.writerow([e.name, e.kind, repr(e.value), e.source])
        return buf.getvalue()

    def to_table(self) -> str:
        s = self.summary
        lines = [
            f"n={s.n} m={s.m} degeneracy={s.degeneracy} avg_degree={s.average_degree:.6g} "
            f"regular={'yes' if s.regular else 'no'} eps={self.epsilon:g} c={self.c:.6g}",
        ]
        width = max([len(e.name) for e in self.entries] + [4])
        lines.append(f"{'name':<{width}}  {'kind':<5}  {'value':>16}  source")
        for e in self.entries:
            lines.append(f"{e.name:<{width}}  {e.kind:<5}  {e.value:>16.10g}  {e.source}")
        lines.extend(f"note: {n}" for n in self.notes)
        return "\n".join(lines) + "\n"


def full_report(g: Graph, epsilon: float, c: float, eigen_tol: float = 1e-9) -> BoundReport:
    """Every applicable bound for ``g``, consistency-checked.

    Sparsity-based entries are computed on ``g`` with isolated vertices removed
    (which leaves the surplus unchanged) and omitted, with a note, when the
    graph is not (c, eps)-sparse.
    """
    params = make_params(epsilon, c)
    degen = degeneracy_ordering(g).degeneracy
    summary = GraphSummary(
        n=g.n,
        m=g.m,
        degeneracy=degen,
        average_degree=2.0 * g.m / g.n if g.n else 0.0,
        regular=g.is_regular(),
    )
    entries = [BoundEntry("edwards", edwards_bound(g.m), "lower", SRC_EDWARDS)]
    notes = []
    core, core_map = remove_isolated(g)
    sparse, witness = is_sparse(core, c, epsilon)
    if sparse:
        entries += [
            BoundEntry("embedding", embedding_lower_bound(core, epsilon, c), "lower", SRC_EMBEDDING),
            BoundEntry("degree_power", degree_power_term(core, epsilon, c), "lower", SRC_POWER_SUM),
            BoundEntry("degeneracy", degeneracy_bound(core, epsilon, c), "lower", SRC_DEGENERACY),
            BoundEntry(
                "avg_degree", avg_degree_bound(core, epsilon, c), "lower", SRC_AVG_DEGREE,
                "average degree taken over non-isolated vertices",
            ),
        ]
    else:
        notes.append(
            f"graph is not ({c:g},{epsilon:g})-sparse (witness vertex {int(core_map[witness])}); "
            "sparsity-based lower bounds omitted"
        )
    if g.n and summary.regular:
        entries.append(BoundEntry("eigen", eigen_upper_bound(g, eigen_tol), "upper", SRC_EIGEN))
    else:
        notes.append("graph is not regular; no eigenvalue upper bound")
    if g.n <= MAX_EXACT_N:
        entries.append(BoundEntry("exact", exact_surplus(g), "exact", SRC_EXACT))
    else:
        notes.append(f"n > {MAX_EXACT_N}; exact surplus not computed")
    report = BoundReport(summary, params.epsilon, params.c, tuple(entries), tuple(notes))
    # the eigenvalue entry carries an absolute error of up to eigen_tol * n / 4
    report.check_consistency(TOL + eigen_tol * g.n)
    return report
