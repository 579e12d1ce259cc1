"""Command-line interface: ``surpluscut {gen,audit,cut,bounds,experiment}``.

Exit status: 0 success, 1 usage, 2 input parse, 3 precondition (e.g. the
graph is not sparse enough), 4 internal invariant violation.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from . import generators as gen
from .bounds import embedding_lower_bound, full_report
from .embedding import Embedding, make_params
from .errors import (
    ArcsinDomain,
    EdgeListParseError,
    InvalidParameter,
    InvalidPartialCut,
    InvariantViolation,
    IsolatedVertexError,
    NoConvergence,
    NotRegular,
    NotSparse,
    TooLarge,
)
from .graph import format_edgelist, read_edgelist, remove_isolated
from .harness import FAMILIES, records_to_csv, records_to_table, resolve_c, run_sweep, summarize
from .rounding import Cut, TrialPlan, best_of_trials, dichotomy_cut, expected_cut_value, format_cut
from .sparsity import min_sparsity_constant

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_PRECONDITION, EXIT_INTERNAL = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _c_value(text):
    if text == "auto":
        return text
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive number or 'auto', got {text!r}") from None
    if not value > 0:
        raise argparse.ArgumentTypeError("c must be positive")
    return value


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _load(path):
    try:
        return read_edgelist(path)
    except OSError as exc:
        raise EdgeListParseError(0, f"cannot read {path}: {exc.strerror}") from None


def cmd_gen(args) -> int:
    family = args.family
    need = {
        "complete": ["n"], "cycle": ["n"], "wheel": ["k"], "kst": ["s", "t"],
        "gnp": ["n", "p"], "trianglefree": ["n"], "dgt": ["q", "k"], "polarity": ["q"],
    }[family]
    missing = [f"--{name}" for name in need if getattr(args, name) is None]
    if missing:
        raise UsageError(f"family {family} requires {', '.join(missing)}")
    if family == "complete":
        g = gen.complete(args.n)
    elif family == "cycle":
        g = gen.cycle(args.n)
    elif family == "wheel":
        g = gen.wheel_even(args.k)
    elif family == "kst":
        g = gen.complete_bipartite(args.s, args.t)
    elif family == "gnp":
        g = gen.gnp(args.n, args.p, args.seed)
    elif family == "trianglefree":
        g = gen.random_triangle_free(args.n, args.seed)
    elif family == "dgt":
        g = gen.dgt_srg(args.q, args.k)
    else:
        g = gen.polarity_er(args.q)
    given = " ".join(f"{name}={getattr(args, name)}" for name in need)
    if family in ("gnp", "trianglefree"):
        given += f" seed={args.seed}"
    _emit(format_edgelist(g, comment=f"{family} {given}"), args.out)
    return EXIT_OK


def cmd_audit(args) -> int:
    g, _ = remove_isolated(_load(args.path))
    report = min_sparsity_constant(g, args.eps)
    _emit(report.to_csv() if args.format == "csv" else report.to_table(), args.out)
    return EXIT_OK


def cmd_cut(args) -> int:
    g = _load(args.path)
    stripped, mapping = remove_isolated(g)
    c = resolve_c(g, args.eps, args.c)
    plan = TrialPlan(args.seed, args.trials)
    lines = []
    if args.dichotomy:
        result = dichotomy_cut(g, args.eps, c, args.scale, plan, args.local_search, args.jobs)
        cut, stats = result.cut, result.stats
        lines.append(f"branch={result.branch} threshold={result.threshold!r} "
                     f"degeneracy={result.degeneracy} core_size={result.core_size}")
        lines.append(f"branch_bound={result.bound!r}")
        lines.extend(f"note: {note}" for note in result.notes)
    else:
        lower = embedding_lower_bound(stripped, args.eps, c)
        emb = Embedding(stripped, make_params(args.eps, c))
        sub_cut, stats = best_of_trials(emb, plan, args.local_search, args.jobs)
        side = np.zeros(g.n, dtype=np.uint8)
        side[mapping] = sub_cut.side
        cut = Cut.from_sides(g, side)
        expected = expected_cut_value(emb)
        lines.append(f"expected_cut={expected!r} expected_surplus={expected - g.m / 2!r}")
        lines.append(f"lower_bound={lower!r}")
    summary = [
        f"n={g.n} m={g.m} eps={args.eps!r} c={c!r}",
        f"crossing={cut.crossing} surplus={cut.surplus:.1f}",
        *lines,
        f"trials={stats.trials} seed={args.seed} local_search={'on' if args.local_search else 'off'} "
        f"best_trial={stats.best_trial} min={stats.min_crossing} mean={stats.mean_crossing!r} "
        f"max={stats.max_crossing}",
    ]
    if args.out:
        Path(args.out).write_text(format_cut(cut))
    sys.stdout.write("\n".join(summary) + "\n")
    return EXIT_OK


def cmd_bounds(args) -> int:
    g = _load(args.path)
    c = resolve_c(g, args.eps, args.c)
    report = full_report(g, args.eps, c)
    if args.format == "csv":
        _emit(report.to_csv(), args.out)
    else:
        _emit(report.to_table(), args.out)
    return EXIT_OK


def cmd_experiment(args) -> int:
    sizes = args.sizes or []
    if not sizes:
        raise UsageError("empty sweep: pass at least one value to --sizes")
    if args.fit and len(sizes) < 5:
        raise UsageError("an exponent fit needs at least 5 sizes (or pass --no-fit)")
    records = run_sweep(
        args.family, sizes, args.eps, args.c,
        jobs=args.jobs, trials=args.trials, seed=args.seed, local_search=args.local_search,
        p=args.p, s=args.s, k=args.k,
    )
    summary = summarize(records, args.alpha) if args.fit else None
    if args.format == "csv":
        _emit(records_to_csv(records, summary, args.timings), args.out)
    else:
        _emit(records_to_table(records, summary), args.out)
    if args.out and summary is not None:
        sys.stdout.write(f"fit_slope={summary.slope!r} predicted_chi3={summary.chi3!r}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="surpluscut", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("gen", help="write a generated graph as an edge list")
    p.add_argument("family", choices=FAMILIES)
    for name in ("n", "k", "s", "t", "q"):
        p.add_argument(f"--{name}", type=int)
    p.add_argument("--p", type=float)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    def rounding_flags(q):
        q.add_argument("--trials", type=int, default=200)
        q.add_argument("--seed", type=int, default=0)
        q.add_argument("--local-search", action=argparse.BooleanOptionalAction, default=True)
        q.add_argument("--jobs", type=int, default=1, help="worker threads; output is identical for any value")

    p = sub.add_parser("audit", help="neighborhood sparsity audit")
    p.add_argument("path")
    p.add_argument("--eps", type=float, required=True)
    p.add_argument("--format", choices=("csv", "table"), default="table")
    p.add_argument("--out")
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("cut", help="round the embedding to a cut")
    p.add_argument("path")
    p.add_argument("--eps", type=float, required=True)
    p.add_argument("--c", type=_c_value, required=True)
    rounding_flags(p)
    p.add_argument("--dichotomy", action="store_true", help="degeneracy / dense-core pipeline")
    p.add_argument("--scale", type=float, default=1.0)
    p.add_argument("--out", help="write the best cut here")
    p.set_defaults(func=cmd_cut)

    p = sub.add_parser("bounds", help="every applicable surplus bound")
    p.add_argument("path")
    p.add_argument("--eps", type=float, required=True)
    p.add_argument("--c", type=_c_value, required=True)
    p.add_argument("--format", choices=("csv", "table"), default="table")
    p.add_argument("--out")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("experiment", help="sweep a family and fit the bound exponent")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("--sizes", type=int, nargs="*")
    p.add_argument("--eps", type=float, required=True)
    p.add_argument("--c", type=_c_value, default="auto")
    p.add_argument("--alpha", type=float)
    p.add_argument("--p", type=float, default=0.5)
    p.add_argument("--s", type=int, default=2)
    p.add_argument("--k", type=int)
    rounding_flags(p)
    p.add_argument("--fit", action=argparse.BooleanOptionalAction, default=True)
    p.add_argument("--timings", action="store_true", help="append wall-time columns (not reproducible)")
    p.add_argument("--format", choices=("csv", "table"), default="csv")
    p.add_argument("--out")
    p.set_defaults(func=cmd_experiment)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, InvalidParameter) as exc:
        print(f"surpluscut: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except EdgeListParseError as exc:
        print(f"surpluscut: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (NotSparse, IsolatedVertexError, NotRegular, TooLarge, InvalidPartialCut) as exc:
        print(f"surpluscut: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (InvariantViolation, ArcsinDomain, NoConvergence, AssertionError) as exc:
        print(f"surpluscut: internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
