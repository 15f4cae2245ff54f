"""Command-line interface.

Subcommands::

    encode         list every admissible path of a tree and its bit codes
    grover         goal / threshold search on a tree, end to end
    branching      iteration versus node-count comparison (or ladder CSV)
    puzzle-dist    8-puzzle heuristic distributions as CSV
    quantile-demo  single-iteration quantile-band selection on a tree

Exit codes: 0 success, 2 usage or configuration error, 3 capacity error,
4 no marked states.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys
import time
from dataclasses import fields

from . import branching, puzzle
from .errors import CapacityError, ConfigurationError, DomainError, SearchSimError, TreeSpecError
from .oracles import goal_oracle, path_evaluation, quantile_band_oracle, threshold_oracle
from .runner import RunConfig, encoding_table, run_grover
from .statevector import DEFAULT_MAX_QUBITS
from .tree_model import PathCodec, load_tree

EXIT_OK, EXIT_USAGE, EXIT_CAPACITY, EXIT_NO_SOLUTION = 0, 2, 3, 4


def _fmt(value) -> str:
    if isinstance(value, float) and value.is_integer() and abs(value) < 2**53:
        return str(int(value))
    return repr(value) if isinstance(value, float) else str(value)


def _config(args: argparse.Namespace) -> RunConfig:
    known = {f.name for f in fields(RunConfig)}
    return RunConfig(**{k: v for k, v in vars(args).items() if k in known and v is not None})


def _tree_and_codec(cfg: RunConfig):
    tree = load_tree(cfg.tree)
    if cfg.goals:
        tree = tree.with_goals(cfg.goals)
    return tree, PathCodec.for_tree(tree, cfg.depth, cfg.max_qubits)


def cmd_encode(args, out) -> int:
    tree, codec = _tree_and_codec(_config(args))
    out.write(encoding_table(tree, codec))
    return EXIT_OK


def _emit_report(report, out) -> int:
    for warning in report.warnings:
        print(f"warning: {warning}", file=sys.stderr)
    out.write("\n".join(report.lines()) + "\n")
    return EXIT_NO_SOLUTION if report.k == 0 else EXIT_OK


def cmd_grover(args, out) -> int:
    cfg = _config(args)
    tree, codec = _tree_and_codec(cfg)
    if cfg.threshold is not None:
        oracle = threshold_oracle(tree, codec, path_evaluation(tree, step_cost=cfg.step_cost), cfg.threshold)
    else:
        oracle = goal_oracle(tree, codec)
    return _emit_report(run_grover(tree, codec, oracle, cfg.seed, cfg.iterations), out)


def cmd_quantile_demo(args, out) -> int:
    cfg = _config(args)
    tree, codec = _tree_and_codec(cfg)
    oracle = quantile_band_oracle(
        tree, codec, path_evaluation(tree, step_cost=cfg.step_cost), cfg.band, inclusive_lower=cfg.inclusive_lower
    )
    report = run_grover(tree, codec, oracle, cfg.seed, cfg.iterations)
    lower, upper = oracle.bounds
    report.extra.update(
        band=f"{oracle.band[0]:g} {oracle.band[1]:g}",
        f_lower=_fmt(lower),
        f_upper=_fmt(upper),
        admissible=oracle.admissible,
        fraction_of_admissible=f"{oracle.fraction_of_admissible:.12f}",
        fraction_of_space=f"{oracle.fraction_of_space:.12f}",
    )
    return _emit_report(report, out)


def cmd_branching(args, out) -> int:
    if args.range is not None:
        lo, hi = args.range
        if not 2 <= lo <= hi:
            raise ConfigurationError("range needs 2 <= low <= high")
        out.write(branching.ladder_csv(branching.ladder_table(range(lo, hi + 1))))
        return EXIT_OK
    if args.b_max is None or args.b_avg is None or args.d is None:
        raise ConfigurationError("give B_MAX B_AVG D or --range LOW HIGH")
    start = time.perf_counter()
    try:
        scenario = branching.BranchingScenario(args.b_max, args.b_avg, args.d)
    except ValueError as exc:
        raise ConfigurationError(str(exc)) from None
    report = branching.speedup_report(scenario)
    elapsed = time.perf_counter() - start
    rows = [
        ("b_max", scenario.b_max),
        ("b_avg", _fmt(float(scenario.b_avg))),
        ("d", scenario.d),
        ("bits", scenario.bits),
        ("classical_max", _fmt(report.classical_max)),
        ("classical_avg", _fmt(report.classical_avg)),
        ("grover", _fmt(report.grover)),
        ("ratio_max_avg", f"{report.ratio_max_avg:.6f}"),
        ("ratio_avg_grover", f"{report.ratio_avg_grover:.6f}"),
        ("crossover_b_avg", f"{report.crossover:.12f}"),
        ("hybrid_wins", str(report.hybrid_wins).lower()),
        ("wall_time", f"{elapsed:.6f}"),
    ]
    out.write("".join(f"{k}: {v}\n" for k, v in rows))
    return EXIT_OK


def cmd_puzzle_dist(args, out) -> int:
    count_blank = not args.exclude_blank
    writer = csv.writer(out, lineterminator="\n")
    if args.heuristic == "h1":
        dist = puzzle.heuristic_distribution(
            lambda b, g: puzzle.h1_misplaced(b, g, count_blank), kind="discrete"
        )
        writer.writerow(["value", "count", "mass"])
        for value, count, mass in zip(dist.support, dist.counts, dist.mass):
            writer.writerow([_fmt(float(value)), int(count), repr(float(mass))])
        return EXIT_OK
    kwargs = {"bins": args.bins} if args.bins is not None else {"bin_width": args.bin_width}
    dist = puzzle.heuristic_distribution(
        lambda b, g: puzzle.h2_euclidean(b, g, count_blank), kind="binned", **kwargs
    )
    writer.writerow(["bin_left", "bin_right", "count", "mass", "density"])
    edges = dist.edges
    for i, (count, mass, density) in enumerate(zip(dist.counts, dist.mass, dist.density())):
        writer.writerow([repr(float(edges[i])), repr(float(edges[i + 1])), int(count), repr(float(mass)), repr(float(density))])
    return EXIT_OK


def _add_tree_flags(p: argparse.ArgumentParser, default_tree: str) -> None:
    p.add_argument("--tree", default=default_tree, help="tree JSON file or bundled name (fig1, fig2, grid_demo)")
    p.add_argument("--depth", type=int, help="path length to encode (default: tree height)")
    p.add_argument("--max-qubits", type=int, default=DEFAULT_MAX_QUBITS, dest="max_qubits")


def _add_run_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--iterations", type=int, help="override the iteration count")
    p.add_argument("--step-cost", type=float, default=1.0, dest="step_cost", help="cost g of each action")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qtreesearch", description="Hybrid quantum tree search simulator")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("encode", help="list admissible paths and their bit codes")
    _add_tree_flags(p, "fig1")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("grover", help="amplify goal (or f <= T) paths and measure")
    _add_tree_flags(p, "fig1")
    _add_run_flags(p)
    p.add_argument("--goal", nargs="+", dest="goals", metavar="NAME", help="goal node names (replace the file's)")
    p.add_argument("--threshold", type=float, help="mark paths with f = g + h <= T instead of goals")
    p.set_defaults(func=cmd_grover)

    p = sub.add_parser("branching", help="classical vs Grover counts for (b_max, b_avg, d)")
    p.add_argument("b_max", type=int, nargs="?")
    p.add_argument("b_avg", type=float, nargs="?")
    p.add_argument("d", type=int, nargs="?")
    p.add_argument("--range", type=int, nargs=2, metavar=("LOW", "HIGH"), help="emit the crossover ladder CSV")
    p.set_defaults(func=cmd_branching)

    p = sub.add_parser("puzzle-dist", help="8-puzzle heuristic distribution CSV")
    p.add_argument("heuristic", choices=["h1", "h2"])
    p.add_argument("--bins", type=int, help="number of equal-width bins for h2")
    p.add_argument("--bin-width", type=float, default=0.25, dest="bin_width")
    p.add_argument("--exclude-blank", action="store_true", dest="exclude_blank")
    p.set_defaults(func=cmd_puzzle_dist)

    p = sub.add_parser("quantile-demo", help="mark one quartile band of f and run one iterate")
    _add_tree_flags(p, "grid_demo")
    _add_run_flags(p)
    p.add_argument("--band", type=float, nargs=2, default=(0.0, 0.25), metavar=("A", "B"))
    p.add_argument("--inclusive-lower", action="store_true", dest="inclusive_lower")
    p.set_defaults(func=cmd_quantile_demo)
    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except (ConfigurationError, TreeSpecError, DomainError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SearchSimError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run(argv: list[str]) -> tuple[int, str]:
    """Run the CLI in-process and capture stdout."""
    buf = io.StringIO()
    code = main(argv, buf)
    return code, buf.getvalue()


if __name__ == "__main__":
    sys.exit(main())
