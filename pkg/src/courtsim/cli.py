"""Command-line entry point: validate data, run simulations and sweeps,
compare methods, and render report summaries.

Exit codes: 0 success, 1 data validation failure, 2 bad invocation,
3 runtime error.
"""

from __future__ import annotations

import argparse
import csv
import sys
from pathlib import Path

from . import analysis
from .analysis import Interval
from .data_io import emit_reports, load_bundle, scan_bundle
from .engine import Mode, Model, SimulationConfig, run_replications
from .errors import ConfigError, CourtsimError, DataValidationError
from .outcomes import METHODS, method
from .ratings import WindowPolicy

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_USAGE = 2
EXIT_RUNTIME = 3


def _parse_window(value: str) -> WindowPolicy:
    if value == "all":
        return WindowPolicy.all_games()
    try:
        return WindowPolicy.last(int(value))
    except ValueError:
        raise ConfigError(f"--window must be a positive integer or 'all', got {value!r}") from None


def _parse_windows(value: str) -> list[int]:
    """Window lists accept comma-separated values and inclusive a..b ranges."""
    ks: list[int] = []
    for piece in value.split(","):
        piece = piece.strip()
        if ".." in piece:
            lo_raw, hi_raw = piece.split("..", 1)
            try:
                lo, hi = int(lo_raw), int(hi_raw)
            except ValueError:
                raise ConfigError(f"bad window range {piece!r}") from None
            if lo > hi:
                raise ConfigError(f"empty window range {piece!r}")
            ks.extend(range(lo, hi + 1))
        elif piece:
            try:
                ks.append(int(piece))
            except ValueError:
                raise ConfigError(f"bad window value {piece!r}") from None
    if not ks or any(k < 1 for k in ks):
        raise ConfigError(f"--windows needs positive integers, got {value!r}")
    return ks


def _add_run_flags(parser: argparse.ArgumentParser, *, with_method: bool = True) -> None:
    parser.add_argument("--data", required=True, help="directory with games/teams/picks[/priors] CSVs")
    parser.add_argument("--season", default="all", help="season id or 'all' (default all)")
    if with_method:
        parser.add_argument("--method", required=True, choices=sorted(METHODS, key=list(METHODS).index))
    parser.add_argument("--model", default=Model.BASIC.value, choices=[m.value for m in Model])
    parser.add_argument("--mode", default=Mode.MONTE_CARLO.value, choices=[m.value for m in Mode])
    parser.add_argument("--reps", type=int, default=1000, help="replications per season (default 1000)")
    parser.add_argument("--seed", type=int, default=0, help="master seed, unsigned 64-bit (default 0)")
    parser.add_argument("--window", default="all", help="historical window size k or 'all' (default all)")
    parser.add_argument("--prior", type=float, default=None,
                        help="win-percentage prior in (0,1); default: per-team priors file if present, else 0.5")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="courtsim", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="ingest a data directory and report diagnostics")
    p.add_argument("--data", required=True)
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("simulate", help="run replicated season simulations and emit reports")
    _add_run_flags(p)
    p.add_argument("--out", required=True, help="output directory for accuracy.csv and wins_delta.csv")
    p.set_defaults(func=_cmd_simulate)

    p = sub.add_parser("sweep", help="sweep historical window sizes and emit sweep.csv")
    _add_run_flags(p)
    p.add_argument("--windows", required=True, help="window sizes, e.g. 2..20 or 5,10,15")
    p.add_argument("--out", required=True, help="output directory for sweep.csv")
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("compare", help="count per-season wins between methods")
    _add_run_flags(p, with_method=False)
    p.add_argument("--methods", required=True, help="comma-separated method ids, e.g. i,ii")
    p.set_defaults(func=_cmd_compare)

    p = sub.add_parser("report", help="print human-readable summaries of emitted CSVs")
    p.add_argument("--in", dest="in_dir", required=True, help="directory holding emitted report CSVs")
    p.set_defaults(func=_cmd_report)

    return parser


def _config_from_args(args: argparse.Namespace, method_id: str) -> SimulationConfig:
    return SimulationConfig(
        method=method(method_id),
        model=Model(args.model),
        mode=Mode(args.mode),
        window=_parse_window(args.window),
        prior=args.prior,
        replications=args.reps,
        master_seed=args.seed,
    )


def _select_seasons(bundle, season_arg: str) -> list:
    if season_arg == "all":
        return [bundle.seasons[s] for s in sorted(bundle.seasons)]
    return [bundle.season(season_arg)]


def _cmd_validate(args: argparse.Namespace) -> int:
    bundle, diagnostics = scan_bundle(args.data)
    for diagnostic in diagnostics:
        stream = sys.stderr if diagnostic.severity == "error" else sys.stdout
        print(diagnostic, file=stream)
    if bundle is None:
        errors = sum(1 for d in diagnostics if d.severity == "error")
        print(f"validation failed: {errors} error(s)", file=sys.stderr)
        return EXIT_VALIDATION
    games = sum(len(ds.games) for ds in bundle.seasons.values())
    print(f"ok: {len(bundle.seasons)} season(s), {games} games")
    return EXIT_OK


def _cmd_simulate(args: argparse.Namespace) -> int:
    bundle = load_bundle(args.data)
    datasets = _select_seasons(bundle, args.season)
    config = _config_from_args(args, args.method)
    reports = []
    delta_records = []
    per_interval: dict[Interval, list[tuple[analysis.AccuracyReport, int]]] = {i: [] for i in Interval}
    for dataset in datasets:
        results = run_replications(dataset, config)
        for interval in Interval:
            report = analysis.accuracy(results, dataset, config, interval)
            reports.append(report)
            per_interval[interval].append((report, analysis.eligible_games(dataset, interval)))
        records, slope = analysis.wins_delta(results, dataset)
        delta_records.extend(records)
        complete = next(r for r in reports if r.season_id == dataset.season_id and r.interval is Interval.COMPLETE)
        print(
            f"{dataset.season_id} method {config.method.id} {config.model.value}/{config.mode.value}: "
            f"accuracy {complete.mean_accuracy:.4f} "
            f"[{complete.ci_low:.4f}, {complete.ci_high:.4f}], wins-delta slope {slope:+.4f}"
        )
    if len(datasets) > 1:
        for interval in Interval:
            reports.append(analysis.aggregate_accuracy(per_interval[interval], label="overall"))
            reports.append(analysis.seasons_mean_accuracy([r for r, _ in per_interval[interval]], label="overall-mean"))
        overall = next(r for r in reports if r.season_id == "overall" and r.interval is Interval.COMPLETE)
        print(f"overall (game-weighted): accuracy {overall.mean_accuracy:.4f}")
    written = emit_reports(args.out, accuracy=reports, wins_delta=delta_records)
    for path in written:
        print(f"wrote {path}")
    return EXIT_OK


def _cmd_sweep(args: argparse.Namespace) -> int:
    bundle = load_bundle(args.data)
    datasets = _select_seasons(bundle, args.season)
    config = _config_from_args(args, args.method)
    k_values = _parse_windows(args.windows)
    per_season = {}
    for dataset in datasets:
        per_season[dataset.season_id] = analysis.sweep_windows(dataset, config, k_values)
        print(f"{dataset.season_id}: swept {len(sorted(set(k_values)))} window sizes")
    if len(datasets) > 1:
        points = analysis.aggregate_sweep(per_season, {d.season_id: d for d in datasets})
    else:
        points = next(iter(per_season.values()))
    written = emit_reports(args.out, sweep=points)
    for path in written:
        print(f"wrote {path}")
    best = max((p for p in points if p.interval is Interval.COMPLETE), key=lambda p: p.mean_accuracy)
    print(f"best complete-season window: k={best.window} at {best.mean_accuracy:.4f}")
    return EXIT_OK


def _cmd_compare(args: argparse.Namespace) -> int:
    method_ids = [m.strip() for m in args.methods.split(",") if m.strip()]
    if len(method_ids) < 2:
        raise ConfigError(f"--methods needs at least two ids, got {args.methods!r}")
    bundle = load_bundle(args.data)
    datasets = _select_seasons(bundle, args.season)
    configs = [_config_from_args(args, mid) for mid in method_ids]
    comparisons = analysis.compare_methods(datasets, configs)
    print(f"{'pair':<12} {'interval':<12} {'a wins':>7} {'b wins':>7} {'ties':>5}")
    for c in comparisons:
        print(f"({c.method_a}) vs ({c.method_b})".ljust(12)
              + f" {c.interval.value:<12} {c.seasons_a:>7} {c.seasons_b:>7} {c.ties:>5}")
    return EXIT_OK


def _print_table(path: Path, title: str) -> None:
    with open(path, encoding="utf-8", newline="") as f:
        rows = list(csv.reader(f))
    if not rows:
        return
    widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]
    print(f"\n{title} ({path})")
    for j, row in enumerate(rows):
        print("  " + "  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)))
        if j == 0:
            print("  " + "  ".join("-" * w for w in widths))


def _cmd_report(args: argparse.Namespace) -> int:
    in_dir = Path(args.in_dir)
    found = False
    accuracy_csv = in_dir / "accuracy.csv"
    if accuracy_csv.exists():
        _print_table(accuracy_csv, "Prediction accuracy")
        found = True
    sweep_csv = in_dir / "sweep.csv"
    if sweep_csv.exists():
        _print_table(sweep_csv, "Window sweep")
        found = True
    delta_csv = in_dir / "wins_delta.csv"
    if delta_csv.exists():
        with open(delta_csv, encoding="utf-8", newline="") as f:
            rows = list(csv.DictReader(f))
        print(f"\nWins delta ({delta_csv})")
        seasons = sorted({r["season_id"] for r in rows})
        for season_id in seasons:
            deltas = [int(r["delta"]) for r in rows if r["season_id"] == season_id]
            if deltas:
                print(f"  {season_id}: {len(deltas)} records, mean delta {sum(deltas) / len(deltas):+.3f}, "
                      f"range [{min(deltas)}, {max(deltas)}]")
        found = True
    if not found:
        print(f"no report CSVs found in {in_dir}", file=sys.stderr)
        return EXIT_VALIDATION
    return EXIT_OK


def run_cli(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DataValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except CourtsimError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RUNTIME
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RUNTIME


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
