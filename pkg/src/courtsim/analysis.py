"""Aggregation of replication results: accuracies with confidence intervals,
simulated-minus-real win deltas with a trend line, historical-window sweeps,
and head-to-head method comparisons."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, replace
from enum import Enum
from typing import Mapping, Sequence

import numpy as np

from .domain import SeasonDataset, TeamId
from .engine import ReplicationResult, SimulationConfig, run_replications
from .errors import AnalysisError
from .ratings import WindowPolicy

Z_95 = 1.96


class Interval(str, Enum):
    COMPLETE = "complete"
    SECOND_HALF = "second-half"


@dataclass(frozen=True, slots=True)
class AccuracyReport:
    season_id: str
    method_id: str
    model: str
    mode: str
    interval: Interval
    mean_accuracy: float
    ci_low: float
    ci_high: float
    replications: int


@dataclass(frozen=True, slots=True)
class WinsDeltaRecord:
    season_id: str
    team: TeamId
    real_wins: int
    rep_index: int
    sim_wins: int
    delta: int


@dataclass(frozen=True, slots=True)
class SweepPoint:
    window: int
    method_id: str
    interval: Interval
    mean_accuracy: float
    ci_low: float
    ci_high: float


@dataclass(frozen=True, slots=True)
class MethodComparison:
    """Season-by-season scoreboard between two methods: how many seasons each
    one wins on mean accuracy (ties count for neither)."""

    method_a: str
    method_b: str
    interval: Interval
    seasons_a: int
    seasons_b: int
    ties: int


def interval_start(n_games: int, interval: Interval) -> int:
    """First eligible league-wide game index: 0, or the chronological midpoint
    ceil(N/2) for the second half."""
    if interval is Interval.COMPLETE:
        return 0
    return (n_games + 1) // 2


def eligible_games(dataset: SeasonDataset, interval: Interval) -> int:
    return len(dataset.games) - interval_start(len(dataset.games), interval)


def _mean_ci(values: np.ndarray) -> tuple[float, float, float]:
    mean = float(np.mean(values))
    if len(values) > 1:
        half_width = Z_95 * float(np.std(values, ddof=1)) / np.sqrt(len(values))
    else:
        half_width = 0.0
    return mean, mean - half_width, mean + half_width


def accuracy(
    results: Sequence[ReplicationResult],
    dataset: SeasonDataset,
    config: SimulationConfig,
    interval: Interval = Interval.COMPLETE,
) -> AccuracyReport:
    """Mean prediction accuracy over replications with a normal 95% CI.

    Per replication the accuracy is the fraction of correct predictions among
    the interval's games; the CI is over the replication means.
    """
    if not results:
        raise AnalysisError("no replication results to aggregate")
    start = interval_start(len(dataset.games), interval)
    if start >= len(dataset.games):
        raise AnalysisError(f"interval {interval.value} contains no games")
    per_rep = np.array([float(np.mean(r.correct[start:])) for r in results])
    mean, ci_low, ci_high = _mean_ci(per_rep)
    return AccuracyReport(
        season_id=dataset.season_id,
        method_id=config.method.id,
        model=config.model.value,
        mode=config.mode.value,
        interval=interval,
        mean_accuracy=mean,
        ci_low=ci_low,
        ci_high=ci_high,
        replications=len(results),
    )


def real_wins(dataset: SeasonDataset) -> dict[TeamId, int]:
    wins = {team: 0 for team in dataset.schedule_counts}
    for game in dataset.games:
        wins[game.winner] += 1
    return wins


def trend_slope(records: Sequence[WinsDeltaRecord]) -> float:
    """Ordinary least-squares slope of delta on real wins; 0 when real wins
    are constant across records (degenerate regression)."""
    x = np.array([r.real_wins for r in records], dtype=np.float64)
    y = np.array([r.delta for r in records], dtype=np.float64)
    var = float(np.mean((x - x.mean()) ** 2))
    if var == 0.0:
        return 0.0
    cov = float(np.mean((x - x.mean()) * (y - y.mean())))
    return cov / var


def wins_delta(
    results: Sequence[ReplicationResult],
    dataset: SeasonDataset,
) -> tuple[list[WinsDeltaRecord], float]:
    """One (team, replication) record of simulated minus real wins, plus the
    OLS trend slope over all records."""
    actual = real_wins(dataset)
    records = [
        WinsDeltaRecord(
            season_id=dataset.season_id,
            team=team,
            real_wins=actual[team],
            rep_index=result.rep_index,
            sim_wins=result.sim_wins[team],
            delta=result.sim_wins[team] - actual[team],
        )
        for result in results
        for team in dataset.teams
    ]
    return records, trend_slope(records)


def sweep_windows(
    dataset: SeasonDataset,
    base_config: SimulationConfig,
    k_values: Sequence[int],
    threads: int | None = None,
) -> list[SweepPoint]:
    """Accuracy as a function of the historical window size.

    The master seed is reused across window values so the only varying factor
    is the window; duplicate k values collapse to one point each.
    """
    if not k_values:
        raise AnalysisError("k_values must be non-empty")
    points = []
    for k in sorted(set(k_values)):
        config = replace(base_config, window=WindowPolicy.last(k))
        results = run_replications(dataset, config, threads)
        for interval in Interval:
            report = accuracy(results, dataset, config, interval)
            points.append(
                SweepPoint(
                    window=k,
                    method_id=config.method.id,
                    interval=interval,
                    mean_accuracy=report.mean_accuracy,
                    ci_low=report.ci_low,
                    ci_high=report.ci_high,
                )
            )
    return points


def compare_methods(
    datasets: Sequence[SeasonDataset],
    configs: Sequence[SimulationConfig],
    threads: int | None = None,
) -> list[MethodComparison]:
    """Count, for every config pair, the seasons each wins on mean accuracy."""
    season_ids = [d.season_id for d in datasets]
    if len(set(season_ids)) != len(season_ids):
        raise AnalysisError(f"duplicate seasons in comparison: {sorted(season_ids)}")
    if len(configs) < 2:
        raise AnalysisError("need at least two configs to compare")
    if len({(c.replications, c.master_seed) for c in configs}) != 1:
        raise AnalysisError("compared configs must share replications and master seed")
    means: dict[tuple[str, str, Interval], float] = {}
    for config in configs:
        for dataset in datasets:
            results = run_replications(dataset, config, threads)
            for interval in Interval:
                report = accuracy(results, dataset, config, interval)
                means[(config.method.id, dataset.season_id, interval)] = report.mean_accuracy
    comparisons = []
    for a, b in itertools.combinations(configs, 2):
        for interval in Interval:
            wins_a = wins_b = ties = 0
            for season_id in season_ids:
                ma = means[(a.method.id, season_id, interval)]
                mb = means[(b.method.id, season_id, interval)]
                if ma > mb:
                    wins_a += 1
                elif mb > ma:
                    wins_b += 1
                else:
                    ties += 1
            comparisons.append(
                MethodComparison(a.method.id, b.method.id, interval, wins_a, wins_b, ties)
            )
    return comparisons


def _combine(reports: Sequence[AccuracyReport], weights: np.ndarray, label: str) -> AccuracyReport:
    if not reports:
        raise AnalysisError("no reports to aggregate")
    keys = {(r.method_id, r.model, r.mode, r.interval) for r in reports}
    if len(keys) != 1:
        raise AnalysisError(f"cannot aggregate mixed report kinds: {sorted(map(str, keys))}")
    weights = weights / weights.sum()
    means = np.array([r.mean_accuracy for r in reports])
    # Season means are independent; their standard errors combine in quadrature.
    ses = np.array([(r.ci_high - r.mean_accuracy) / Z_95 for r in reports])
    mean = float(np.dot(weights, means))
    se = float(np.sqrt(np.sum((weights * ses) ** 2)))
    first = reports[0]
    return AccuracyReport(
        season_id=label,
        method_id=first.method_id,
        model=first.model,
        mode=first.mode,
        interval=first.interval,
        mean_accuracy=mean,
        ci_low=mean - Z_95 * se,
        ci_high=mean + Z_95 * se,
        replications=first.replications,
    )


def aggregate_accuracy(
    pairs: Sequence[tuple[AccuracyReport, int]],
    label: str = "overall",
) -> AccuracyReport:
    """Game-weighted multi-season aggregate of per-season reports."""
    reports = [r for r, _ in pairs]
    weights = np.array([n for _, n in pairs], dtype=np.float64)
    if np.any(weights <= 0):
        raise AnalysisError("aggregate weights must be positive game counts")
    return _combine(reports, weights, label)


def seasons_mean_accuracy(
    reports: Sequence[AccuracyReport],
    label: str = "overall-mean",
) -> AccuracyReport:
    """Unweighted mean of per-season accuracies (auxiliary aggregate)."""
    return _combine(reports, np.ones(len(reports)) if reports else np.array([]), label)


def aggregate_sweep(
    per_season: Mapping[str, Sequence[SweepPoint]],
    datasets: Mapping[str, SeasonDataset],
) -> list[SweepPoint]:
    """Game-weighted combination of per-season sweep points at matching
    (window, method, interval) keys."""
    grouped: dict[tuple[int, str, Interval], list[tuple[SweepPoint, int]]] = {}
    for season_id, points in per_season.items():
        dataset = datasets[season_id]
        for point in points:
            key = (point.window, point.method_id, point.interval)
            grouped.setdefault(key, []).append((point, eligible_games(dataset, point.interval)))
    if len({len(v) for v in grouped.values()}) > 1:
        raise AnalysisError("sweep points do not cover the same windows in every season")
    combined = []
    for (window, method_id, interval), pairs in sorted(grouped.items(), key=lambda kv: (kv[0][0], kv[0][1], kv[0][2].value)):
        weights = np.array([n for _, n in pairs], dtype=np.float64)
        weights = weights / weights.sum()
        means = np.array([p.mean_accuracy for p, _ in pairs])
        ses = np.array([(p.ci_high - p.mean_accuracy) / Z_95 for p, _ in pairs])
        mean = float(np.dot(weights, means))
        se = float(np.sqrt(np.sum((weights * ses) ** 2)))
        combined.append(
            SweepPoint(
                window=window,
                method_id=method_id,
                interval=interval,
                mean_accuracy=mean,
                ci_low=mean - Z_95 * se,
                ci_high=mean + Z_95 * se,
            )
        )
    return combined
