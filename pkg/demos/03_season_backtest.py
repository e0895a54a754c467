"""Replicated season backtesting: all six methods on the fixture league.
========================================================================

Games are simulated chronologically, each predicted from the data available
before it, then sampled against the real result. Replications share
per-game probabilities (only the sampling differs), so the backtest is a
Monte Carlo estimate of each method's accuracy.
"""

from pathlib import Path

from courtsim import (
    Interval,
    METHODS,
    SimulationConfig,
    accuracy,
    load_bundle,
    run_replications,
    wins_delta,
)

DATA = Path(__file__).resolve().parent.parent / "data" / "fixtures" / "minileague"

bundle = load_bundle(DATA)
dataset = bundle.season("2016-2017")
print(f"{dataset.season_id}: {len(dataset.games)} games, "
      f"{len(dataset.teams)} teams, {dataset.schedule_length} each\n")

print(f"{'method':<8} {'complete':>10} {'2nd half':>10} {'CI width':>10} {'delta slope':>12}")
for method_id, method_spec in METHODS.items():
    config = SimulationConfig(method=method_spec, replications=1000, master_seed=2016)
    results = run_replications(dataset, config)
    complete = accuracy(results, dataset, config, Interval.COMPLETE)
    second = accuracy(results, dataset, config, Interval.SECOND_HALF)
    _, slope = wins_delta(results, dataset)
    width = complete.ci_high - complete.ci_low
    print(f"({method_id})".ljust(8)
          + f" {complete.mean_accuracy:>9.1%} {second.mean_accuracy:>9.1%}"
          + f" {width:>10.4f} {slope:>+12.3f}")

print("""
Things to notice:
 - largest-value methods (iii)-(vi) beat the Bernoulli race on raw accuracy;
 - their CI width collapses to ~0 because predictions are deterministic
   (randomness survives only in exactly-tied ratings);
 - the wins-delta slope measures bias: negative means strong teams are
   underestimated. On real NBA seasons, where win totals spread much wider
   than in this 6-team league, the largest-value slopes turn clearly
   positive while the race methods stay near zero or below.
""")
