"""Acceptance suite: every criterion runs against committed fixtures only
(no network, no fetched data) and prints one PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -s`` to see the lines as they go;
without ``-s`` they still appear for failures.
"""

from __future__ import annotations

import filecmp
import time
from contextlib import contextmanager
from fractions import Fraction

import numpy as np
import pytest

from courtsim.agents import IncentiveParams, PlayoffStatus, compute_standings, incentive_adjustment, playoff_status
from courtsim.analysis import accuracy
from courtsim.cli import run_cli
from courtsim.engine import Mode, Model, SimulationConfig, run_replications
from courtsim.outcomes import (
    GameOutcome,
    bernoulli_race_no_ties,
    bernoulli_race_with_ties,
    method,
    sample_outcome,
)
from courtsim.ratings import Rating, RatingKind, WindowPolicy

from conftest import FIXTURE_DIR, random_league


@contextmanager
def criterion(number: int, description: str):
    try:
        yield
    except Exception:
        print(f"FAIL  criterion {number}: {description}")
        raise
    print(f"PASS  criterion {number}: {description}")


def test_criterion_1_bernoulli_race_identities():
    with criterion(1, "no-tie race identities vs average team and equal opponents (<= 1e-12)"):
        rng = np.random.default_rng(20230601)
        for _ in range(1000):
            p1 = float(rng.uniform())
            assert abs(bernoulli_race_no_ties(p1, 0.5).p_home_win - p1) <= 1e-12
            assert abs(bernoulli_race_no_ties(p1, p1).p_home_win - 0.5) <= 1e-12


def test_criterion_2_distribution_validity():
    with criterion(2, "both race variants valid on 10,000 random pairs; (0.7,0.4) point value"):
        rng = np.random.default_rng(77)
        for _ in range(10_000):
            p1, p2 = (float(x) for x in rng.uniform(size=2))
            for dist in (bernoulli_race_no_ties(p1, p2), bernoulli_race_with_ties(p1, p2)):
                assert dist.p_home_win >= 0.0 and dist.p_away_win >= 0.0 and dist.p_tie >= 0.0
                assert abs(dist.p_home_win + dist.p_away_win + dist.p_tie - 1.0) <= 1e-12
        point = bernoulli_race_with_ties(0.7, 0.4)
        # Exact rational values: 0.7*0.6, 0.3*0.4, 0.3*0.6 + 0.7*0.4.
        assert abs(point.p_home_win - 0.42) <= 1e-12
        assert abs(point.p_away_win - 0.12) <= 1e-12
        assert abs(point.p_tie - 0.46) <= 1e-12


def test_criterion_3_sampling_convergence():
    with criterion(3, "1e5 samples at race(0.8, 0.6) within 4 SE of 8/11, under 1 second"):
        dist = bernoulli_race_no_ties(0.8, 0.6)
        expected = float(Fraction(8, 11))
        assert abs(dist.p_home_win - expected) <= 1e-12
        n = 100_000
        rng = np.random.default_rng(12)
        start = time.perf_counter()
        draws = rng.random(n)
        hits = sum(sample_outcome(dist, d) is GameOutcome.HOME_WIN for d in draws)
        elapsed = time.perf_counter() - start
        se = np.sqrt(expected * (1 - expected) / n)
        assert abs(hits / n - expected) <= 4 * se
        assert elapsed < 1.0, f"sampling took {elapsed:.2f}s"


def test_criterion_4_fixture_season_expectation(twoteam_dataset):
    with criterion(4, "2-team fixture, method (iii), 10,000 reps: mean accuracy 0.625 +/- 0.02"):
        config = SimulationConfig(method=method("iii"), replications=10_000, master_seed=42)
        results = run_replications(twoteam_dataset, config)
        report = accuracy(results, twoteam_dataset, config)
        assert abs(report.mean_accuracy - 0.625) <= 0.02, report.mean_accuracy


def test_criterion_5_window_equivalence(twoteam_dataset):
    with criterion(5, "window k = schedule length predicts identically to unbounded (exact)"):
        cases = [(twoteam_dataset, 4)]
        league = random_league(seed=2024)
        cases.append((league, league.schedule_length))
        for dataset, k in cases:
            for mid in ("i", "ii", "iii", "iv", "v", "vi"):
                bounded = SimulationConfig(method=method(mid), window=WindowPolicy.last(k),
                                           replications=3, master_seed=6)
                unbounded = SimulationConfig(method=method(mid), window=WindowPolicy.all_games(),
                                             replications=3, master_seed=6)
                rb = run_replications(dataset, bounded)
                ru = run_replications(dataset, unbounded)
                for a, b in zip(rb, ru):
                    assert np.array_equal(a.p_home_win, b.p_home_win)
                    assert np.array_equal(a.sampled_home_win, b.sampled_home_win)
                    assert np.array_equal(a.correct, b.correct)


def test_criterion_6_status_monotonicity(twoteam_dataset):
    with criterion(6, "clinch/elimination monotone over game index on fixtures + 100 random seasons"):
        datasets = [twoteam_dataset]
        rng = np.random.default_rng(8)
        for s in range(100):
            n_teams = int(rng.choice([4, 6, 8]))
            rounds = int(rng.choice([1, 2]))
            datasets.append(random_league(seed=1000 + s, n_teams=n_teams, rounds=rounds))
        for dataset in datasets:
            locked: dict[str, PlayoffStatus] = {}
            for k in range(len(dataset.games) + 1):
                snapshot = compute_standings(dataset, k)
                for team in dataset.teams:
                    status = playoff_status(team, snapshot, dataset.era)
                    if team in locked:
                        assert status is locked[team], (dataset.season_id, team, k)
                    elif status is not PlayoffStatus.CONTENDING:
                        locked[team] = status


def test_criterion_7_incentive_goldens():
    with criterion(7, "incentive goldens: 0.6 -> 0.3 (tank), net 3.0 -> -2.0 (rest)"):
        tanked = incentive_adjustment(
            Rating(0.6, RatingKind.PROBABILITY), method("i"),
            PlayoffStatus.ELIMINATED, owns_pick=True, remaining=20,
        )
        assert tanked.value == pytest.approx(0.3, abs=1e-15)
        rested = incentive_adjustment(
            Rating(3.0, RatingKind.REAL_VALUED), method("v"),
            PlayoffStatus.CLASSIFIED, owns_pick=False, remaining=2,
        )
        assert rested.value == pytest.approx(-2.0, abs=1e-15)


def test_criterion_8_cli_determinism_across_thread_counts(tmp_path, monkeypatch):
    with criterion(8, "CLI runs with COURTSIM_THREADS=1 and =4 emit byte-identical CSVs"):
        outs = {}
        for threads in ("1", "4"):
            out = tmp_path / f"threads-{threads}"
            monkeypatch.setenv("COURTSIM_THREADS", threads)
            code = run_cli([
                "simulate", "--data", str(FIXTURE_DIR / "twoteam"),
                "--method", "i", "--model", "extended", "--mode", "monte-carlo",
                "--reps", "400", "--seed", "99", "--window", "all",
                "--out", str(out),
            ])
            assert code == 0
            outs[threads] = out
        for name in ("accuracy.csv", "wins_delta.csv"):
            assert filecmp.cmp(outs["1"] / name, outs["4"] / name, shallow=False), name


def test_criterion_9_neutralized_incentives_match_basic(twoteam_dataset):
    with criterion(9, "extended model with identity incentives equals basic, game-for-game"):
        neutral = IncentiveParams(win_pct_factor=1.0, net_rating_decrement=0.0)
        datasets = [twoteam_dataset, random_league(seed=303), random_league(seed=304, n_teams=4)]
        for dataset in datasets:
            for mid in ("i", "ii", "iii", "iv", "v", "vi"):
                for mode in (Mode.MONTE_CARLO, Mode.CLOSED_LOOP):
                    if mode is Mode.CLOSED_LOOP and mid in ("v", "vi"):
                        continue
                    basic = SimulationConfig(method=method(mid), model=Model.BASIC, mode=mode,
                                             replications=2, master_seed=1)
                    extended = SimulationConfig(method=method(mid), model=Model.EXTENDED, mode=mode,
                                                incentives=neutral, replications=2, master_seed=1)
                    for a, b in zip(run_replications(dataset, basic), run_replications(dataset, extended)):
                        assert np.array_equal(a.p_home_win, b.p_home_win)
                        assert np.array_equal(a.sampled_home_win, b.sampled_home_win)
