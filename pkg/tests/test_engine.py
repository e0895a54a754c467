from __future__ import annotations

import numpy as np
import pytest

from courtsim.agents import IncentiveParams, playoff_status, compute_standings, incentive_adjustment
from courtsim.engine import (
    Mode,
    Model,
    SimulationConfig,
    replication_stream,
    run_replications,
    simulate_replication,
)
from courtsim.errors import ConfigError
from courtsim.outcomes import GameOutcome, method, outcome_distribution, sample_outcome
from courtsim.ratings import WindowPolicy, rate_for_game

from conftest import random_league


def pure_route(dataset, config, rep_index):
    """Reference simulator: rebuilds histories and standings from scratch for
    every game through the public per-game operations, rather than through
    the engine's incremental season walker."""
    n = len(dataset.games)
    draws = replication_stream(config.master_seed, rep_index, n)
    closed_loop = config.mode is Mode.CLOSED_LOOP
    overlay: list[bool] = []
    p_home = np.empty(n)
    sampled_home = np.empty(n, dtype=bool)
    for g, game in enumerate(dataset.games):
        source = overlay if closed_loop else None
        r_home, r_away = rate_for_game(
            dataset, config.method, game.home, game.away, g,
            config.window, config.prior, overlay=source,
        )
        if config.model is Model.EXTENDED:
            snapshot = compute_standings(dataset, g, overlay=source)
            sides = []
            for team, rating in ((game.home, r_home), (game.away, r_away)):
                status = playoff_status(team, snapshot, dataset.era)
                remaining_after = snapshot.standing(team).remaining - 1
                sides.append(
                    incentive_adjustment(
                        rating, config.method, status,
                        dataset.owns_pick(team), remaining_after, config.incentives,
                    )
                )
            r_home, r_away = sides
        dist = outcome_distribution(config.method, r_home, r_away)
        home_won = sample_outcome(dist, draws[g]) is GameOutcome.HOME_WIN
        p_home[g] = dist.p_home_win
        sampled_home[g] = home_won
        overlay.append(home_won if closed_loop else game.home_won)
    return p_home, sampled_home


def config_for(method_id, **kwargs):
    return SimulationConfig(method=method(method_id), **kwargs)


class TestConfigValidation:
    def test_closed_loop_rejects_net_rating(self):
        for mid in ("v", "vi"):
            with pytest.raises(ConfigError, match="monte-carlo"):
                config_for(mid, mode=Mode.CLOSED_LOOP)

    def test_closed_loop_accepts_win_percentage(self):
        for mid in ("i", "ii", "iii", "iv"):
            config_for(mid, mode=Mode.CLOSED_LOOP)

    def test_replications_must_be_positive(self):
        with pytest.raises(ConfigError):
            config_for("i", replications=0)

    def test_seed_range(self):
        config_for("i", master_seed=2**64 - 1)
        with pytest.raises(ConfigError):
            config_for("i", master_seed=2**64)
        with pytest.raises(ConfigError):
            config_for("i", master_seed=-1)

    def test_prior_map_with_unknown_team(self, twoteam_dataset):
        config = config_for("i", prior={"ALP": 0.6, "ZZZ": 0.4}, replications=1)
        with pytest.raises(ConfigError, match="ZZZ"):
            simulate_replication(twoteam_dataset, config, 0)


class TestReplicationStream:
    def test_one_draw_per_game(self, twoteam_dataset):
        assert len(replication_stream(7, 0, len(twoteam_dataset.games))) == 4

    def test_pure_function_of_seed_and_rep(self):
        a = replication_stream(123, 5, 100)
        b = replication_stream(123, 5, 100)
        c = replication_stream(123, 6, 100)
        d = replication_stream(124, 5, 100)
        assert np.array_equal(a, b)
        assert not np.array_equal(a, c)
        assert not np.array_equal(a, d)


class TestFixtureSeason:
    """The hand-enumerated 2-team fixture under method (iii), pi=0.5."""

    def test_per_game_probabilities(self, twoteam_dataset):
        config = config_for("iii", replications=1, master_seed=7)
        result = simulate_replication(twoteam_dataset, config, 0)
        # Ratings: 0.5/0.5, then ALP 0.75/0.25, 0.833/0.167, 0.875/0.125.
        # ALP is home in games 1 and 3, away in games 2 and 4.
        assert result.p_home_win == pytest.approx([0.5, 0.0, 1.0, 0.0])

    def test_rep_accuracy_is_half_or_three_quarters(self, twoteam_dataset):
        config = config_for("iii", replications=200, master_seed=11)
        for result in run_replications(twoteam_dataset, config):
            accuracy = float(np.mean(result.correct))
            assert accuracy in (0.5, 0.75)
            # Games 2-3 always right, game 4 always wrong.
            assert list(result.correct[1:]) == [True, True, False]

    def test_sim_wins_sum_to_game_count(self, twoteam_dataset):
        config = config_for("i", replications=50, master_seed=3)
        for result in run_replications(twoteam_dataset, config):
            assert sum(result.sim_wins.values()) == 4


class TestAgainstPureRoute:
    MC_METHODS = ("i", "ii", "iii", "iv", "v", "vi")
    CL_METHODS = ("i", "ii", "iii", "iv")

    @pytest.mark.parametrize("model", [Model.BASIC, Model.EXTENDED])
    def test_monte_carlo_all_methods(self, model):
        dataset = random_league(seed=101, n_teams=6, rounds=2)
        for mid in self.MC_METHODS:
            config = config_for(mid, model=model, replications=1, master_seed=31,
                                window=WindowPolicy.last(5))
            expected_p, expected_sampled = pure_route(dataset, config, 0)
            result = simulate_replication(dataset, config, 0)
            assert np.array_equal(result.p_home_win, expected_p), mid
            assert np.array_equal(result.sampled_home_win, expected_sampled), mid

    @pytest.mark.parametrize("model", [Model.BASIC, Model.EXTENDED])
    def test_closed_loop_win_percentage_methods(self, model):
        dataset = random_league(seed=55, n_teams=6, rounds=2)
        for mid in self.CL_METHODS:
            config = config_for(mid, model=model, mode=Mode.CLOSED_LOOP,
                                replications=1, master_seed=13)
            expected_p, expected_sampled = pure_route(dataset, config, 0)
            result = simulate_replication(dataset, config, 0)
            assert np.array_equal(result.p_home_win, expected_p), mid
            assert np.array_equal(result.sampled_home_win, expected_sampled), mid

    def test_unbounded_window_and_priors(self):
        dataset = random_league(seed=77, n_teams=6, rounds=1)
        prior = {team: 0.3 + 0.05 * i for i, team in enumerate(dataset.teams)}
        config = config_for("ii", prior=prior, replications=1, master_seed=5)
        expected_p, _ = pure_route(dataset, config, 0)
        result = simulate_replication(dataset, config, 0)
        assert np.array_equal(result.p_home_win, expected_p)


class TestMonteCarloInvariants:
    def test_p_home_is_replication_invariant(self):
        dataset = random_league(seed=23)
        config = config_for("i", replications=5, master_seed=99)
        results = run_replications(dataset, config)
        for result in results[1:]:
            assert np.array_equal(result.p_home_win, results[0].p_home_win)

    def test_deterministic_methods_agree_across_reps_except_exact_ties(self):
        dataset = random_league(seed=29)
        config = config_for("v", replications=4, master_seed=17)
        results = run_replications(dataset, config)
        tied = results[0].p_home_win == 0.5
        for result in results[1:]:
            differs = result.correct != results[0].correct
            assert not np.any(differs & ~tied)

    def test_nondegenerate_fraction_equals_tied_fraction_for_largest_value(self):
        dataset = random_league(seed=41)
        for mid in ("iii", "iv", "v", "vi"):
            config = config_for(mid, replications=1)
            result = simulate_replication(dataset, config, 0)
            nondegenerate = np.mean((result.p_home_win != 0.0) & (result.p_home_win != 1.0))
            assert nondegenerate == np.mean(result.p_home_win == 0.5)


class TestDeterminism:
    def test_same_config_twice_is_identical(self):
        dataset = random_league(seed=61)
        config = config_for("i", replications=6, master_seed=2)
        first = run_replications(dataset, config)
        second = run_replications(dataset, config)
        for a, b in zip(first, second):
            assert np.array_equal(a.sampled_home_win, b.sampled_home_win)
            assert a.sim_wins == b.sim_wins

    def test_parallel_equals_sequential(self):
        dataset = random_league(seed=67)
        for mode, mid in ((Mode.MONTE_CARLO, "i"), (Mode.CLOSED_LOOP, "ii")):
            config = config_for(mid, mode=mode, replications=6, master_seed=3)
            sequential = run_replications(dataset, config, threads=1)
            parallel = run_replications(dataset, config, threads=3)
            assert [r.rep_index for r in parallel] == list(range(6))
            for a, b in zip(sequential, parallel):
                assert np.array_equal(a.sampled_home_win, b.sampled_home_win)
                assert np.array_equal(a.p_home_win, b.p_home_win)
                assert a.sim_wins == b.sim_wins

    def test_single_replication_matches_runner(self, twoteam_dataset):
        config = config_for("i", replications=1, master_seed=44)
        runner = run_replications(twoteam_dataset, config)
        solo = simulate_replication(twoteam_dataset, config, 0)
        assert len(runner) == 1
        assert np.array_equal(runner[0].sampled_home_win, solo.sampled_home_win)


class TestExtendedModel:
    def test_neutralized_incentives_match_basic(self):
        neutral = IncentiveParams(win_pct_factor=1.0, net_rating_decrement=0.0)
        for seed in (5, 6):
            dataset = random_league(seed=seed, n_teams=4, rounds=2)
            for mid in ("i", "iii", "v"):
                basic = config_for(mid, model=Model.BASIC, replications=2, master_seed=8)
                extended = config_for(mid, model=Model.EXTENDED, incentives=neutral,
                                      replications=2, master_seed=8)
                rb = run_replications(dataset, basic)
                re_ = run_replications(dataset, extended)
                for a, b in zip(rb, re_):
                    assert np.array_equal(a.p_home_win, b.p_home_win)
                    assert np.array_equal(a.sampled_home_win, b.sampled_home_win)

    def test_incentives_change_some_prediction(self):
        # Three-team conferences with tight era thresholds lock statuses
        # mid-season, so the extended model must disagree with basic somewhere.
        dataset = random_league(seed=10, n_teams=6, rounds=2, random_picks=False)
        for mid in ("i", "v"):
            basic = config_for(mid, model=Model.BASIC, replications=1)
            extended = config_for(mid, model=Model.EXTENDED, replications=1)
            pb = simulate_replication(dataset, basic, 0).p_home_win
            pe = simulate_replication(dataset, extended, 0).p_home_win
            assert not np.array_equal(pb, pe), mid


class TestWindowEquivalence:
    def test_window_equal_to_schedule_matches_unbounded(self):
        dataset = random_league(seed=35)
        k = dataset.schedule_length
        for mid in ("i", "ii", "v"):
            bounded = config_for(mid, window=WindowPolicy.last(k), replications=2, master_seed=1)
            unbounded = config_for(mid, window=WindowPolicy.all_games(), replications=2, master_seed=1)
            rb = run_replications(dataset, bounded)
            ru = run_replications(dataset, unbounded)
            for a, b in zip(rb, ru):
                assert np.array_equal(a.p_home_win, b.p_home_win)
                assert np.array_equal(a.sampled_home_win, b.sampled_home_win)


class TestPredictionsView:
    def test_rows_match_arrays(self, twoteam_dataset):
        config = config_for("iii", replications=1, master_seed=7)
        result = simulate_replication(twoteam_dataset, config, 0)
        predictions = result.predictions
        assert len(predictions) == 4
        assert [p.game_id for p in predictions] == ["G001", "G002", "G003", "G004"]
        for row, p, sampled, ok in zip(predictions, result.p_home_win,
                                       result.sampled_home_win, result.correct):
            assert row.p_home_win == p
            assert (row.sampled_outcome is GameOutcome.HOME_WIN) == bool(sampled)
            assert row.correct == bool(ok)
