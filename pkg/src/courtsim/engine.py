"""Chronological season simulation and the deterministic replication runner.

Each replication owns an RNG stream that is a pure function of
(master_seed, rep_index), built from a counter-based generator, so results
are bitwise identical no matter how replications are ordered or parallelized.
A replication consumes exactly one uniform draw per game.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from functools import partial
from typing import Mapping

import numpy as np

from .agents import (
    IncentiveParams,
    StandingsSnapshot,
    TeamStanding,
    incentive_adjustment,
    playoff_status,
)
from .domain import Conference, SeasonDataset, TeamHistoryView, TeamId, outcome_for
from .errors import ConfigError
from .outcomes import (
    GameOutcome,
    MethodSpec,
    OutcomeDistribution,
    outcome_distribution,
    sample_outcome,
)
from .ratings import Statistic, WindowPolicy, compute_statistic, resolve_prior

THREADS_ENV_VAR = "COURTSIM_THREADS"
MAX_SEED = 2**64 - 1


class Model(str, Enum):
    BASIC = "basic"
    EXTENDED = "extended"


class Mode(str, Enum):
    MONTE_CARLO = "monte-carlo"
    CLOSED_LOOP = "closed-loop"


@dataclass(frozen=True)
class SimulationConfig:
    method: MethodSpec
    model: Model = Model.BASIC
    mode: Mode = Mode.MONTE_CARLO
    window: WindowPolicy = WindowPolicy()
    prior: float | Mapping[TeamId, float] | None = None
    incentives: IncentiveParams = field(default_factory=IncentiveParams)
    replications: int = 1000
    master_seed: int = 0

    def __post_init__(self):
        if self.replications < 1:
            raise ConfigError(f"replications must be >= 1, got {self.replications}")
        if not (0 <= self.master_seed <= MAX_SEED):
            raise ConfigError(f"master_seed must be an unsigned 64-bit integer, got {self.master_seed}")
        if self.mode is Mode.CLOSED_LOOP and self.method.statistic is not Statistic.WIN_PERCENTAGE:
            raise ConfigError(
                "net-rating methods require monte-carlo mode "
                "(closed-loop would need simulated scores and possessions)"
            )
        if isinstance(self.prior, float) and not (0.0 < self.prior < 1.0):
            raise ConfigError(f"prior must lie strictly inside (0,1), got {self.prior}")


@dataclass(frozen=True, slots=True)
class GamePrediction:
    game_id: str
    p_home_win: float
    sampled_outcome: GameOutcome
    correct: bool


@dataclass(eq=False)
class ReplicationResult:
    """One replication's per-game predictions, stored columnar.

    ``predictions`` materializes the row view on demand; the arrays are what
    the analysis layer consumes.
    """

    rep_index: int
    game_ids: tuple[str, ...]
    p_home_win: np.ndarray
    sampled_home_win: np.ndarray
    correct: np.ndarray
    sim_wins: dict[TeamId, int]

    @property
    def predictions(self) -> tuple[GamePrediction, ...]:
        return tuple(
            GamePrediction(
                game_id=gid,
                p_home_win=float(p),
                sampled_outcome=GameOutcome.HOME_WIN if home else GameOutcome.AWAY_WIN,
                correct=bool(ok),
            )
            for gid, p, home, ok in zip(self.game_ids, self.p_home_win, self.sampled_home_win, self.correct)
        )


def replication_stream(master_seed: int, rep_index: int, n_draws: int) -> np.ndarray:
    """The uniform draws for one replication: Philox keyed by the master seed,
    split on the replication index."""
    seq = np.random.SeedSequence(entropy=master_seed, spawn_key=(rep_index,))
    return np.random.Generator(np.random.Philox(seq)).random(n_draws)


def validate_config_for_dataset(dataset: SeasonDataset, config: SimulationConfig) -> None:
    """Reject config/dataset mismatches before any simulation work starts."""
    if isinstance(config.prior, Mapping):
        unknown = sorted(set(config.prior) - set(dataset.schedule_counts))
        if unknown:
            raise ConfigError(f"prior map names teams absent from season {dataset.season_id}: {unknown}")
        for team, p in config.prior.items():
            if not (0.0 < p < 1.0):
                raise ConfigError(f"prior for {team} must be in (0,1), got {p}")


@dataclass(frozen=True)
class _SeasonIndex:
    """Static geometry of one season: ids, real results, team indexing."""

    game_ids: tuple[str, ...]
    real_home_won: np.ndarray
    home_index: np.ndarray
    away_index: np.ndarray
    teams: tuple[TeamId, ...]


def _season_index(dataset: SeasonDataset) -> _SeasonIndex:
    teams = dataset.teams
    index = {team: i for i, team in enumerate(teams)}
    return _SeasonIndex(
        game_ids=tuple(g.game_id for g in dataset.games),
        real_home_won=np.array([g.home_won for g in dataset.games], dtype=bool),
        home_index=np.array([index[g.home] for g in dataset.games], dtype=np.intp),
        away_index=np.array([index[g.away] for g in dataset.games], dtype=np.intp),
        teams=teams,
    )


@dataclass(frozen=True)
class _BenchmarkPass:
    """Per-game quantities shared by every monte-carlo replication: the
    outcome distributions are replication-invariant because ratings always
    come from real past results."""

    index: _SeasonIndex
    p_home_win: np.ndarray


class _SeasonWalker:
    """Mutable per-pass state: team histories and standings counters.

    One walker walks one season once, fed the outcome of each game in turn
    (real outcomes for the monte-carlo benchmark pass, sampled outcomes for a
    closed-loop replication).
    """

    def __init__(self, dataset: SeasonDataset, config: SimulationConfig):
        self.dataset = dataset
        self.config = config
        self.extended = config.model is Model.EXTENDED
        self.entries: dict[TeamId, list] = {team: [] for team in dataset.schedule_counts}
        self.wins = {team: 0 for team in dataset.schedule_counts}
        self.played = {team: 0 for team in dataset.schedule_counts}
        self.prior_of = {
            team: resolve_prior(config.prior, dataset, team) for team in dataset.schedule_counts
        }

    def _snapshot(self) -> StandingsSnapshot:
        by_conference: dict[Conference, list[TeamStanding]] = {c: [] for c in Conference}
        for team in self.dataset.schedule_counts:
            by_conference[self.dataset.conferences[team]].append(
                TeamStanding(
                    team=team,
                    wins=self.wins[team],
                    losses=self.played[team] - self.wins[team],
                    remaining=self.dataset.scheduled_games(team) - self.played[team],
                )
            )
        return StandingsSnapshot(
            by_conference={
                conference: tuple(sorted(standings, key=lambda s: (-s.wins, s.team)))
                for conference, standings in by_conference.items()
            }
        )

    def distribution(self, game_index: int) -> OutcomeDistribution:
        game = self.dataset.games[game_index]
        config = self.config
        r_home, r_away = compute_statistic(
            config.method,
            TeamHistoryView(tuple(self.entries[game.home])),
            TeamHistoryView(tuple(self.entries[game.away])),
            config.window,
            self.prior_of[game.home],
            self.prior_of[game.away],
        )
        if self.extended:
            snapshot = self._snapshot()
            adjusted = []
            for team, rating in ((game.home, r_home), (game.away, r_away)):
                status = playoff_status(team, snapshot, self.dataset.era)
                # Rest trigger counts games strictly after the current one.
                games_after_this = self.dataset.scheduled_games(team) - self.played[team] - 1
                adjusted.append(
                    incentive_adjustment(
                        rating,
                        config.method,
                        status,
                        self.dataset.owns_pick(team),
                        games_after_this,
                        config.incentives,
                    )
                )
            r_home, r_away = adjusted
        return outcome_distribution(config.method, r_home, r_away)

    def advance(self, game_index: int, home_won: bool) -> None:
        game = self.dataset.games[game_index]
        self.entries[game.home].append(outcome_for(game, game.home, home_won))
        self.entries[game.away].append(outcome_for(game, game.away, home_won))
        self.wins[game.home if home_won else game.away] += 1
        self.played[game.home] += 1
        self.played[game.away] += 1


def benchmark_pass(dataset: SeasonDataset, config: SimulationConfig) -> _BenchmarkPass:
    """Walk the season once against real outcomes, collecting every game's
    home-win probability under the configured method and model."""
    walker = _SeasonWalker(dataset, config)
    p_home = np.empty(len(dataset.games), dtype=np.float64)
    for g, game in enumerate(dataset.games):
        p_home[g] = walker.distribution(g).p_home_win
        walker.advance(g, game.home_won)
    return _BenchmarkPass(index=_season_index(dataset), p_home_win=p_home)


def _sim_wins(index: _SeasonIndex, sampled_home: np.ndarray) -> dict[TeamId, int]:
    winner_index = np.where(sampled_home, index.home_index, index.away_index)
    counts = np.bincount(winner_index, minlength=len(index.teams))
    return {team: int(counts[i]) for i, team in enumerate(index.teams)}


def simulate_replication(
    dataset: SeasonDataset,
    config: SimulationConfig,
    rep_index: int,
    shared: _BenchmarkPass | None = None,
) -> ReplicationResult:
    """Simulate one full season pass under the replication's RNG stream."""
    validate_config_for_dataset(dataset, config)
    n = len(dataset.games)
    draws = replication_stream(config.master_seed, rep_index, n)
    if config.mode is Mode.MONTE_CARLO:
        if shared is None:
            shared = benchmark_pass(dataset, config)
        index = shared.index
        p_home = shared.p_home_win
        sampled_home = draws < p_home
    else:
        index = shared.index if shared is not None else _season_index(dataset)
        walker = _SeasonWalker(dataset, config)
        p_home = np.empty(n, dtype=np.float64)
        sampled_home = np.empty(n, dtype=bool)
        for g in range(n):
            dist = walker.distribution(g)
            home_won = sample_outcome(dist, draws[g]) is GameOutcome.HOME_WIN
            p_home[g] = dist.p_home_win
            sampled_home[g] = home_won
            walker.advance(g, home_won)
    return ReplicationResult(
        rep_index=rep_index,
        game_ids=index.game_ids,
        p_home_win=p_home,
        sampled_home_win=sampled_home,
        correct=sampled_home == index.real_home_won,
        sim_wins=_sim_wins(index, sampled_home),
    )


def resolve_threads(threads: int | None = None) -> int:
    """Worker count: explicit argument, else COURTSIM_THREADS, else 1.
    Affects speed only; results are identical at any setting."""
    if threads is None:
        raw = os.environ.get(THREADS_ENV_VAR, "").strip()
        if raw:
            try:
                threads = int(raw)
            except ValueError:
                raise ConfigError(f"{THREADS_ENV_VAR} must be an integer, got {raw!r}") from None
        else:
            threads = 1
    if threads < 1:
        raise ConfigError(f"thread count must be >= 1, got {threads}")
    return threads


def run_replications(
    dataset: SeasonDataset,
    config: SimulationConfig,
    threads: int | None = None,
) -> list[ReplicationResult]:
    """All replications of a config, in rep_index order.

    The monte-carlo benchmark pass is computed once and shared; replications
    then differ only in their sampling draws. With more than one worker the
    replications are farmed out to processes, which cannot change the output:
    every replication is a pure function of (dataset, config, rep_index).
    """
    validate_config_for_dataset(dataset, config)
    threads = min(resolve_threads(threads), config.replications)
    shared = benchmark_pass(dataset, config) if config.mode is Mode.MONTE_CARLO else None
    rep_indices = range(config.replications)
    if threads == 1:
        return [simulate_replication(dataset, config, r, shared) for r in rep_indices]
    task = partial(_replicate_task, dataset, config, shared)
    chunksize = max(1, -(-config.replications // (threads * 4)))
    with ProcessPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(task, rep_indices, chunksize=chunksize))


def _replicate_task(dataset, config, shared, rep_index):
    return simulate_replication(dataset, config, rep_index, shared)
