"""Core domain types: teams, games, seasons, and per-team historical views.

Everything here is immutable after construction and safe to share read-only
across concurrent replications.
"""

from __future__ import annotations

import datetime as dt
import warnings
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import DataValidationError

TeamId = str

# First season start year with the play-in tournament thresholds in force.
PLAY_IN_FIRST_SEASON = 2020

# Coefficient of the standard box-score possession estimate.
FTA_POSSESSION_WEIGHT = 0.44


class Conference(str, Enum):
    EAST = "East"
    WEST = "West"


class PossessionEstimateWarning(UserWarning):
    """Emitted when a box-score possession estimate had to be clamped."""


@dataclass(frozen=True, slots=True)
class BoxLine:
    """Team totals for one game, the inputs to possession estimation."""

    fga: int
    fta: int
    oreb: int
    tov: int
    possessions: float | None = None

    def __post_init__(self):
        for name in ("fga", "fta", "oreb", "tov"):
            value = getattr(self, name)
            if not isinstance(value, int) or value < 0:
                raise DataValidationError(f"box stat {name} must be a non-negative integer, got {value!r}")
        if self.possessions is not None and not (self.possessions >= 0):
            raise DataValidationError(f"possessions must be non-negative, got {self.possessions!r}")


def estimate_possessions(box: BoxLine) -> float:
    """Possessions for one team-game.

    An explicit possession count on the box line wins; otherwise the standard
    box-score estimate ``fga - oreb + tov + 0.44 * fta`` is used. A negative
    estimate (pathological inputs) is clamped to zero with a warning.
    """
    if box.possessions is not None:
        return float(box.possessions)
    estimate = box.fga - box.oreb + box.tov + FTA_POSSESSION_WEIGHT * box.fta
    if estimate < 0:
        warnings.warn(
            f"negative possession estimate {estimate:.2f} clamped to 0",
            PossessionEstimateWarning,
            stacklevel=2,
        )
        return 0.0
    return estimate


@dataclass(frozen=True, slots=True)
class GameRecord:
    """One historical game. NBA games cannot end tied."""

    game_id: str
    season_id: str
    date: dt.date
    home: TeamId
    away: TeamId
    home_points: int
    away_points: int
    home_box: BoxLine
    away_box: BoxLine

    def __post_init__(self):
        if not self.game_id:
            raise DataValidationError("game_id must be non-empty")
        if not self.home or not self.away:
            raise DataValidationError(f"game {self.game_id}: team ids must be non-empty")
        if self.home == self.away:
            raise DataValidationError(f"game {self.game_id}: home and away team are both {self.home}")
        if self.home_points < 0 or self.away_points < 0:
            raise DataValidationError(f"game {self.game_id}: negative points")
        if self.home_points == self.away_points:
            raise DataValidationError(f"game {self.game_id}: tie score {self.home_points}-{self.away_points}")

    @property
    def home_won(self) -> bool:
        return self.home_points > self.away_points

    @property
    def winner(self) -> TeamId:
        return self.home if self.home_won else self.away

    def involves(self, team: TeamId) -> bool:
        return team == self.home or team == self.away


@dataclass(frozen=True, slots=True)
class EraRules:
    """Standings thresholds for clinch/elimination in a given rules era."""

    classify_rank: int
    eliminate_rank: int

    def __post_init__(self):
        if self.classify_rank < 1:
            raise DataValidationError(f"classify_rank must be >= 1, got {self.classify_rank}")
        if self.eliminate_rank < 2:
            raise DataValidationError(f"eliminate_rank must be >= 2, got {self.eliminate_rank}")
        if self.eliminate_rank <= self.classify_rank:
            raise DataValidationError(
                f"eliminate_rank ({self.eliminate_rank}) must exceed classify_rank ({self.classify_rank})"
            )

    @classmethod
    def for_season(cls, season_id: str) -> "EraRules":
        """Default thresholds: top-8 clinch / 9th elimination before the
        play-in tournament, 6/11 from the 2020-21 season onward."""
        start_year = season_start_year(season_id)
        if start_year >= PLAY_IN_FIRST_SEASON:
            return cls(classify_rank=6, eliminate_rank=11)
        return cls(classify_rank=8, eliminate_rank=9)


def season_start_year(season_id: str) -> int:
    """Parse the leading year out of a season id like ``2021-2022``."""
    try:
        return int(season_id[:4])
    except (TypeError, ValueError):
        raise DataValidationError(f"cannot parse season start year from {season_id!r}") from None


def order_season(games: Iterable[GameRecord]) -> list[GameRecord]:
    """Stable chronological ordering: by date, then game_id within a date.

    All games must belong to one season and carry unique game ids.
    """
    ordered = sorted(games, key=lambda g: (g.date, g.game_id))
    seasons = {g.season_id for g in ordered}
    if len(seasons) > 1:
        raise DataValidationError(f"games span multiple seasons: {sorted(seasons)}")
    seen: set[str] = set()
    for game in ordered:
        if game.game_id in seen:
            raise DataValidationError(f"duplicate game_id {game.game_id!r}")
        seen.add(game.game_id)
    return ordered


@dataclass(frozen=True)
class SeasonDataset:
    """A validated, chronologically ordered season.

    ``schedule_counts`` holds each team's total scheduled games in this
    dataset; real seasons are not perfectly uniform (a cancelled 2012-13 game
    left two teams at 81), so per-team totals are authoritative and the
    ``schedule_length`` property reports the league-typical count.
    """

    season_id: str
    games: tuple[GameRecord, ...]
    conferences: Mapping[TeamId, Conference]
    era: EraRules
    pick_ownership: Mapping[TeamId, bool]
    priors: Mapping[TeamId, float] | None = None
    schedule_counts: Mapping[TeamId, int] = field(default_factory=dict)

    @classmethod
    def build(
        cls,
        season_id: str,
        games: Iterable[GameRecord],
        conferences: Mapping[TeamId, Conference],
        era: EraRules | None = None,
        pick_ownership: Mapping[TeamId, bool] | None = None,
        priors: Mapping[TeamId, float] | None = None,
    ) -> "SeasonDataset":
        ordered = order_season(games)
        if not ordered:
            raise DataValidationError(f"season {season_id}: no games")
        if any(g.season_id != season_id for g in ordered):
            raise DataValidationError(f"games do not all belong to season {season_id}")
        counts: Counter[TeamId] = Counter()
        for game in ordered:
            counts[game.home] += 1
            counts[game.away] += 1
        for team in counts:
            if team not in conferences:
                raise DataValidationError(f"season {season_id}: team {team} has no conference entry")
        if pick_ownership is None:
            pick_ownership = {team: True for team in counts}
        if priors is not None:
            for team, prior in priors.items():
                if not (0.0 < prior < 1.0):
                    raise DataValidationError(f"prior for {team} must be in (0,1), got {prior}")
        return cls(
            season_id=season_id,
            games=tuple(ordered),
            conferences=dict(conferences),
            era=era if era is not None else EraRules.for_season(season_id),
            pick_ownership=dict(pick_ownership),
            priors=dict(priors) if priors is not None else None,
            schedule_counts=dict(counts),
        )

    @property
    def teams(self) -> tuple[TeamId, ...]:
        return tuple(sorted(self.schedule_counts))

    @property
    def schedule_length(self) -> int:
        """The most common per-team scheduled game count (82 in a normal season)."""
        counts = Counter(self.schedule_counts.values())
        return counts.most_common(1)[0][0]

    def scheduled_games(self, team: TeamId) -> int:
        try:
            return self.schedule_counts[team]
        except KeyError:
            raise DataValidationError(f"unknown team {team!r} in season {self.season_id}") from None

    def owns_pick(self, team: TeamId) -> bool:
        return bool(self.pick_ownership.get(team, True))


@dataclass(frozen=True, slots=True)
class TeamGameOutcome:
    """One past game from a single team's perspective."""

    won: bool
    at_home: bool
    points_for: int
    points_against: int
    possessions: float


@dataclass(frozen=True, slots=True)
class TeamHistoryView:
    """A team's chronologically ordered outcomes before some game index."""

    entries: tuple[TeamGameOutcome, ...]

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[TeamGameOutcome]:
        return iter(self.entries)

    def home_only(self) -> "TeamHistoryView":
        return TeamHistoryView(tuple(e for e in self.entries if e.at_home))


def outcome_for(game: GameRecord, team: TeamId, home_won: bool) -> TeamGameOutcome:
    """Build one history entry for ``team`` given a (possibly simulated)
    home-win flag. Points and possessions always come from the real box
    score; an overlay only rewrites who won."""
    at_home = game.home == team
    if not at_home and game.away != team:
        raise DataValidationError(f"team {team} did not play in game {game.game_id}")
    box = game.home_box if at_home else game.away_box
    points_for = game.home_points if at_home else game.away_points
    points_against = game.away_points if at_home else game.home_points
    return TeamGameOutcome(
        won=home_won == at_home,
        at_home=at_home,
        points_for=points_for,
        points_against=points_against,
        possessions=estimate_possessions(box),
    )


def history_before(
    dataset: SeasonDataset,
    team: TeamId,
    game_index: int,
    overlay: Sequence[bool] | None = None,
) -> TeamHistoryView:
    """History of ``team`` covering all its games strictly before ``game_index``.

    With ``overlay`` (simulated home-win flags for games already played, as in
    closed-loop mode) the won flags come from the overlay instead of the real
    results; without it the real outcomes are used.
    """
    if team not in dataset.schedule_counts:
        raise DataValidationError(f"unknown team {team!r} in season {dataset.season_id}")
    if not (0 <= game_index <= len(dataset.games)):
        raise DataValidationError(f"game_index {game_index} out of range 0..{len(dataset.games)}")
    if overlay is not None and len(overlay) < game_index:
        raise DataValidationError(f"overlay covers {len(overlay)} games, need {game_index}")
    entries = []
    for i in range(game_index):
        game = dataset.games[i]
        if not game.involves(team):
            continue
        home_won = overlay[i] if overlay is not None else game.home_won
        entries.append(outcome_for(game, team, home_won))
    return TeamHistoryView(tuple(entries))
