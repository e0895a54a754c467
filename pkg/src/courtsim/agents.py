"""Team-agent reasoning for the extended model: standings awareness,
clinch/elimination status, and the tanking/resting rating adjustments.

Clinch and elimination use conservative win-total bounds rather than exact
schedule-coupled elimination: a team is classified once fewer than
``classify_rank`` conference rivals can still out-win it, and eliminated once
``eliminate_rank - 1`` rivals already exceed its ceiling. The bounds are
monotone over a season and err toward "contending", so incentives can start
late but never fire spuriously.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import TYPE_CHECKING, Sequence

from .domain import Conference, EraRules, SeasonDataset, TeamId
from .errors import ConfigError, DataError
from .ratings import Rating, RatingKind, Statistic

if TYPE_CHECKING:
    from .outcomes import MethodSpec


class PlayoffStatus(Enum):
    CLASSIFIED = "classified"
    CONTENDING = "contending"
    ELIMINATED = "eliminated"


@dataclass(frozen=True, slots=True)
class TeamStanding:
    team: TeamId
    wins: int
    losses: int
    remaining: int


@dataclass(frozen=True)
class StandingsSnapshot:
    """Per-conference standings before some game index, wins descending."""

    by_conference: dict[Conference, tuple[TeamStanding, ...]]

    def conference_of(self, team: TeamId) -> Conference:
        for conference, standings in self.by_conference.items():
            if any(s.team == team for s in standings):
                return conference
        raise DataError(f"team {team!r} not present in standings snapshot")

    def standing(self, team: TeamId) -> TeamStanding:
        for standings in self.by_conference.values():
            for s in standings:
                if s.team == team:
                    return s
        raise DataError(f"team {team!r} not present in standings snapshot")


@dataclass(frozen=True, slots=True)
class IncentiveParams:
    """Rule-based incentive strengths; the defaults are the studied values:
    halve the win percentage, knock 5 off the net rating, rest once at most
    three games remain."""

    win_pct_factor: float = 0.5
    net_rating_decrement: float = 5.0
    rest_trigger_remaining: int = 3

    def __post_init__(self):
        if not (0.0 < self.win_pct_factor <= 1.0):
            raise ConfigError(f"win_pct_factor must be in (0,1], got {self.win_pct_factor}")
        if self.net_rating_decrement < 0:
            raise ConfigError(f"net_rating_decrement must be >= 0, got {self.net_rating_decrement}")
        if self.rest_trigger_remaining < 0:
            raise ConfigError(f"rest_trigger_remaining must be >= 0, got {self.rest_trigger_remaining}")


def compute_standings(
    dataset: SeasonDataset,
    game_index: int,
    overlay: Sequence[bool] | None = None,
) -> StandingsSnapshot:
    """Standings from all games strictly before ``game_index``.

    With an overlay the won flags come from simulated outcomes (closed-loop
    mode); otherwise from the real results. ``remaining`` counts against each
    team's own scheduled total, which tolerates rare uneven schedules.
    """
    if not (0 <= game_index <= len(dataset.games)):
        raise DataError(f"game_index {game_index} out of range 0..{len(dataset.games)}")
    wins = {team: 0 for team in dataset.schedule_counts}
    played = {team: 0 for team in dataset.schedule_counts}
    for i in range(game_index):
        game = dataset.games[i]
        home_won = overlay[i] if overlay is not None else game.home_won
        winner = game.home if home_won else game.away
        wins[winner] += 1
        played[game.home] += 1
        played[game.away] += 1
    by_conference: dict[Conference, list[TeamStanding]] = {c: [] for c in Conference}
    for team in sorted(dataset.schedule_counts):
        standing = TeamStanding(
            team=team,
            wins=wins[team],
            losses=played[team] - wins[team],
            remaining=dataset.scheduled_games(team) - played[team],
        )
        by_conference[dataset.conferences[team]].append(standing)
    return StandingsSnapshot(
        by_conference={
            conference: tuple(sorted(standings, key=lambda s: (-s.wins, s.team)))
            for conference, standings in by_conference.items()
        }
    )


def playoff_status(team: TeamId, snapshot: StandingsSnapshot, era: EraRules) -> PlayoffStatus:
    """Clinch/elimination status from conservative win-total bounds.

    Ties in final win totals are resolved in favor of the evaluated team in
    both directions (actual NBA tiebreakers are out of scope).
    """
    conference = snapshot.conference_of(team)
    mine = snapshot.standing(team)
    rivals = [s for s in snapshot.by_conference[conference] if s.team != team]
    can_outwin_me = sum(1 for s in rivals if s.wins + s.remaining > mine.wins)
    if can_outwin_me < era.classify_rank:
        return PlayoffStatus.CLASSIFIED
    already_above_ceiling = sum(1 for s in rivals if s.wins > mine.wins + mine.remaining)
    if already_above_ceiling >= era.eliminate_rank - 1:
        return PlayoffStatus.ELIMINATED
    return PlayoffStatus.CONTENDING


def incentive_adjustment(
    rating: Rating,
    method: "MethodSpec",
    status: PlayoffStatus,
    owns_pick: bool,
    remaining: int,
    params: IncentiveParams = IncentiveParams(),
) -> Rating:
    """Apply the tanking/resting incentive to a rating, at most once.

    Tanking: eliminated and still owning the upcoming first-round pick.
    Resting: classified with at most ``rest_trigger_remaining`` games left.
    Win-percentage ratings are scaled by ``win_pct_factor``; net ratings are
    reduced by ``net_rating_decrement``.
    """
    tanking = status is PlayoffStatus.ELIMINATED and owns_pick
    resting = status is PlayoffStatus.CLASSIFIED and remaining <= params.rest_trigger_remaining
    if not (tanking or resting):
        return rating
    if method.statistic is Statistic.WIN_PERCENTAGE:
        if rating.kind is not RatingKind.PROBABILITY:
            raise ConfigError("win-percentage incentive applied to a non-probability rating")
        return Rating(rating.value * params.win_pct_factor, RatingKind.PROBABILITY)
    if rating.kind is not RatingKind.REAL_VALUED:
        raise ConfigError("net-rating incentive applied to a non-real-valued rating")
    return Rating(rating.value - params.net_rating_decrement, RatingKind.REAL_VALUED)
