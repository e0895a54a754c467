"""First-step strength ratings: win percentage with a prior, and net rating.

Both statistics support sliding historical windows and the home-adjusted
variant where the home team is rated from its home games only.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import TYPE_CHECKING, Mapping, Sequence

from .domain import (
    SeasonDataset,
    TeamGameOutcome,
    TeamHistoryView,
    TeamId,
    estimate_possessions,
    history_before,
)
from .errors import ConfigError, DataError

if TYPE_CHECKING:
    from .outcomes import MethodSpec

__all__ = [
    "Rating",
    "RatingKind",
    "Statistic",
    "WindowPolicy",
    "estimate_possessions",
    "win_percentage",
    "net_rating",
    "rate_for_game",
    "resolve_prior",
]

DEFAULT_PRIOR = 0.5


class RatingKind(Enum):
    PROBABILITY = "probability"
    REAL_VALUED = "real-valued"


class Statistic(str, Enum):
    WIN_PERCENTAGE = "win-percentage"
    NET_RATING = "net-rating"


@dataclass(frozen=True, slots=True)
class Rating:
    value: float
    kind: RatingKind

    def __post_init__(self):
        if self.kind is RatingKind.PROBABILITY and not (0.0 <= self.value <= 1.0):
            raise DataError(f"probability rating out of [0,1]: {self.value}")


@dataclass(frozen=True, slots=True)
class WindowPolicy:
    """How many most-recent games feed the rating. ``k=None`` keeps them all."""

    k: int | None = None

    def __post_init__(self):
        if self.k is not None and self.k < 1:
            raise ConfigError(f"window k must be >= 1, got {self.k}")

    @classmethod
    def all_games(cls) -> "WindowPolicy":
        return cls(None)

    @classmethod
    def last(cls, k: int) -> "WindowPolicy":
        return cls(k)

    @property
    def unbounded(self) -> bool:
        return self.k is None

    def apply(self, entries: Sequence[TeamGameOutcome]) -> Sequence[TeamGameOutcome]:
        if self.k is None or len(entries) <= self.k:
            return entries
        return entries[-self.k :]


def win_percentage(
    view: TeamHistoryView,
    prior: float = DEFAULT_PRIOR,
    window: WindowPolicy = WindowPolicy(),
) -> Rating:
    """Smoothed win fraction ``(prior + wins) / (1 + games)`` over the window.

    The prior keeps the value strictly inside (0, 1) for any finite history;
    an empty view yields the prior itself.
    """
    if not (0.0 < prior < 1.0):
        raise ConfigError(f"prior must lie strictly inside (0,1), got {prior}")
    tail = window.apply(view.entries)
    wins = sum(1 for e in tail if e.won)
    return Rating((prior + wins) / (1 + len(tail)), RatingKind.PROBABILITY)


def net_rating(view: TeamHistoryView, window: WindowPolicy = WindowPolicy()) -> Rating:
    """Point differential per 100 possessions over the window; 0 when empty."""
    tail = window.apply(view.entries)
    if not tail:
        return Rating(0.0, RatingKind.REAL_VALUED)
    possessions = sum(e.possessions for e in tail)
    if possessions <= 0:
        raise DataError(f"net rating over {len(tail)} games with non-positive possession total")
    diff = sum(e.points_for - e.points_against for e in tail)
    return Rating(100.0 * diff / possessions, RatingKind.REAL_VALUED)


def resolve_prior(
    prior: float | Mapping[TeamId, float] | None,
    dataset: SeasonDataset,
    team: TeamId,
) -> float:
    """Pick the prior for one team.

    An explicit float applies to everyone; an explicit mapping is per-team
    (missing teams fall back to the neutral 0.5); ``None`` defers to the
    dataset's optional priors file, then to the neutral default.
    """
    if prior is None:
        if dataset.priors is not None:
            return dataset.priors.get(team, DEFAULT_PRIOR)
        return DEFAULT_PRIOR
    if isinstance(prior, Mapping):
        return prior.get(team, DEFAULT_PRIOR)
    return float(prior)


def compute_statistic(
    method: "MethodSpec",
    home_view: TeamHistoryView,
    away_view: TeamHistoryView,
    window: WindowPolicy,
    home_prior: float,
    away_prior: float,
) -> tuple[Rating, Rating]:
    """Rate both sides of a game from already-built history views.

    Home adjustment filters the home team's view to home games before the
    window applies; the away team always uses its overall view.
    """
    if method.home_adjusted:
        home_view = home_view.home_only()
    if method.statistic is Statistic.WIN_PERCENTAGE:
        return (
            win_percentage(home_view, home_prior, window),
            win_percentage(away_view, away_prior, window),
        )
    if method.statistic is Statistic.NET_RATING:
        return net_rating(home_view, window), net_rating(away_view, window)
    raise ConfigError(f"unsupported statistic {method.statistic!r}")


def rate_for_game(
    dataset: SeasonDataset,
    method: "MethodSpec",
    home: TeamId,
    away: TeamId,
    game_index: int,
    window: WindowPolicy = WindowPolicy(),
    prior: float | Mapping[TeamId, float] | None = None,
    overlay: Sequence[bool] | None = None,
) -> tuple[Rating, Rating]:
    """Compute (home, away) ratings for the game at ``game_index``.

    ``overlay`` switches the history source from real results to simulated
    ones, exactly as in :func:`courtsim.domain.history_before`.
    """
    home_view = history_before(dataset, home, game_index, overlay)
    away_view = history_before(dataset, away, game_index, overlay)
    return compute_statistic(
        method,
        home_view,
        away_view,
        window,
        resolve_prior(prior, dataset, home),
        resolve_prior(prior, dataset, away),
    )
