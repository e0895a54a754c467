"""Second-step outcome models: rating pair -> game outcome distribution.

Two families: the deterministic largest-value rule for any real-valued
rating, and the Bernoulli race for probability-valued ratings (with and
without ties).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import ConfigError, DataError
from .ratings import Rating, Statistic

PROBABILITY_SUM_TOL = 1e-12


class OutcomeFunction(str, Enum):
    BERNOULLI_RACE = "bernoulli-race"
    LARGEST_VALUE = "largest-value"


class GameOutcome(Enum):
    HOME_WIN = "home-win"
    AWAY_WIN = "away-win"
    TIE = "tie"


@dataclass(frozen=True, slots=True)
class OutcomeDistribution:
    p_home_win: float
    p_away_win: float
    p_tie: float = 0.0

    def __post_init__(self):
        for name, p in (("p_home_win", self.p_home_win), ("p_away_win", self.p_away_win), ("p_tie", self.p_tie)):
            if not (0.0 <= p <= 1.0):
                raise DataError(f"{name}={p} outside [0,1]")
        total = self.p_home_win + self.p_away_win + self.p_tie
        if abs(total - 1.0) > PROBABILITY_SUM_TOL:
            raise DataError(f"outcome probabilities sum to {total!r}, not 1")


@dataclass(frozen=True, slots=True)
class MethodSpec:
    """One of the six prediction methods: a statistic, whether the home team
    is rated from home games only, and the outcome function."""

    id: str
    statistic: Statistic
    home_adjusted: bool
    outcome_fn: OutcomeFunction

    def __post_init__(self):
        if self.outcome_fn is OutcomeFunction.BERNOULLI_RACE and self.statistic is not Statistic.WIN_PERCENTAGE:
            raise ConfigError("the Bernoulli race needs a probability-valued statistic (win percentage)")


METHODS: dict[str, MethodSpec] = {
    "i": MethodSpec("i", Statistic.WIN_PERCENTAGE, False, OutcomeFunction.BERNOULLI_RACE),
    "ii": MethodSpec("ii", Statistic.WIN_PERCENTAGE, True, OutcomeFunction.BERNOULLI_RACE),
    "iii": MethodSpec("iii", Statistic.WIN_PERCENTAGE, False, OutcomeFunction.LARGEST_VALUE),
    "iv": MethodSpec("iv", Statistic.WIN_PERCENTAGE, True, OutcomeFunction.LARGEST_VALUE),
    "v": MethodSpec("v", Statistic.NET_RATING, False, OutcomeFunction.LARGEST_VALUE),
    "vi": MethodSpec("vi", Statistic.NET_RATING, True, OutcomeFunction.LARGEST_VALUE),
}


def method(method_id: str) -> MethodSpec:
    try:
        return METHODS[method_id]
    except KeyError:
        raise ConfigError(f"unknown method {method_id!r}; expected one of {', '.join(METHODS)}") from None


def largest_value(r_home: Rating, r_away: Rating) -> OutcomeDistribution:
    """Higher rating wins outright; exact ties become a fair coin."""
    if r_home.kind is not r_away.kind:
        raise ConfigError(f"cannot compare ratings of kind {r_home.kind} and {r_away.kind}")
    if r_home.value > r_away.value:
        return OutcomeDistribution(1.0, 0.0, 0.0)
    if r_home.value < r_away.value:
        return OutcomeDistribution(0.0, 1.0, 0.0)
    return OutcomeDistribution(0.5, 0.5, 0.0)


def _check_probability(name: str, p: float) -> None:
    if not (0.0 <= p <= 1.0):
        raise DataError(f"{name}={p} outside [0,1]")


def bernoulli_race_no_ties(p1: float, p2: float) -> OutcomeDistribution:
    """Race of Bernoulli trials until exactly one side succeeds.

    Home wins with probability p1(1-p2) / (p1(1-p2) + (1-p1)p2). The race
    never resolves when p1 = p2 is 0 or 1; the symmetric 50/50 convention
    keeps the function total while preserving the p1 = p2 -> 0.5 identity.
    """
    _check_probability("p1", p1)
    _check_probability("p2", p2)
    home = p1 * (1.0 - p2)
    away = (1.0 - p1) * p2
    denominator = home + away
    if denominator == 0.0:
        return OutcomeDistribution(0.5, 0.5, 0.0)
    return OutcomeDistribution(home / denominator, away / denominator, 0.0)


def bernoulli_race_with_ties(p1: float, p2: float) -> OutcomeDistribution:
    """Single simultaneous Bernoulli trial per side; equal draws tie."""
    _check_probability("p1", p1)
    _check_probability("p2", p2)
    return OutcomeDistribution(
        p1 * (1.0 - p2),
        (1.0 - p1) * p2,
        (1.0 - p1) * (1.0 - p2) + p1 * p2,
    )


def race_distribution(r_home: Rating, r_away: Rating) -> OutcomeDistribution:
    """No-tie Bernoulli race on two probability-valued ratings."""
    return bernoulli_race_no_ties(r_home.value, r_away.value)


def outcome_distribution(method_spec: MethodSpec, r_home: Rating, r_away: Rating) -> OutcomeDistribution:
    if method_spec.outcome_fn is OutcomeFunction.BERNOULLI_RACE:
        return race_distribution(r_home, r_away)
    return largest_value(r_home, r_away)


def sample_outcome(dist: OutcomeDistribution, draw: float) -> GameOutcome:
    """Inverse-CDF sample with fixed category order (home, away, tie).

    One uniform draw decides one game, which is what makes replication RNG
    streams auditable: draws consumed == games simulated.
    """
    if draw < dist.p_home_win:
        return GameOutcome.HOME_WIN
    if draw < dist.p_home_win + dist.p_away_win:
        return GameOutcome.AWAY_WIN
    return GameOutcome.TIE
