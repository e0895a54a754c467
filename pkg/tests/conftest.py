from __future__ import annotations

import datetime as dt
from pathlib import Path

import numpy as np
import pytest

from courtsim.domain import (
    BoxLine,
    Conference,
    EraRules,
    GameRecord,
    SeasonDataset,
    TeamGameOutcome,
    TeamHistoryView,
)

REPO_ROOT = Path(__file__).resolve().parent.parent
FIXTURE_DIR = REPO_ROOT / "data" / "fixtures"
BROKEN_DIR = Path(__file__).resolve().parent / "data" / "broken"

# fga - oreb + tov + 0.44*fta = 88 - 10 + 11 + 11 = 100 possessions exactly.
EVEN_BOX = BoxLine(fga=88, fta=25, oreb=10, tov=11)


def make_game(game_id, date, home, away, home_pts, away_pts, season_id="2022-2023",
              home_box=EVEN_BOX, away_box=EVEN_BOX):
    return GameRecord(
        game_id=game_id,
        season_id=season_id,
        date=dt.date.fromisoformat(date),
        home=home,
        away=away,
        home_points=home_pts,
        away_points=away_pts,
        home_box=home_box,
        away_box=away_box,
    )


def view(*wins_and_venues) -> TeamHistoryView:
    """Quick history view from ('W'|'L', at_home) pairs or bare 'W'/'L'."""
    entries = []
    for item in wins_and_venues:
        if isinstance(item, tuple):
            outcome, at_home = item
        else:
            outcome, at_home = item, True
        won = outcome == "W"
        entries.append(
            TeamGameOutcome(
                won=won,
                at_home=at_home,
                points_for=105 if won else 95,
                points_against=95 if won else 105,
                possessions=100.0,
            )
        )
    return TeamHistoryView(tuple(entries))


@pytest.fixture(scope="session")
def twoteam_games():
    """ALP beats BET in games 1-3 (alternating venues), BET wins game 4."""
    explicit = BoxLine(fga=88, fta=25, oreb=10, tov=11, possessions=100.0)
    return [
        make_game("G001", "2022-11-01", "ALP", "BET", 100, 90,
                  home_box=explicit, away_box=explicit),
        make_game("G002", "2022-11-03", "BET", "ALP", 95, 105),
        make_game("G003", "2022-11-05", "ALP", "BET", 110, 99),
        make_game("G004", "2022-11-07", "BET", "ALP", 102, 98),
    ]


@pytest.fixture(scope="session")
def twoteam_dataset(twoteam_games):
    return SeasonDataset.build(
        season_id="2022-2023",
        games=twoteam_games,
        conferences={"ALP": Conference.EAST, "BET": Conference.EAST},
    )


def random_league(
    seed: int,
    n_teams: int = 6,
    rounds: int = 2,
    season_id: str = "2016-2017",
    random_picks: bool = True,
    era: EraRules | None = EraRules(classify_rank=2, eliminate_rank=3),
) -> SeasonDataset:
    """A small synthetic season: full double round-robin with random scores.

    Deterministic in the seed; team count must be even so each conference
    gets at least one team. The default era thresholds are tightened so
    clinch/elimination actually occur in conferences this small.
    """
    rng = np.random.default_rng(seed)
    teams = [f"T{i:02d}" for i in range(n_teams)]
    conferences = {
        team: Conference.EAST if i < n_teams // 2 else Conference.WEST
        for i, team in enumerate(teams)
    }
    pairs = []
    for _ in range(rounds):
        pairs.extend((h, a) for h in teams for a in teams if h != a)
    order = rng.permutation(len(pairs))
    start = dt.date(2016, 11, 1)
    games = []
    for n, idx in enumerate(order):
        home, away = pairs[idx]
        home_pts = int(rng.integers(90, 125))
        away_pts = int(rng.integers(90, 125))
        if home_pts == away_pts:
            away_pts += 1 if rng.random() < 0.5 else -1
        games.append(
            make_game(
                f"R{n:04d}",
                (start + dt.timedelta(days=n // 4)).isoformat(),
                home,
                away,
                home_pts,
                away_pts,
                season_id=season_id,
            )
        )
    ownership = {team: bool(rng.random() < 0.7) if random_picks else True for team in teams}
    return SeasonDataset.build(
        season_id=season_id,
        games=games,
        conferences=conferences,
        era=era,
        pick_ownership=ownership,
    )
