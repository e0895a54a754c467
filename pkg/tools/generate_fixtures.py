"""Regenerate the committed synthetic fixture league under data/fixtures/.

The minileague is a 6-team double round-robin with seeded random scores;
deterministic output, safe to re-run (files only change if the recipe does).
"""

from __future__ import annotations

import csv
import datetime as dt
from pathlib import Path

import numpy as np

from courtsim.data_io import emit_games_csv
from courtsim.domain import BoxLine, GameRecord

ROOT = Path(__file__).resolve().parent.parent
SEASON = "2016-2017"
TEAMS = ["ATL", "BOS", "CHI", "DEN", "LAL", "PHX"]
CONFERENCES = {"ATL": "East", "BOS": "East", "CHI": "East",
               "DEN": "West", "LAL": "West", "PHX": "West"}
# ATL and LAL traded away their upcoming first-round picks.
OWNS_PICK = {team: team not in ("ATL", "LAL") for team in TEAMS}


def build_games() -> list[GameRecord]:
    rng = np.random.default_rng(20161025)
    strength = {team: rng.normal(0, 4.0) for team in TEAMS}
    pairs = [(h, a) for h in TEAMS for a in TEAMS if h != a] * 2
    order = rng.permutation(len(pairs))
    start = dt.date(2016, 10, 25)
    games = []
    for n, idx in enumerate(order):
        home, away = pairs[idx]
        edge = strength[home] - strength[away] + 2.5
        home_pts = int(rng.integers(92, 122))
        margin = max(1, int(abs(rng.normal(edge, 9))))
        away_pts = home_pts - margin if rng.random() < 1 / (1 + np.exp(-edge / 6)) else home_pts + margin
        fga = int(rng.integers(80, 95))
        box_home = BoxLine(fga=fga, fta=int(rng.integers(15, 30)),
                           oreb=int(rng.integers(6, 14)), tov=int(rng.integers(8, 18)))
        box_away = BoxLine(fga=int(rng.integers(80, 95)), fta=int(rng.integers(15, 30)),
                           oreb=int(rng.integers(6, 14)), tov=int(rng.integers(8, 18)))
        games.append(
            GameRecord(
                game_id=f"M{n:04d}",
                season_id=SEASON,
                date=start + dt.timedelta(days=n // 3),
                home=home,
                away=away,
                home_points=home_pts,
                away_points=away_pts,
                home_box=box_home,
                away_box=box_away,
            )
        )
    return games


def main() -> None:
    out = ROOT / "data" / "fixtures" / "minileague"
    out.mkdir(parents=True, exist_ok=True)
    emit_games_csv(build_games(), out / "games.csv")
    with open(out / "teams.csv", "w", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(["team", "conference"])
        for team in TEAMS:
            writer.writerow([team, CONFERENCES[team]])
    with open(out / "picks.csv", "w", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(["season_id", "team", "owns_first_round_pick"])
        for team in TEAMS:
            writer.writerow([SEASON, team, "true" if OWNS_PICK[team] else "false"])
    print(f"wrote fixture league to {out}")


if __name__ == "__main__":
    main()
