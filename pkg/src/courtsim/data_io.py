"""Canonical CSV formats: ingestion with per-line diagnostics, dataset bundle
assembly, and report emission.

The four input schemas (games, teams, picks, priors) and the three report
schemas (accuracy, wins_delta, sweep) are the package's interchange contract:
header-exact, ISO dates, 6-decimal fixed-point reals, newline-terminated.
"""

from __future__ import annotations

import csv
import datetime as dt
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from .analysis import AccuracyReport, SweepPoint, WinsDeltaRecord
from .domain import (
    BoxLine,
    Conference,
    EraRules,
    GameRecord,
    SeasonDataset,
    TeamId,
)
from .errors import DataValidationError

GAMES_COLUMNS = [
    "season_id",
    "game_id",
    "date",
    "home_team",
    "away_team",
    "home_pts",
    "away_pts",
    "home_fga",
    "home_fta",
    "home_oreb",
    "home_tov",
    "away_fga",
    "away_fta",
    "away_oreb",
    "away_tov",
    "home_poss",
    "away_poss",
]
TEAMS_COLUMNS = ["team", "conference"]
PICKS_COLUMNS = ["season_id", "team", "owns_first_round_pick"]
PRIORS_COLUMNS = ["season_id", "team", "prior"]

ACCURACY_COLUMNS = ["season_id", "method", "model", "mode", "interval", "mean_accuracy", "ci_low", "ci_high", "replications"]
WINS_DELTA_COLUMNS = ["season_id", "team", "real_wins", "rep", "sim_wins", "delta"]
SWEEP_COLUMNS = ["window", "method", "interval", "mean_accuracy", "ci_low", "ci_high"]

GAMES_FILE = "games.csv"
TEAMS_FILE = "teams.csv"
PICKS_FILE = "picks.csv"
PRIORS_FILE = "priors.csv"

_METHOD_ORDER = {m: i for i, m in enumerate(["i", "ii", "iii", "iv", "v", "vi"])}
_INTERVAL_ORDER = {"complete": 0, "second-half": 1}


@dataclass(frozen=True, slots=True)
class Diagnostic:
    severity: str  # "error" | "warning" | "info"
    path: str
    line: int | None
    message: str

    def __str__(self) -> str:
        location = f"{self.path}:{self.line}" if self.line is not None else self.path
        return f"{self.severity}: {location}: {self.message}"


def _error(path, line, message) -> Diagnostic:
    return Diagnostic("error", str(path), line, message)


def _read_rows(path: Path, expected_columns: list[str]) -> tuple[list[tuple[int, list[str]]], list[Diagnostic]]:
    """Read a header-validated CSV; returns (line_number, cells) pairs."""
    diagnostics: list[Diagnostic] = []
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        return [], [_error(path, None, f"cannot read file: {exc}")]
    rows = list(csv.reader(text.splitlines()))
    if not rows:
        return [], [_error(path, None, "empty file, expected a header row")]
    header = rows[0]
    if header != expected_columns:
        missing = [c for c in expected_columns if c not in header]
        extra = [c for c in header if c not in expected_columns]
        detail = []
        if missing:
            detail.append(f"missing columns {missing}")
        if extra:
            detail.append(f"unexpected columns {extra}")
        if not detail:
            detail.append("columns out of order")
        return [], [_error(path, 1, f"bad header: {'; '.join(detail)}; expected exactly {expected_columns}")]
    numbered = []
    for i, row in enumerate(rows[1:], start=2):
        if not row:
            continue
        if len(row) != len(expected_columns):
            diagnostics.append(_error(path, i, f"expected {len(expected_columns)} fields, got {len(row)}"))
            continue
        numbered.append((i, row))
    return numbered, diagnostics


def _parse_int(value: str, name: str) -> int:
    try:
        return int(value)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {value!r}") from None


def _parse_optional_float(value: str, name: str) -> float | None:
    if value == "":
        return None
    try:
        return float(value)
    except ValueError:
        raise ValueError(f"{name} must be a real number or empty, got {value!r}") from None


def scan_games_csv(path: str | Path) -> tuple[list[GameRecord], list[Diagnostic]]:
    """Parse the games file, collecting every problem instead of stopping at
    the first; returned records exclude the bad rows."""
    path = Path(path)
    numbered, diagnostics = _read_rows(path, GAMES_COLUMNS)
    records: list[GameRecord] = []
    seen_ids: dict[str, int] = {}
    for line, row in numbered:
        values = dict(zip(GAMES_COLUMNS, row))
        game_id = values["game_id"]
        try:
            if values["home_pts"] == values["away_pts"]:
                raise ValueError(
                    f"game {game_id!r}: tie score {values['home_pts']}-{values['away_pts']} (NBA games cannot tie)"
                )
            try:
                date = dt.date.fromisoformat(values["date"])
            except ValueError:
                raise ValueError(f"date must be ISO-8601 YYYY-MM-DD, got {values['date']!r}") from None
            record = GameRecord(
                game_id=game_id,
                season_id=values["season_id"],
                date=date,
                home=values["home_team"],
                away=values["away_team"],
                home_points=_parse_int(values["home_pts"], "home_pts"),
                away_points=_parse_int(values["away_pts"], "away_pts"),
                home_box=BoxLine(
                    fga=_parse_int(values["home_fga"], "home_fga"),
                    fta=_parse_int(values["home_fta"], "home_fta"),
                    oreb=_parse_int(values["home_oreb"], "home_oreb"),
                    tov=_parse_int(values["home_tov"], "home_tov"),
                    possessions=_parse_optional_float(values["home_poss"], "home_poss"),
                ),
                away_box=BoxLine(
                    fga=_parse_int(values["away_fga"], "away_fga"),
                    fta=_parse_int(values["away_fta"], "away_fta"),
                    oreb=_parse_int(values["away_oreb"], "away_oreb"),
                    tov=_parse_int(values["away_tov"], "away_tov"),
                    possessions=_parse_optional_float(values["away_poss"], "away_poss"),
                ),
            )
        except (ValueError, DataValidationError) as exc:
            diagnostics.append(_error(path, line, str(exc)))
            continue
        if game_id in seen_ids:
            diagnostics.append(_error(path, line, f"duplicate game_id {game_id!r} (first seen on line {seen_ids[game_id]})"))
            continue
        seen_ids[game_id] = line
        records.append(record)
    return records, diagnostics


def _raise_on_errors(diagnostics: list[Diagnostic], what: str) -> None:
    errors = [d for d in diagnostics if d.severity == "error"]
    if errors:
        summary = "; ".join(str(d) for d in errors[:5])
        if len(errors) > 5:
            summary += f"; ... {len(errors) - 5} more"
        raise DataValidationError(f"{what}: {summary}", diagnostics=errors)


def parse_games_csv(path: str | Path) -> list[GameRecord]:
    records, diagnostics = scan_games_csv(path)
    _raise_on_errors(diagnostics, f"invalid games file {path}")
    return records


def scan_teams_csv(path: str | Path) -> tuple[dict[TeamId, Conference], list[Diagnostic]]:
    path = Path(path)
    numbered, diagnostics = _read_rows(path, TEAMS_COLUMNS)
    conferences: dict[TeamId, Conference] = {}
    for line, (team, conference) in numbered:
        if not team:
            diagnostics.append(_error(path, line, "empty team id"))
            continue
        if team in conferences:
            diagnostics.append(_error(path, line, f"duplicate team {team!r}"))
            continue
        try:
            conferences[team] = Conference(conference)
        except ValueError:
            diagnostics.append(_error(path, line, f"unknown conference {conference!r}, expected East or West"))
    return conferences, diagnostics


def parse_teams_csv(path: str | Path) -> dict[TeamId, Conference]:
    conferences, diagnostics = scan_teams_csv(path)
    _raise_on_errors(diagnostics, f"invalid teams file {path}")
    return conferences


def scan_picks_csv(path: str | Path) -> tuple[dict[tuple[str, TeamId], bool], list[Diagnostic]]:
    path = Path(path)
    numbered, diagnostics = _read_rows(path, PICKS_COLUMNS)
    ownership: dict[tuple[str, TeamId], bool] = {}
    for line, (season_id, team, owns) in numbered:
        token = owns.strip().lower()
        if token not in ("true", "false"):
            diagnostics.append(_error(path, line, f"owns_first_round_pick must be true or false, got {owns!r}"))
            continue
        key = (season_id, team)
        if key in ownership:
            diagnostics.append(_error(path, line, f"duplicate picks row for {team!r} in {season_id}"))
            continue
        ownership[key] = token == "true"
    return ownership, diagnostics


def parse_picks_csv(path: str | Path) -> dict[tuple[str, TeamId], bool]:
    ownership, diagnostics = scan_picks_csv(path)
    _raise_on_errors(diagnostics, f"invalid picks file {path}")
    return ownership


def scan_priors_csv(path: str | Path) -> tuple[dict[tuple[str, TeamId], float], list[Diagnostic]]:
    path = Path(path)
    numbered, diagnostics = _read_rows(path, PRIORS_COLUMNS)
    priors: dict[tuple[str, TeamId], float] = {}
    for line, (season_id, team, raw) in numbered:
        try:
            prior = float(raw)
        except ValueError:
            diagnostics.append(_error(path, line, f"prior must be a real number, got {raw!r}"))
            continue
        if not (0.0 < prior < 1.0):
            diagnostics.append(_error(path, line, f"prior must lie strictly inside (0,1), got {prior}"))
            continue
        key = (season_id, team)
        if key in priors:
            diagnostics.append(_error(path, line, f"duplicate priors row for {team!r} in {season_id}"))
            continue
        priors[key] = prior
    return priors, diagnostics


def parse_priors_csv(path: str | Path) -> dict[tuple[str, TeamId], float]:
    priors, diagnostics = scan_priors_csv(path)
    _raise_on_errors(diagnostics, f"invalid priors file {path}")
    return priors


@dataclass(frozen=True)
class DatasetBundle:
    games_file: Path
    teams_file: Path
    picks_file: Path
    priors_file: Path | None
    seasons: dict[str, SeasonDataset]

    def season(self, season_id: str) -> SeasonDataset:
        try:
            return self.seasons[season_id]
        except KeyError:
            raise DataValidationError(
                f"season {season_id!r} not in dataset (have {sorted(self.seasons)})"
            ) from None


def scan_bundle(
    data_dir: str | Path,
    era_overrides: Mapping[str, EraRules] | None = None,
) -> tuple[DatasetBundle | None, list[Diagnostic]]:
    """Ingest a data directory, collecting diagnostics across all files.

    Returns the bundle when every season could be assembled (there may still
    be warnings/info), or None when errors prevented assembly.
    """
    data_dir = Path(data_dir)
    games_file = data_dir / GAMES_FILE
    teams_file = data_dir / TEAMS_FILE
    picks_file = data_dir / PICKS_FILE
    priors_file = data_dir / PRIORS_FILE

    diagnostics: list[Diagnostic] = []
    for required in (games_file, teams_file, picks_file):
        if not required.exists():
            diagnostics.append(_error(required, None, "required file missing"))
    if diagnostics:
        return None, diagnostics

    records, d = scan_games_csv(games_file)
    diagnostics.extend(d)
    conferences, d = scan_teams_csv(teams_file)
    diagnostics.extend(d)
    ownership, d = scan_picks_csv(picks_file)
    diagnostics.extend(d)
    priors: dict[tuple[str, TeamId], float] = {}
    if priors_file.exists():
        priors, d = scan_priors_csv(priors_file)
        diagnostics.extend(d)
    else:
        priors_file = None

    by_season: dict[str, list[GameRecord]] = {}
    for record in records:
        by_season.setdefault(record.season_id, []).append(record)

    seasons: dict[str, SeasonDataset] = {}
    for season_id in sorted(by_season):
        season_games = by_season[season_id]
        season_teams = sorted({g.home for g in season_games} | {g.away for g in season_games})
        ok = True
        for team in season_teams:
            if team not in conferences:
                diagnostics.append(_error(games_file, None, f"team {team!r} in season {season_id} has no row in {TEAMS_FILE}"))
                ok = False
            if (season_id, team) not in ownership:
                diagnostics.append(_error(picks_file, None, f"team {team!r} has no picks row for season {season_id}"))
                ok = False
        if not ok:
            continue
        season_priors = {t: p for (s, t), p in priors.items() if s == season_id} or None
        era = None
        if era_overrides and season_id in era_overrides:
            era = era_overrides[season_id]
        try:
            dataset = SeasonDataset.build(
                season_id=season_id,
                games=season_games,
                conferences={t: conferences[t] for t in season_teams},
                era=era,
                pick_ownership={t: ownership[(season_id, t)] for t in season_teams},
                priors=season_priors,
            )
        except DataValidationError as exc:
            diagnostics.append(_error(games_file, None, f"season {season_id}: {exc}"))
            continue
        seasons[season_id] = dataset
        estimated = sum(
            (g.home_box.possessions is None) + (g.away_box.possessions is None) for g in dataset.games
        )
        if estimated:
            diagnostics.append(
                Diagnostic("info", str(games_file), None,
                           f"season {season_id}: possessions estimated from box stats for {estimated} team-games")
            )
        typical = dataset.schedule_length
        for team in dataset.teams:
            count = dataset.scheduled_games(team)
            if count != typical:
                diagnostics.append(
                    Diagnostic("info", str(games_file), None,
                               f"season {season_id}: {team} has {count} scheduled games (league-typical {typical})")
                )

    if not seasons and not any(x.severity == "error" for x in diagnostics):
        diagnostics.append(_error(games_file, None, "no seasons found"))
    if any(x.severity == "error" for x in diagnostics):
        return None, diagnostics
    return DatasetBundle(games_file, teams_file, picks_file, priors_file, seasons), diagnostics


def load_bundle(
    data_dir: str | Path,
    era_overrides: Mapping[str, EraRules] | None = None,
) -> DatasetBundle:
    bundle, diagnostics = scan_bundle(data_dir, era_overrides)
    _raise_on_errors(diagnostics, f"invalid data directory {data_dir}")
    assert bundle is not None
    return bundle


def _fmt(x: float) -> str:
    return f"{x:.6f}"


def _write_csv(path: Path, header: list[str], rows: Iterable[Sequence]) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)


def emit_games_csv(records: Sequence[GameRecord], path: str | Path) -> Path:
    """Serialize game records back to the canonical schema (round-trips)."""
    path = Path(path)

    def poss(value: float | None) -> str:
        return "" if value is None else format(value, "g")

    rows = [
        [
            g.season_id, g.game_id, g.date.isoformat(), g.home, g.away,
            g.home_points, g.away_points,
            g.home_box.fga, g.home_box.fta, g.home_box.oreb, g.home_box.tov,
            g.away_box.fga, g.away_box.fta, g.away_box.oreb, g.away_box.tov,
            poss(g.home_box.possessions), poss(g.away_box.possessions),
        ]
        for g in records
    ]
    _write_csv(path, GAMES_COLUMNS, rows)
    return path


def emit_reports(
    out_dir: str | Path,
    accuracy: Sequence[AccuracyReport] | None = None,
    wins_delta: Sequence[WinsDeltaRecord] | None = None,
    sweep: Sequence[SweepPoint] | None = None,
) -> list[Path]:
    """Write the requested report CSVs with stable ordering and fixed-point
    reals, so identical simulations produce byte-identical files."""
    out_dir = Path(out_dir)
    written: list[Path] = []

    if accuracy is not None:
        ordered = sorted(
            accuracy,
            key=lambda r: (r.season_id, _METHOD_ORDER.get(r.method_id, 99), r.method_id,
                           r.model, r.mode, _INTERVAL_ORDER[r.interval.value]),
        )
        path = out_dir / "accuracy.csv"
        _write_csv(path, ACCURACY_COLUMNS, (
            [r.season_id, r.method_id, r.model, r.mode, r.interval.value,
             _fmt(r.mean_accuracy), _fmt(r.ci_low), _fmt(r.ci_high), r.replications]
            for r in ordered
        ))
        written.append(path)

    if wins_delta is not None:
        ordered = sorted(wins_delta, key=lambda r: (r.season_id, r.team, r.rep_index))
        path = out_dir / "wins_delta.csv"
        _write_csv(path, WINS_DELTA_COLUMNS, (
            [r.season_id, r.team, r.real_wins, r.rep_index, r.sim_wins, r.delta]
            for r in ordered
        ))
        written.append(path)

    if sweep is not None:
        ordered = sorted(
            sweep,
            key=lambda p: (p.window, _METHOD_ORDER.get(p.method_id, 99), p.method_id,
                           _INTERVAL_ORDER[p.interval.value]),
        )
        path = out_dir / "sweep.csv"
        _write_csv(path, SWEEP_COLUMNS, (
            [p.window, p.method_id, p.interval.value,
             _fmt(p.mean_accuracy), _fmt(p.ci_low), _fmt(p.ci_high)]
            for p in ordered
        ))
        written.append(path)

    return written
