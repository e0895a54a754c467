from __future__ import annotations

import filecmp

import pytest

from courtsim.analysis import AccuracyReport, Interval, SweepPoint, WinsDeltaRecord
from courtsim.data_io import (
    emit_games_csv,
    emit_reports,
    load_bundle,
    parse_games_csv,
    parse_picks_csv,
    parse_priors_csv,
    parse_teams_csv,
    scan_bundle,
    scan_games_csv,
)
from courtsim.domain import Conference
from courtsim.errors import DataValidationError

from conftest import BROKEN_DIR, FIXTURE_DIR

TWOTEAM = FIXTURE_DIR / "twoteam"


class TestGamesParsing:
    def test_fixture_parses_in_file_order(self):
        records = parse_games_csv(TWOTEAM / "games.csv")
        assert [g.game_id for g in records] == ["G001", "G002", "G003", "G004"]
        assert records[0].home == "ALP" and records[0].away == "BET"
        assert records[0].home_box.possessions == 100.0

    def test_empty_poss_uses_estimation_path(self):
        records = parse_games_csv(TWOTEAM / "games.csv")
        assert records[1].home_box.possessions is None

    def test_tie_score_error_names_game(self, tmp_path):
        path = tmp_path / "games.csv"
        lines = (TWOTEAM / "games.csv").read_text().splitlines()
        lines[1] = lines[1].replace("100,90", "99,99")
        path.write_text("\n".join(lines) + "\n")
        _, diagnostics = scan_games_csv(path)
        errors = [d for d in diagnostics if d.severity == "error"]
        assert len(errors) == 1
        assert "G001" in errors[0].message and "tie" in errors[0].message
        assert errors[0].line == 2

    def test_missing_column_is_an_error(self, tmp_path):
        path = tmp_path / "games.csv"
        content = (TWOTEAM / "games.csv").read_text().replace("home_poss,away_poss", "home_poss")
        path.write_text(content)
        _, diagnostics = scan_games_csv(path)
        assert any("away_poss" in d.message for d in diagnostics if d.severity == "error")

    def test_broken_fixture_collects_each_diagnostic(self):
        records, diagnostics = scan_games_csv(BROKEN_DIR / "games.csv")
        messages = [d.message for d in diagnostics if d.severity == "error"]
        assert len(messages) == 4
        assert any("tie" in m for m in messages)
        assert any("duplicate game_id" in m for m in messages)
        assert any("ISO-8601" in m for m in messages)
        assert any("home_pts" in m for m in messages)
        assert [g.game_id for g in records] == ["B002"]
        lines = [d.line for d in diagnostics if d.severity == "error"]
        assert lines == [2, 4, 5, 6]

    def test_parse_raises_with_diagnostics(self):
        with pytest.raises(DataValidationError) as excinfo:
            parse_games_csv(BROKEN_DIR / "games.csv")
        assert len(excinfo.value.diagnostics) == 4


class TestSmallTables:
    def test_teams(self):
        conferences = parse_teams_csv(TWOTEAM / "teams.csv")
        assert conferences == {"ALP": Conference.EAST, "BET": Conference.EAST}

    def test_unknown_conference_token(self):
        with pytest.raises(DataValidationError, match="North"):
            parse_teams_csv(BROKEN_DIR / "teams.csv")

    def test_picks(self):
        ownership = parse_picks_csv(TWOTEAM / "picks.csv")
        assert ownership == {("2022-2023", "ALP"): True, ("2022-2023", "BET"): True}

    def test_priors_range_check(self, tmp_path):
        path = tmp_path / "priors.csv"
        path.write_text("season_id,team,prior\n2022-2023,ALP,1.5\n")
        with pytest.raises(DataValidationError, match="0,1"):
            parse_priors_csv(path)

    def test_priors_parse(self, tmp_path):
        path = tmp_path / "priors.csv"
        path.write_text("season_id,team,prior\n2022-2023,ALP,0.61\n2022-2023,BET,0.39\n")
        assert parse_priors_csv(path) == {("2022-2023", "ALP"): 0.61, ("2022-2023", "BET"): 0.39}


class TestBundle:
    def test_twoteam_bundle_loads(self):
        bundle = load_bundle(TWOTEAM)
        assert list(bundle.seasons) == ["2022-2023"]
        dataset = bundle.season("2022-2023")
        assert len(dataset.games) == 4
        assert dataset.owns_pick("ALP")
        assert dataset.era.classify_rank == 6  # 2022 season -> play-in era

    def test_broken_bundle_reports_errors(self):
        bundle, diagnostics = scan_bundle(BROKEN_DIR)
        assert bundle is None
        severities = {d.severity for d in diagnostics}
        assert "error" in severities
        # Missing picks row and unknown conference both surface.
        assert any("picks" in d.message for d in diagnostics)
        assert any("North" in d.message for d in diagnostics)

    def test_missing_required_file(self, tmp_path):
        with pytest.raises(DataValidationError, match="missing"):
            load_bundle(tmp_path)

    def test_possession_estimation_noted_as_info(self):
        _, diagnostics = scan_bundle(TWOTEAM)
        infos = [d for d in diagnostics if d.severity == "info"]
        assert any("possessions estimated" in d.message for d in infos)
        assert not any(d.severity == "warning" for d in diagnostics)

    def test_priors_file_feeds_dataset(self, tmp_path):
        for name in ("games.csv", "teams.csv", "picks.csv"):
            (tmp_path / name).write_text((TWOTEAM / name).read_text())
        (tmp_path / "priors.csv").write_text(
            "season_id,team,prior\n2022-2023,ALP,0.7\n2022-2023,BET,0.3\n"
        )
        bundle = load_bundle(tmp_path)
        assert bundle.season("2022-2023").priors == {"ALP": 0.7, "BET": 0.3}


class TestEmission:
    def test_games_round_trip(self, tmp_path):
        records = parse_games_csv(TWOTEAM / "games.csv")
        out = emit_games_csv(records, tmp_path / "games.csv")
        assert parse_games_csv(out) == records
        # Byte-identical to the committed fixture as well.
        assert filecmp.cmp(out, TWOTEAM / "games.csv", shallow=False)

    def test_zero_reports_write_headers_only(self, tmp_path):
        written = emit_reports(tmp_path, accuracy=[], wins_delta=[], sweep=[])
        assert [p.name for p in written] == ["accuracy.csv", "wins_delta.csv", "sweep.csv"]
        assert (tmp_path / "accuracy.csv").read_text() == (
            "season_id,method,model,mode,interval,mean_accuracy,ci_low,ci_high,replications\n"
        )
        assert (tmp_path / "sweep.csv").read_text() == (
            "window,method,interval,mean_accuracy,ci_low,ci_high\n"
        )

    def test_fixed_point_formatting(self, tmp_path):
        report = AccuracyReport("2022-2023", "iii", "basic", "monte-carlo",
                                Interval.COMPLETE, 0.5, 0.25, 0.75, 100)
        emit_reports(tmp_path, accuracy=[report])
        line = (tmp_path / "accuracy.csv").read_text().splitlines()[1]
        assert line == "2022-2023,iii,basic,monte-carlo,complete,0.500000,0.250000,0.750000,100"

    def test_rows_sorted_stably(self, tmp_path):
        records = [
            WinsDeltaRecord("2022-2023", "BET", 1, 1, 2, 1),
            WinsDeltaRecord("2022-2023", "ALP", 3, 0, 3, 0),
            WinsDeltaRecord("2022-2023", "ALP", 3, 1, 4, 1),
        ]
        emit_reports(tmp_path, wins_delta=records)
        lines = (tmp_path / "wins_delta.csv").read_text().splitlines()
        assert lines[1:] == [
            "2022-2023,ALP,3,0,3,0",
            "2022-2023,ALP,3,1,4,1",
            "2022-2023,BET,1,1,2,1",
        ]

    def test_emission_is_byte_stable(self, tmp_path):
        points = [
            SweepPoint(2, "ii", Interval.COMPLETE, 0.6, 0.55, 0.65),
            SweepPoint(2, "ii", Interval.SECOND_HALF, 0.62, 0.57, 0.67),
        ]
        emit_reports(tmp_path / "a", sweep=points)
        emit_reports(tmp_path / "b", sweep=list(reversed(points)))
        assert filecmp.cmp(tmp_path / "a" / "sweep.csv", tmp_path / "b" / "sweep.csv", shallow=False)
