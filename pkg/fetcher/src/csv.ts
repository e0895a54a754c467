/**
 * Canonical CSV serialization. Columns, ordering, and newline discipline are
 * the interchange contract with the simulator; files are written to a temp
 * path and renamed so a failed run never leaves a truncated CSV behind.
 */

import fs from "node:fs";
import path from "node:path";

import { CONFERENCES } from "./manifest.js";
import type { GameRow } from "./transform.js";

export const GAMES_HEADER =
  "season_id,game_id,date,home_team,away_team,home_pts,away_pts," +
  "home_fga,home_fta,home_oreb,home_tov,away_fga,away_fta,away_oreb,away_tov," +
  "home_poss,away_poss";

export function gamesCsv(rows: GameRow[]): string {
  const lines = [GAMES_HEADER];
  for (const r of rows) {
    // Possession columns stay empty: the simulator estimates from box stats.
    lines.push(
      [
        r.seasonId, r.gameId, r.date, r.homeTeam, r.awayTeam,
        r.homePts, r.awayPts,
        r.homeFga, r.homeFta, r.homeOreb, r.homeTov,
        r.awayFga, r.awayFta, r.awayOreb, r.awayTov,
        "", "",
      ].join(","),
    );
  }
  return lines.join("\n") + "\n";
}

export function teamsCsv(teams: string[]): string {
  const lines = ["team,conference"];
  for (const team of [...teams].sort()) {
    const conference = CONFERENCES[team];
    if (!conference) throw new Error(`unknown franchise code ${team}`);
    lines.push(`${team},${conference}`);
  }
  return lines.join("\n") + "\n";
}

/** All-true ownership skeleton, one row per (season, team), for curation. */
export function picksTemplateCsv(seasonTeams: Map<string, string[]>): string {
  const lines = ["season_id,team,owns_first_round_pick"];
  for (const season of [...seasonTeams.keys()].sort()) {
    for (const team of [...(seasonTeams.get(season) ?? [])].sort()) {
      lines.push(`${season},${team},true`);
    }
  }
  return lines.join("\n") + "\n";
}

export function writeFileAtomic(filePath: string, content: string): void {
  fs.mkdirSync(path.dirname(filePath), { recursive: true });
  const tempPath = `${filePath}.tmp-${process.pid}`;
  fs.writeFileSync(tempPath, content, "utf8");
  fs.renameSync(tempPath, filePath);
}
