/**
 * Orchestration: fetch each season's game log, validate and pair the team
 * lines, then write one combined dataset directory that the simulator's
 * `validate` subcommand accepts as-is.
 */

import fs from "node:fs";
import path from "node:path";

import { gamesCsv, picksTemplateCsv, teamsCsv, writeFileAtomic } from "./csv.js";
import { canonicalSeasonId, type FetchManifest } from "./manifest.js";
import { extractTeamLines, fetchGameLog } from "./nbaStats.js";
import { pairGames, teamsInRows, type GameRow } from "./transform.js";

const sleep = (ms: number) => new Promise((resolve) => setTimeout(resolve, ms));

export interface SeasonReport {
  season: string;
  games: number;
  ok: boolean;
  error?: string;
}

export interface RetryOptions {
  retries?: number;
  backoffMs?: number;
}

export async function fetchSeason(
  apiSeason: string,
  fetchFn: typeof fetch = fetch,
  retry: RetryOptions = {},
): Promise<GameRow[]> {
  const response = await fetchGameLog(apiSeason, { fetchFn, ...retry });
  return pairGames(apiSeason, extractTeamLines(response));
}

export async function runManifest(
  manifest: FetchManifest,
  fetchFn: typeof fetch = fetch,
  retry: RetryOptions = {},
): Promise<SeasonReport[]> {
  const reports: SeasonReport[] = [];
  const allRows: GameRow[] = [];
  const seasonTeams = new Map<string, string[]>();
  for (const [i, apiSeason] of manifest.seasons.entries()) {
    const season = canonicalSeasonId(apiSeason);
    try {
      const rows = await fetchSeason(apiSeason, fetchFn, retry);
      allRows.push(...rows);
      seasonTeams.set(season, teamsInRows(rows));
      reports.push({ season, games: rows.length, ok: true });
      console.log(`${season}: ${rows.length} games`);
    } catch (err) {
      reports.push({ season, games: 0, ok: false, error: String(err) });
      console.error(`${season}: FAILED - ${err}`);
    }
    if (i < manifest.seasons.length - 1) await sleep(manifest.delayMs);
  }
  if (allRows.length > 0) {
    writeFileAtomic(path.join(manifest.outDir, "games.csv"), gamesCsv(allRows));
    writeFileAtomic(path.join(manifest.outDir, "teams.csv"), teamsCsv(teamsInRows(allRows)));
    writePicks(manifest.outDir, seasonTeams);
  }
  return reports;
}

/**
 * picks.csv: start from the curated table shipped with this package and fill
 * any uncovered (season, team) with the all-true template default.
 */
export function writePicks(outDir: string, seasonTeams: Map<string, string[]>): void {
  const template = picksTemplateCsv(seasonTeams);
  const curatedPath = new URL("../../static/picks_curated.csv", import.meta.url).pathname;
  const curated = new Map<string, string>();
  if (fs.existsSync(curatedPath)) {
    for (const line of fs.readFileSync(curatedPath, "utf8").trim().split("\n").slice(1)) {
      const [season, team, owns] = line.split(",");
      curated.set(`${season},${team}`, owns);
    }
  }
  const lines = template.trim().split("\n");
  const merged = [lines[0]];
  for (const line of lines.slice(1)) {
    const [season, team] = line.split(",");
    const override = curated.get(`${season},${team}`);
    merged.push(override ? `${season},${team},${override}` : line);
  }
  writeFileAtomic(path.join(outDir, "picks.csv"), merged.join("\n") + "\n");
}
