/**
 * Pair up the API's two team lines per game and produce canonical game rows.
 *
 * Everything the simulator ingests is validated here first: exactly two
 * lines per game, one home ("vs.") and one away ("@"), consistent win/loss
 * flags, no tie scores, and only known franchise codes.
 */

import { CONFERENCES, canonicalSeasonId } from "./manifest.js";
import type { TeamGameLine } from "./nbaStats.js";

export interface GameRow {
  seasonId: string;
  gameId: string;
  date: string;
  homeTeam: string;
  awayTeam: string;
  homePts: number;
  awayPts: number;
  homeFga: number;
  homeFta: number;
  homeOreb: number;
  homeTov: number;
  awayFga: number;
  awayFta: number;
  awayOreb: number;
  awayTov: number;
}

export function pairGames(apiSeason: string, lines: TeamGameLine[]): GameRow[] {
  const seasonId = canonicalSeasonId(apiSeason);
  const byGame = new Map<string, TeamGameLine[]>();
  for (const line of lines) {
    const bucket = byGame.get(line.gameId);
    if (bucket) bucket.push(line);
    else byGame.set(line.gameId, [line]);
  }
  const rows: GameRow[] = [];
  for (const [gameId, pair] of byGame) {
    if (pair.length !== 2) {
      throw new Error(`game ${gameId}: expected 2 team lines, got ${pair.length}`);
    }
    const home = pair.find((l) => l.matchup.includes(" vs. "));
    const away = pair.find((l) => l.matchup.includes(" @ "));
    if (!home || !away || home === away) {
      throw new Error(`game ${gameId}: cannot tell home from away (${pair[0].matchup} / ${pair[1].matchup})`);
    }
    if (home.points === away.points) {
      throw new Error(`game ${gameId}: tie score ${home.points}-${away.points}`);
    }
    const expectHomeWl = home.points > away.points ? "W" : "L";
    if (home.winLoss !== expectHomeWl) {
      throw new Error(`game ${gameId}: WL flag ${home.winLoss} disagrees with score ${home.points}-${away.points}`);
    }
    for (const team of [home.teamAbbreviation, away.teamAbbreviation]) {
      if (!(team in CONFERENCES)) throw new Error(`game ${gameId}: unknown franchise code ${team}`);
    }
    if (home.gameDate !== away.gameDate) {
      throw new Error(`game ${gameId}: home/away dates differ (${home.gameDate} vs ${away.gameDate})`);
    }
    rows.push({
      seasonId,
      gameId,
      date: home.gameDate,
      homeTeam: home.teamAbbreviation,
      awayTeam: away.teamAbbreviation,
      homePts: home.points,
      awayPts: away.points,
      homeFga: home.fieldGoalAttempts,
      homeFta: home.freeThrowAttempts,
      homeOreb: home.offensiveRebounds,
      homeTov: home.turnovers,
      awayFga: away.fieldGoalAttempts,
      awayFta: away.freeThrowAttempts,
      awayOreb: away.offensiveRebounds,
      awayTov: away.turnovers,
    });
  }
  // Chronological with game-id tie-break: deterministic files, idempotent re-runs.
  rows.sort((a, b) => (a.date < b.date ? -1 : a.date > b.date ? 1 : a.gameId < b.gameId ? -1 : 1));
  return rows;
}

export function teamsInRows(rows: GameRow[]): string[] {
  const teams = new Set<string>();
  for (const row of rows) {
    teams.add(row.homeTeam);
    teams.add(row.awayTeam);
  }
  return [...teams].sort();
}
