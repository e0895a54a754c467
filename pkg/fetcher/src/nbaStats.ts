/**
 * Minimal client for the public NBA stats API's league game log.
 *
 * One request returns every regular-season team line for a season. The API
 * is fronted by aggressive bot filtering, so the standard browser-ish
 * headers are required and requests are retried with exponential backoff.
 */

export interface LeagueGameLogResponse {
  resultSets: Array<{
    name: string;
    headers: string[];
    rowSet: Array<Array<string | number | null>>;
  }>;
}

export interface TeamGameLine {
  teamAbbreviation: string;
  gameId: string;
  gameDate: string; // YYYY-MM-DD
  matchup: string; // "BOS vs. NYK" (home) or "BOS @ NYK" (away)
  winLoss: string;
  points: number;
  fieldGoalAttempts: number;
  freeThrowAttempts: number;
  offensiveRebounds: number;
  turnovers: number;
}

const BASE_URL = "https://stats.nba.com/stats/leaguegamelog";

const REQUEST_HEADERS: Record<string, string> = {
  "User-Agent":
    "Mozilla/5.0 (Macintosh; Intel Mac OS X 10_15_7) AppleWebKit/537.36 (KHTML, like Gecko) Chrome/124.0 Safari/537.36",
  Accept: "application/json, text/plain, */*",
  "Accept-Language": "en-US,en;q=0.9",
  Referer: "https://www.nba.com/",
  Origin: "https://www.nba.com",
  "x-nba-stats-origin": "stats",
  "x-nba-stats-token": "true",
};

export function gameLogUrl(apiSeason: string): string {
  const url = new URL(BASE_URL);
  url.searchParams.set("Counter", "0");
  url.searchParams.set("DateFrom", "");
  url.searchParams.set("DateTo", "");
  url.searchParams.set("Direction", "ASC");
  url.searchParams.set("LeagueID", "00");
  url.searchParams.set("PlayerOrTeam", "T");
  url.searchParams.set("Season", apiSeason);
  url.searchParams.set("SeasonType", "Regular Season");
  url.searchParams.set("Sorter", "DATE");
  return url.toString();
}

export async function fetchGameLog(
  apiSeason: string,
  options: { retries?: number; backoffMs?: number; fetchFn?: typeof fetch } = {},
): Promise<LeagueGameLogResponse> {
  const { retries = 4, backoffMs = 2000, fetchFn = fetch } = options;
  let lastError: unknown;
  for (let attempt = 0; attempt <= retries; attempt++) {
    try {
      const res = await fetchFn(gameLogUrl(apiSeason), { headers: REQUEST_HEADERS });
      if (!res.ok) throw new Error(`leaguegamelog ${apiSeason}: HTTP ${res.status}`);
      return (await res.json()) as LeagueGameLogResponse;
    } catch (err) {
      lastError = err;
      if (attempt < retries) {
        await new Promise((resolve) => setTimeout(resolve, backoffMs * 2 ** attempt));
      }
    }
  }
  throw new Error(`giving up on season ${apiSeason} after ${retries + 1} attempts: ${lastError}`);
}

const COLUMNS = ["TEAM_ABBREVIATION", "GAME_ID", "GAME_DATE", "MATCHUP", "WL", "PTS", "FGA", "FTA", "OREB", "TOV"] as const;

/** Pull the needed columns out of the API's header/rowSet table shape. */
export function extractTeamLines(response: LeagueGameLogResponse): TeamGameLine[] {
  const table = response.resultSets.find((r) => r.name === "LeagueGameLog");
  if (!table) throw new Error("response has no LeagueGameLog result set");
  const at: Record<(typeof COLUMNS)[number], number> = {} as never;
  for (const column of COLUMNS) {
    const index = table.headers.indexOf(column);
    if (index < 0) throw new Error(`LeagueGameLog is missing column ${column}`);
    at[column] = index;
  }
  return table.rowSet.map((row) => ({
    teamAbbreviation: String(row[at.TEAM_ABBREVIATION]),
    gameId: String(row[at.GAME_ID]),
    gameDate: String(row[at.GAME_DATE]),
    matchup: String(row[at.MATCHUP]),
    winLoss: String(row[at.WL]),
    points: Number(row[at.PTS]),
    fieldGoalAttempts: Number(row[at.FGA]),
    freeThrowAttempts: Number(row[at.FTA]),
    offensiveRebounds: Number(row[at.OREB]),
    turnovers: Number(row[at.TOV]),
  }));
}
