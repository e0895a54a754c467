/**
 * Fetch manifest: which seasons to download and where to put them.
 *
 * The default list covers 2011-12 through 2021-22 with 2019-20 excluded
 * (the bubble season's conditions make it unusable for backtesting).
 */

export interface FetchManifest {
  /** API-format season ids, e.g. "2021-22". */
  seasons: string[];
  outDir: string;
  /** Milliseconds to wait between API requests. */
  delayMs: number;
}

export const EXCLUDED_SEASON = "2019-20";

export function defaultSeasons(): string[] {
  const seasons: string[] = [];
  for (let year = 2011; year <= 2021; year++) {
    const id = `${year}-${String((year + 1) % 100).padStart(2, "0")}`;
    if (id !== EXCLUDED_SEASON) seasons.push(id);
  }
  return seasons;
}

/** "2021-22" (API form) -> "2021-2022" (canonical dataset form). */
export function canonicalSeasonId(apiSeason: string): string {
  const match = /^(\d{4})-(\d{2})$/.exec(apiSeason);
  if (!match) {
    if (/^\d{4}-\d{4}$/.test(apiSeason)) return apiSeason;
    throw new Error(`unrecognized season id: ${apiSeason}`);
  }
  const start = Number(match[1]);
  const end = start - (start % 100) + Number(match[2]);
  return `${start}-${end < start ? end + 100 : end}`;
}

/** "2021-2022" or "2021-22" -> API form "2021-22". */
export function apiSeasonId(season: string): string {
  const match = /^(\d{4})-(\d{2}|\d{4})$/.exec(season);
  if (!match) throw new Error(`unrecognized season id: ${season}`);
  return `${match[1]}-${String(Number(match[2]) % 100).padStart(2, "0")}`;
}

/**
 * Franchise tricode -> conference, stable over the covered seasons.
 * NJN relocated to Brooklyn in 2012 and NOH rebranded in 2013; all aliases
 * stay mapped so every covered season resolves.
 */
export const CONFERENCES: Record<string, "East" | "West"> = {
  ATL: "East", BOS: "East", BKN: "East", NJN: "East", CHA: "East",
  CHI: "East", CLE: "East", DET: "East", IND: "East", MIA: "East",
  MIL: "East", NYK: "East", ORL: "East", PHI: "East", TOR: "East",
  WAS: "East",
  DAL: "West", DEN: "West", GSW: "West", HOU: "West", LAC: "West",
  LAL: "West", MEM: "West", MIN: "West", NOP: "West", NOH: "West",
  OKC: "West", PHX: "West", POR: "West", SAC: "West", SAS: "West",
  UTA: "West",
};
