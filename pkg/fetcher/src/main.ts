/**
 * CLI: download seasons and write the dataset directory.
 *
 *   node dist/src/main.js [--out ../data/nba] [--seasons 2012-13,2020-21]
 *                         [--delay 2000] [--template-only]
 *
 * Seasons accept API ("2012-13") or canonical ("2012-2013") form. The
 * default manifest is 2011-12..2021-22 without 2019-20.
 */

import { apiSeasonId, defaultSeasons, type FetchManifest } from "./manifest.js";
import { runManifest } from "./fetchSeason.js";
import { canonicalSeasonId } from "./manifest.js";
import { picksTemplateCsv, writeFileAtomic } from "./csv.js";
import path from "node:path";

function parseArgs(argv: string[]): { manifest: FetchManifest; templateOnly: boolean } {
  let out = path.resolve(process.cwd(), "../data/nba");
  let seasons = defaultSeasons();
  let delayMs = 2000;
  let templateOnly = false;
  for (let i = 0; i < argv.length; i++) {
    switch (argv[i]) {
      case "--out":
        out = path.resolve(argv[++i]);
        break;
      case "--seasons":
        seasons = argv[++i].split(",").map((s) => apiSeasonId(s.trim()));
        break;
      case "--delay":
        delayMs = Number(argv[++i]);
        break;
      case "--template-only":
        templateOnly = true;
        break;
      default:
        throw new Error(`unknown flag ${argv[i]}`);
    }
  }
  return { manifest: { seasons, outDir: out, delayMs }, templateOnly };
}

async function main(): Promise<number> {
  const { manifest, templateOnly } = parseArgs(process.argv.slice(2));
  if (templateOnly) {
    // Emit a 30-team all-true skeleton per season for manual curation.
    const allTeams = (await import("./manifest.js")).CONFERENCES;
    const seasonTeams = new Map<string, string[]>();
    for (const season of manifest.seasons) {
      seasonTeams.set(canonicalSeasonId(season), Object.keys(allTeams).filter((t) => t !== "NJN" && t !== "NOH"));
    }
    const target = path.join(manifest.outDir, "picks_template.csv");
    writeFileAtomic(target, picksTemplateCsv(seasonTeams));
    console.log(`wrote ${target}`);
    return 0;
  }
  console.log(`fetching ${manifest.seasons.length} season(s) -> ${manifest.outDir}`);
  const reports = await runManifest(manifest);
  const failed = reports.filter((r) => !r.ok);
  if (failed.length > 0) {
    console.error(`${failed.length} season(s) failed: ${failed.map((r) => r.season).join(", ")}`);
    return 1;
  }
  return 0;
}

main().then(
  (code) => process.exit(code),
  (err) => {
    console.error(err);
    process.exit(1);
  },
);
