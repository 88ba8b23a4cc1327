import * as fs from "node:fs";
import * as path from "node:path";
import { parseArgs } from "node:util";

import { readManifest, renderManifest } from "./manifest.js";

const USAGE = `usage: render_figures <manifest.json> [--out-dir figs] [--levels a,b,c]

Renders SVG figures from the CSV artifacts listed in a simulation run's
manifest: rate-region overlay, DPC-ZF contour map, gain profile.`;

export function main(argv: string[]): number {
  let positionals: string[];
  let values: { "out-dir"?: string; levels?: string; help?: boolean };
  try {
    ({ positionals, values } = parseArgs({
      args: argv,
      options: {
        "out-dir": { type: "string", default: "figs" },
        levels: { type: "string" },
        help: { type: "boolean", short: "h" },
      },
      allowPositionals: true,
    }));
  } catch (e) {
    console.error((e as Error).message);
    console.error(USAGE);
    return 1;
  }
  if (values.help) {
    console.log(USAGE);
    return 0;
  }
  if (positionals.length !== 1) {
    console.error(USAGE);
    return 1;
  }
  let levels: number[] | undefined;
  if (values.levels !== undefined) {
    levels = values.levels.split(",").map(Number);
    if (levels.some((v) => !Number.isFinite(v))) {
      console.error(`--levels must be comma-separated numbers, got "${values.levels}"`);
      return 1;
    }
  }

  try {
    const manifest = readManifest(positionals[0]);
    const figures = renderManifest(manifest, levels);
    const outDir = values["out-dir"] as string;
    fs.mkdirSync(outDir, { recursive: true });
    for (const fig of figures) {
      const outPath = path.join(outDir, fig.name);
      fs.writeFileSync(outPath, fig.svg);
      console.log(`wrote ${outPath}`);
    }
  } catch (e) {
    console.error((e as Error).message);
    return 2;
  }
  return 0;
}
