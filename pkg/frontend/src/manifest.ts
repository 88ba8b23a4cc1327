import * as fs from "node:fs";
import * as path from "node:path";

import {
  ALLOC_HEADER,
  CONTOUR_HEADER,
  GAINS_HEADER,
  REGION_HEADER,
  SUMMARY_HEADER,
  Table,
  parseCsv,
} from "./csv.js";
import { renderContour } from "./contour.js";
import { renderGains } from "./gains.js";
import { renderRegion } from "./region.js";

export interface Manifest {
  dir: string;
  subcommand: string;
  artifacts: string[];
}

export function readManifest(manifestPath: string): Manifest {
  if (!fs.existsSync(manifestPath)) {
    throw new Error(`manifest not found: ${manifestPath}`);
  }
  let data: any;
  try {
    data = JSON.parse(fs.readFileSync(manifestPath, "utf-8"));
  } catch (e) {
    throw new Error(`${manifestPath}: not valid JSON (${(e as Error).message})`);
  }
  if (typeof data.subcommand !== "string" || !Array.isArray(data.artifacts)) {
    throw new Error(`${manifestPath}: expected {subcommand, config, artifacts}`);
  }
  return {
    dir: path.dirname(manifestPath),
    subcommand: data.subcommand,
    artifacts: data.artifacts,
  };
}

export interface Figure {
  name: string;
  svg: string;
}

/**
 * Render every figure the manifest's artifacts support: region boundaries +
 * summary become one overlay figure, each contour CSV a contour map, each
 * gains CSV a line plot.  Allocation tables have no figure and are skipped.
 */
export function renderManifest(manifest: Manifest, contourLevels?: number[]): Figure[] {
  const boundaries: Table[] = [];
  let summary: Table | undefined;
  const contoursIn: Table[] = [];
  const gainsIn: Table[] = [];

  for (const name of manifest.artifacts) {
    if (!name.endsWith(".csv")) continue;
    const filePath = path.join(manifest.dir, name);
    if (!fs.existsSync(filePath)) {
      throw new Error(`artifact listed in manifest but missing: ${filePath}`);
    }
    const table = parseCsv(fs.readFileSync(filePath, "utf-8"), filePath);
    const header = table.header.join(",");
    if (header === REGION_HEADER) boundaries.push(table);
    else if (header === SUMMARY_HEADER) summary = table;
    else if (header === CONTOUR_HEADER) contoursIn.push(table);
    else if (header === GAINS_HEADER) gainsIn.push(table);
    else if (header === ALLOC_HEADER) continue;
    else throw new Error(`unrecognized CSV header in ${filePath}: "${header}"`);
  }

  const figures: Figure[] = [];
  if (boundaries.length > 0) {
    if (summary === undefined) {
      throw new Error(`region boundaries without a summary CSV in ${manifest.dir}`);
    }
    figures.push({ name: "region.svg", svg: renderRegion(boundaries, summary) });
  }
  contoursIn.forEach((table, i) => {
    figures.push({
      name: i === 0 ? "contour.svg" : `contour_${i + 1}.svg`,
      svg: renderContour(table, contourLevels),
    });
  });
  gainsIn.forEach((table, i) => {
    figures.push({
      name: i === 0 ? "gains.svg" : `gains_${i + 1}.svg`,
      svg: renderGains(table),
    });
  });
  if (figures.length === 0) {
    throw new Error(`no renderable artifacts in ${manifest.dir} (${manifest.subcommand})`);
  }
  return figures;
}
