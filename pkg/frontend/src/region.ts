import { ticks } from "d3-array";

import {
  REGION_HEADER,
  SUMMARY_HEADER,
  Table,
  numericColumn,
  requireHeader,
  stringColumn,
} from "./csv.js";
import {
  MARGIN,
  document,
  linearScale,
  plotH,
  plotW,
  polyline,
  px,
  xAxis,
  yAxis,
} from "./svg.js";

const COLORS: Record<string, string> = {
  ZF: "#1f77b4",
  "DPC 1>2": "#d62728",
  "DPC 2>1": "#ff7f0e",
  "DPC union": "#2ca02c",
};

function curveLabel(scheme: string, order: string): string {
  return order === "" ? scheme : `${scheme} ${order}`;
}

interface Boundary {
  label: string;
  r1: number[];
  r2: number[];
}

function readBoundary(table: Table): Boundary {
  requireHeader(table, REGION_HEADER);
  if (table.rows.length === 0) {
    throw new Error(`no boundary rows in ${table.path}`);
  }
  const schemes = new Set(stringColumn(table, "scheme"));
  const orders = new Set(stringColumn(table, "order"));
  if (schemes.size !== 1 || orders.size !== 1) {
    throw new Error(`${table.path}: expected a single scheme/order per boundary file`);
  }
  const r1 = numericColumn(table, "r1");
  const r2 = numericColumn(table, "r2");
  if (r1.some((v) => v === null) || r2.some((v) => v === null)) {
    throw new Error(`${table.path}: boundary has empty r1/r2 cells`);
  }
  return {
    label: curveLabel([...schemes][0], [...orders][0]),
    r1: r1 as number[],
    r2: r2 as number[],
  };
}

/** Areas by curve label, e.g. "ZF" -> 5.2044, "DPC 1>2" -> 12.7585. */
export function summaryAreas(summary: Table): Record<string, number> {
  requireHeader(summary, SUMMARY_HEADER);
  const schemes = stringColumn(summary, "scheme");
  const orders = stringColumn(summary, "order");
  const areas = numericColumn(summary, "area");
  const out: Record<string, number> = {};
  schemes.forEach((scheme, i) => {
    const area = areas[i];
    if (area === null) {
      throw new Error(`${summary.path}: row ${i + 1} has no area`);
    }
    out[curveLabel(scheme, orders[i])] = area;
  });
  return out;
}

/**
 * Overlaid rate-region boundaries with an area annotation.  The headline
 * annotation quotes the first DPC boundary and ZF, matching the summary
 * areas rounded to two decimals; every drawn curve also gets its area in
 * the legend.
 */
export function renderRegion(boundaries: Table[], summary: Table): string {
  if (boundaries.length === 0) {
    throw new Error("renderRegion: no boundary tables");
  }
  const curves = boundaries.map(readBoundary);
  const areas = summaryAreas(summary);

  let r1Max = 0;
  let r2Max = 0;
  for (const c of curves) {
    r1Max = Math.max(r1Max, ...c.r1);
    r2Max = Math.max(r2Max, ...c.r2);
  }
  const xs = linearScale(0, r1Max * 1.05, MARGIN.left, MARGIN.left + plotW);
  const ys = linearScale(0, r2Max * 1.05, MARGIN.top + plotH, MARGIN.top);

  const parts: string[] = [];
  for (const c of curves) {
    const pts = c.r1.map((v, i) => [xs(v), ys(c.r2[i])] as [number, number]);
    parts.push(polyline(pts, COLORS[c.label] ?? "#555555"));
  }

  // legend, one entry per curve, area from the summary file
  const legendX = MARGIN.left + 10;
  curves.forEach((c, i) => {
    const y = MARGIN.top + 14 + 16 * i;
    const area = areas[c.label];
    const suffix = area === undefined ? "" : ` (area ${area.toFixed(2)})`;
    parts.push(
      `<line x1="${px(legendX)}" y1="${px(y - 4)}" x2="${px(legendX + 22)}" y2="${px(y - 4)}" stroke="${COLORS[c.label] ?? "#555555"}" stroke-width="1.8"/>`,
      `<text x="${px(legendX + 28)}" y="${px(y)}" font-size="11">${c.label}${suffix}</text>`,
    );
  });

  // headline annotation: first DPC curve vs ZF
  const dpc = curves.find((c) => c.label.startsWith("DPC"));
  const zf = curves.find((c) => c.label === "ZF");
  let annotation = "";
  if (dpc && zf && areas[dpc.label] !== undefined && areas["ZF"] !== undefined) {
    annotation = `DPC area ${areas[dpc.label].toFixed(2)}, ZF area ${areas["ZF"].toFixed(2)}`;
    parts.push(
      `<text x="${px(MARGIN.left + plotW - 6)}" y="${px(MARGIN.top + plotH - 10)}" text-anchor="end" font-size="12">${annotation}</text>`,
    );
  }

  parts.push(
    xAxis(xs, ticks(0, r1Max * 1.05, 6).map((v) => ({ value: v, label: String(v) })), "user 1 rate [bit/s/Hz]"),
    yAxis(ys, ticks(0, r2Max * 1.05, 6).map((v) => ({ value: v, label: String(v) })), "user 2 rate [bit/s/Hz]"),
  );

  return document("Two-user rate region", parts.join("\n"), {
    kind: "region",
    curves: curves.map((c) => c.label),
    areas,
    annotation,
  });
}
