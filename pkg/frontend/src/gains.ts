import { ticks } from "d3-array";

import { GAINS_HEADER, Table, numericColumn, requireHeader } from "./csv.js";
import {
  MARGIN,
  document,
  decadeTicks,
  fmtValue,
  linearScale,
  logScale,
  plotH,
  plotW,
  polyline,
  px,
  xAxis,
  yAxis,
} from "./svg.js";

const SERIES: Array<{ column: string; label: string; color: string }> = [
  { column: "alpha_1", label: "alpha_1", color: "#1f77b4" },
  { column: "alpha_2", label: "alpha_2", color: "#17becf" },
  { column: "r11_sq", label: "r11^2", color: "#d62728" },
  { column: "r22_sq", label: "r22^2", color: "#ff7f0e" },
];

/**
 * ZF power-inflation factors and DPC squared diagonal gains versus user
 * spacing, log-scale y.  Empty cells (rank-deficient spacings) and exact
 * zeros are skipped per series; skip counts go to the metadata block.
 */
export function renderGains(table: Table): string {
  requireHeader(table, GAINS_HEADER);
  if (table.rows.length < 2) {
    throw new Error(`${table.path}: need at least 2 spacing samples`);
  }
  const s = numericColumn(table, "s") as number[];
  if (s.some((v) => v === null)) {
    throw new Error(`${table.path}: empty s cells`);
  }

  const series = SERIES.map((spec) => {
    const raw = numericColumn(table, spec.column);
    const pts: Array<[number, number]> = [];
    let skipped = 0;
    raw.forEach((v, i) => {
      if (v !== null && v > 0) pts.push([s[i], v]);
      else skipped++;
    });
    return { ...spec, pts, skipped };
  });

  const positives = series.flatMap((sr) => sr.pts.map(([, v]) => v));
  if (positives.length === 0) {
    throw new Error(`${table.path}: no positive values to plot`);
  }
  const yLo = Math.min(...positives);
  const yHi = Math.max(...positives);
  const xs = linearScale(s[0], s[s.length - 1], MARGIN.left, MARGIN.left + plotW);
  const ys = logScale(yLo, yHi, MARGIN.top + plotH, MARGIN.top);

  const parts: string[] = [];
  for (const sr of series) {
    if (sr.pts.length >= 2) {
      parts.push(polyline(sr.pts.map(([x, y]) => [xs(x), ys(y)] as [number, number]), sr.color));
    }
  }

  const legendX = MARGIN.left + plotW - 110;
  series.forEach((sr, i) => {
    const y = MARGIN.top + 14 + 16 * i;
    parts.push(
      `<line x1="${px(legendX)}" y1="${px(y - 4)}" x2="${px(legendX + 22)}" y2="${px(y - 4)}" stroke="${sr.color}" stroke-width="1.8"/>`,
      `<text x="${px(legendX + 28)}" y="${px(y)}" font-size="11">${sr.label}</text>`,
    );
  });

  parts.push(
    xAxis(
      xs,
      ticks(s[0], s[s.length - 1], 6).map((v) => ({ value: v, label: fmtValue(v) })),
      "user spacing s [wavelengths]",
    ),
    yAxis(
      ys,
      decadeTicks(yLo, yHi).map((v) => ({ value: v, label: fmtValue(v) })),
      "gain factor",
    ),
  );

  return document("ZF and DPC effective gains vs spacing", parts.join("\n"), {
    kind: "gains",
    series: Object.fromEntries(series.map((sr) => [sr.label, { points: sr.pts.length, skipped: sr.skipped }])),
    yDomain: [yLo, yHi],
  });
}
