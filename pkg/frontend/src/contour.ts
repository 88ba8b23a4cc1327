import { ticks } from "d3-array";
import { contours } from "d3-contour";

import { CONTOUR_HEADER, Table, numericColumn, requireHeader, stringColumn } from "./csv.js";
import {
  MARGIN,
  document,
  fmtValue,
  linearScale,
  plotH,
  plotW,
  px,
  xAxis,
  yAxis,
} from "./svg.js";

// two-stop ramp (light -> dark blue); level t in [0, 1]
function rampColor(t: number): string {
  const a = [247, 251, 255];
  const b = [8, 48, 107];
  const c = a.map((av, i) => Math.round(av + (b[i] - av) * Math.min(1, Math.max(0, t))));
  return `rgb(${c[0]},${c[1]},${c[2]})`;
}

interface Grid {
  dValues: number[];
  sValues: number[];
  // diff laid out for d3-contour: x = d index, y = s index
  values: number[];
  flagged: number;
}

function readGrid(table: Table): Grid {
  requireHeader(table, CONTOUR_HEADER);
  const dRaw = stringColumn(table, "d");
  const sRaw = stringColumn(table, "s");
  const diff = numericColumn(table, "diff");
  const status = stringColumn(table, "status");

  const dUnique: string[] = [];
  for (const v of dRaw) if (dUnique[dUnique.length - 1] !== v) dUnique.push(v);
  const sUnique: string[] = [];
  for (const v of sRaw.slice(0, Math.max(1, dRaw.length / dUnique.length))) sUnique.push(v);
  const nd = dUnique.length;
  const ns = sUnique.length;
  if (nd * ns !== table.rows.length) {
    throw new Error(`${table.path}: rows are not a full d-major (d, s) grid`);
  }
  for (let r = 0; r < table.rows.length; r++) {
    if (dRaw[r] !== dUnique[Math.floor(r / ns)] || sRaw[r] !== sUnique[r % ns]) {
      throw new Error(`${table.path}: row ${r + 1} breaks d-major grid order`);
    }
  }
  if (nd < 2 || ns < 2) {
    throw new Error(`${table.path}: contour needs at least a 2x2 grid, got ${nd}x${ns}`);
  }

  const values = new Array<number>(nd * ns).fill(NaN);
  let flagged = 0;
  for (let r = 0; r < table.rows.length; r++) {
    const di = Math.floor(r / ns);
    const si = r % ns;
    if (status[r] === "Ok" && diff[r] !== null) {
      values[si * nd + di] = diff[r] as number;
    } else {
      flagged++;
    }
  }
  return {
    dValues: dUnique.map(Number),
    sValues: sUnique.map(Number),
    values,
    flagged,
  };
}

/**
 * Filled contour of the DPC-ZF sum-rate difference over the (d, s) grid,
 * with a colorbar.  The color domain is [min(diff), max(diff)] taken from
 * the data, so an all-nonnegative sweep gets a nonnegative scale; the
 * domain and levels are recorded in the SVG metadata block.
 */
export function renderContour(table: Table, levels?: number[]): string {
  const grid = readGrid(table);
  const finite = grid.values.filter(Number.isFinite);
  if (finite.length === 0) {
    throw new Error(`${table.path}: no Ok cells to contour`);
  }
  const lo = Math.min(...finite);
  const hi = Math.max(...finite);
  const thresholds =
    levels !== undefined && levels.length > 0
      ? [...levels].sort((a, b) => a - b)
      : lo === hi
        ? [lo]
        : ticks(lo, hi, 8);

  const nd = grid.dValues.length;
  const ns = grid.sValues.length;
  // grid coordinates from d3-contour: cell (i, j) covers [i, i+1) x [j, j+1),
  // so data point i sits at i + 0.5; ticks use the same mapping
  const xs = linearScale(0, nd, MARGIN.left, MARGIN.left + plotW);
  const ys = linearScale(0, ns, MARGIN.top + plotH, MARGIN.top);

  const polys = contours().size([nd, ns]).thresholds(thresholds)(grid.values);
  const parts: string[] = [];
  parts.push(
    `<clipPath id="plot-area"><rect x="${px(MARGIN.left)}" y="${px(MARGIN.top)}" width="${px(plotW)}" height="${px(plotH)}"/></clipPath>`,
  );
  parts.push(`<g clip-path="url(#plot-area)">`);
  for (const c of polys) {
    const t = hi === lo ? 1 : (c.value - lo) / (hi - lo);
    const d = c.coordinates
      .map((poly) =>
        poly
          .map(
            (ring) =>
              ring.map(([gx, gy], i) => `${i === 0 ? "M" : "L"}${px(xs(gx))} ${px(ys(gy))}`).join("") + "Z",
          )
          .join(""),
      )
      .join("");
    if (d !== "") {
      parts.push(`<path d="${d}" fill="${rampColor(t)}" fill-rule="evenodd" stroke="none"/>`);
    }
  }
  parts.push(`</g>`);

  // axis ticks at a subset of grid indices, labeled with the data values
  const tickIdx = (n: number) => {
    const step = Math.max(1, Math.ceil(n / 6));
    const idx: number[] = [];
    for (let i = 0; i < n; i += step) idx.push(i);
    if (idx[idx.length - 1] !== n - 1) idx.push(n - 1);
    return idx;
  };
  parts.push(
    xAxis(
      xs,
      tickIdx(nd).map((i) => ({ value: i + 0.5, label: fmtValue(grid.dValues[i]) })),
      "distance d [wavelengths]",
    ),
    yAxis(
      ys,
      tickIdx(ns).map((i) => ({ value: i + 0.5, label: fmtValue(grid.sValues[i]) })),
      "user spacing s [wavelengths]",
    ),
  );

  // colorbar
  const barX = MARGIN.left + plotW + 24;
  const barW = 16;
  const nStrip = 64;
  for (let i = 0; i < nStrip; i++) {
    const y0 = MARGIN.top + plotH - ((i + 1) / nStrip) * plotH;
    parts.push(
      `<rect x="${px(barX)}" y="${px(y0)}" width="${px(barW)}" height="${px(plotH / nStrip + 0.5)}" fill="${rampColor((i + 0.5) / nStrip)}" stroke="none"/>`,
    );
  }
  parts.push(
    `<rect x="${px(barX)}" y="${px(MARGIN.top)}" width="${px(barW)}" height="${px(plotH)}" fill="none" stroke="black"/>`,
    `<text x="${px(barX + barW + 4)}" y="${px(MARGIN.top + plotH)}" font-size="11">${fmtValue(lo)}</text>`,
    `<text x="${px(barX + barW + 4)}" y="${px(MARGIN.top + 10)}" font-size="11">${fmtValue(hi)}</text>`,
    `<text transform="translate(${px(barX + barW + 42)},${px(MARGIN.top + plotH / 2)}) rotate(-90)" text-anchor="middle" font-size="12">DPC - ZF sum rate [bit/s/Hz]</text>`,
  );

  return document("DPC-ZF sum-rate difference", parts.join("\n"), {
    kind: "contour",
    domain: [lo, hi],
    levels: thresholds,
    grid: [nd, ns],
    flaggedCells: grid.flagged,
  });
}
