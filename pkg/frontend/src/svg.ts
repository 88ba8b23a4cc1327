/** Shared SVG plumbing: coordinate formatting, scales, axes, frames.
 *
 * Everything is plain string building with fixed-precision coordinates so
 * that a given input always renders to byte-identical SVG.
 */

export const WIDTH = 720;
export const HEIGHT = 480;
export const MARGIN = { left: 64, right: 96, top: 40, bottom: 52 };

export const plotW = WIDTH - MARGIN.left - MARGIN.right;
export const plotH = HEIGHT - MARGIN.top - MARGIN.bottom;

/** Pixel coordinate: two decimals is below visual resolution. */
export function px(v: number): string {
  return v.toFixed(2);
}

/** Tick/annotation value: strip float noise without losing structure. */
export function fmtValue(v: number): string {
  if (v === 0) return "0";
  const a = Math.abs(v);
  if (a >= 1e4 || a < 1e-3) return v.toExponential(2);
  return String(parseFloat(v.toPrecision(4)));
}

export type Scale = (v: number) => number;

export function linearScale(d0: number, d1: number, r0: number, r1: number): Scale {
  const k = d1 === d0 ? 0 : (r1 - r0) / (d1 - d0);
  return (v) => r0 + (v - d0) * k;
}

export function logScale(d0: number, d1: number, r0: number, r1: number): Scale {
  const l0 = Math.log10(d0);
  const k = (r1 - r0) / (Math.log10(d1) - l0);
  return (v) => r0 + (Math.log10(v) - l0) * k;
}

/** Powers of ten covering [lo, hi] (for log axes). */
export function decadeTicks(lo: number, hi: number): number[] {
  const out: number[] = [];
  for (let e = Math.ceil(Math.log10(lo)); e <= Math.floor(Math.log10(hi)); e++) {
    out.push(Math.pow(10, e));
  }
  if (out.length === 0) out.push(lo, hi);
  return out;
}

export interface Tick {
  value: number;
  label: string;
}

export function xAxis(scale: Scale, ticks: Tick[], label: string): string {
  const y = MARGIN.top + plotH;
  const parts = [
    `<line x1="${px(MARGIN.left)}" y1="${px(y)}" x2="${px(MARGIN.left + plotW)}" y2="${px(y)}" stroke="black"/>`,
  ];
  for (const t of ticks) {
    const x = scale(t.value);
    parts.push(
      `<line x1="${px(x)}" y1="${px(y)}" x2="${px(x)}" y2="${px(y + 5)}" stroke="black"/>`,
      `<text x="${px(x)}" y="${px(y + 18)}" text-anchor="middle" font-size="11">${t.label}</text>`,
    );
  }
  parts.push(
    `<text x="${px(MARGIN.left + plotW / 2)}" y="${px(y + 38)}" text-anchor="middle" font-size="13">${label}</text>`,
  );
  return parts.join("\n");
}

export function yAxis(scale: Scale, ticks: Tick[], label: string): string {
  const x = MARGIN.left;
  const parts = [
    `<line x1="${px(x)}" y1="${px(MARGIN.top)}" x2="${px(x)}" y2="${px(MARGIN.top + plotH)}" stroke="black"/>`,
  ];
  for (const t of ticks) {
    const y = scale(t.value);
    parts.push(
      `<line x1="${px(x - 5)}" y1="${px(y)}" x2="${px(x)}" y2="${px(y)}" stroke="black"/>`,
      `<text x="${px(x - 8)}" y="${px(y + 4)}" text-anchor="end" font-size="11">${t.label}</text>`,
    );
  }
  parts.push(
    `<text transform="translate(${px(x - 44)},${px(MARGIN.top + plotH / 2)}) rotate(-90)" text-anchor="middle" font-size="13">${label}</text>`,
  );
  return parts.join("\n");
}

export function polyline(points: Array<[number, number]>, stroke: string, width = 1.8): string {
  const d = points
    .map(([x, y], i) => `${i === 0 ? "M" : "L"}${px(x)} ${px(y)}`)
    .join("");
  return `<path d="${d}" fill="none" stroke="${stroke}" stroke-width="${width}"/>`;
}

export function document(title: string, body: string, metadata?: object): string {
  const meta =
    metadata === undefined
      ? ""
      : `<metadata id="figure-meta">${JSON.stringify(metadata)}</metadata>\n`;
  return (
    `<svg xmlns="http://www.w3.org/2000/svg" width="${WIDTH}" height="${HEIGHT}" viewBox="0 0 ${WIDTH} ${HEIGHT}" font-family="sans-serif">\n` +
    meta +
    `<rect width="${WIDTH}" height="${HEIGHT}" fill="white"/>\n` +
    `<text x="${px(WIDTH / 2)}" y="24" text-anchor="middle" font-size="15">${title}</text>\n` +
    body +
    `\n</svg>\n`
  );
}

/** The machine-readable block written by document(); inverse for tests/tools. */
export function readMetadata(svg: string): any {
  const m = svg.match(/<metadata id="figure-meta">(.*?)<\/metadata>/s);
  if (!m) throw new Error("no figure-meta metadata block in SVG");
  return JSON.parse(m[1]);
}
