export { parseCsv, requireHeader, numericColumn, stringColumn } from "./csv.js";
export type { Table } from "./csv.js";
export {
  REGION_HEADER,
  SUMMARY_HEADER,
  CONTOUR_HEADER,
  GAINS_HEADER,
  ALLOC_HEADER,
} from "./csv.js";
export { renderRegion, summaryAreas } from "./region.js";
export { renderContour } from "./contour.js";
export { renderGains } from "./gains.js";
export { readManifest, renderManifest } from "./manifest.js";
export type { Figure, Manifest } from "./manifest.js";
export { readMetadata } from "./svg.js";
export { main } from "./cli.js";
