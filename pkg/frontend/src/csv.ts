import Papa from "papaparse";

export interface Table {
  path: string;
  header: string[];
  rows: string[][];
}

export const REGION_HEADER = "scheme,order,t,q1,q2,r1,r2";
export const SUMMARY_HEADER = "scheme,order,r1_max,r2_max,area,improvement_vs_zf_pct";
export const CONTOUR_HEADER = "d,s,zf_sum_rate,dpc_sum_rate,diff,status";
export const GAINS_HEADER = "s,alpha_1,alpha_2,r11_sq,r22_sq,order";
export const ALLOC_HEADER = "scheme,order,user,q,rate,sum_rate";

export function parseCsv(text: string, path: string): Table {
  if (text.trim() === "") {
    throw new Error(`empty CSV: ${path}`);
  }
  const parsed = Papa.parse<string[]>(text.trim(), { skipEmptyLines: true });
  if (parsed.errors.length > 0) {
    const e = parsed.errors[0];
    throw new Error(`${path}: ${e.message} (row ${e.row})`);
  }
  const [header, ...rows] = parsed.data;
  for (const row of rows) {
    if (row.length !== header.length) {
      throw new Error(
        `${path}: row has ${row.length} fields, header has ${header.length}`,
      );
    }
  }
  return { path, header, rows };
}

export function requireHeader(table: Table, expected: string): void {
  const got = table.header.join(",");
  if (got !== expected) {
    throw new Error(
      `header mismatch in ${table.path}: expected "${expected}", got "${got}"`,
    );
  }
}

/** Column values by header name; "" stays null, anything non-numeric throws. */
export function numericColumn(table: Table, name: string): (number | null)[] {
  const idx = table.header.indexOf(name);
  if (idx < 0) {
    throw new Error(`${table.path}: no column "${name}"`);
  }
  return table.rows.map((row, i) => {
    const cell = row[idx];
    if (cell === "") return null;
    const v = Number(cell);
    if (!Number.isFinite(v)) {
      throw new Error(`${table.path}: row ${i + 1}: "${cell}" is not a number`);
    }
    return v;
  });
}

export function stringColumn(table: Table, name: string): string[] {
  const idx = table.header.indexOf(name);
  if (idx < 0) {
    throw new Error(`${table.path}: no column "${name}"`);
  }
  return table.rows.map((row) => row[idx]);
}
