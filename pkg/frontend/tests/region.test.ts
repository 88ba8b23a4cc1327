import { describe, expect, it } from "vitest";

import { parseCsv } from "../src/csv.js";
import { renderRegion, summaryAreas } from "../src/region.js";
import { readMetadata } from "../src/svg.js";

const REGION_HEADER = "scheme,order,t,q1,q2,r1,r2";
const SUMMARY_HEADER = "scheme,order,r1_max,r2_max,area,improvement_vs_zf_pct";

function boundary(scheme: string, order: string, pts: Array<[number, number]>): string {
  const rows = pts.map(([r1, r2], i) => `${scheme},${order},${i},0,0,${r1},${r2}`);
  return [REGION_HEADER, ...rows].join("\n");
}

const ZF = parseCsv(boundary("ZF", "", [[0, 2], [1, 1.5], [2, 0]]), "zf.csv");
const DPC = parseCsv(boundary("DPC", "1>2", [[0, 2], [2, 1.8], [3, 0]]), "dpc.csv");
const SUMMARY = parseCsv(
  [SUMMARY_HEADER, "ZF,,2,2,3.25,", "DPC,1>2,3,2,5.3,63.08"].join("\n"),
  "summary.csv",
);

describe("summaryAreas", () => {
  it("keys areas by scheme and order", () => {
    expect(summaryAreas(SUMMARY)).toEqual({ ZF: 3.25, "DPC 1>2": 5.3 });
  });

  it("rejects a wrong header", () => {
    expect(() => summaryAreas(ZF)).toThrow(/header mismatch/);
  });
});

describe("renderRegion", () => {
  it("draws one path per boundary and annotates DPC/ZF areas", () => {
    const svg = renderRegion([ZF, DPC], SUMMARY);
    expect(svg).toContain("<svg");
    expect((svg.match(/<path /g) ?? []).length).toBe(2);
    expect(svg).toContain("DPC area 5.30, ZF area 3.25");
    const meta = readMetadata(svg);
    expect(meta.kind).toBe("region");
    expect(meta.annotation).toBe("DPC area 5.30, ZF area 3.25");
    expect(meta.curves).toEqual(["ZF", "DPC 1>2"]);
  });

  it("is deterministic", () => {
    expect(renderRegion([ZF, DPC], SUMMARY)).toBe(renderRegion([ZF, DPC], SUMMARY));
  });

  it("rejects boundaries with empty rate cells", () => {
    const broken = parseCsv(
      [REGION_HEADER, "ZF,,0,0,0,,1", "ZF,,1,0,0,1,0"].join("\n"),
      "broken.csv",
    );
    expect(() => renderRegion([broken], SUMMARY)).toThrow(/empty r1\/r2/);
  });

  it("rejects a boundary file mixing schemes", () => {
    const mixed = parseCsv(
      [REGION_HEADER, "ZF,,0,0,0,0,1", "DPC,1>2,1,0,0,1,0"].join("\n"),
      "mixed.csv",
    );
    expect(() => renderRegion([mixed], SUMMARY)).toThrow(/single scheme\/order/);
  });

  it("rejects a contour table passed as a boundary", () => {
    const wrong = parseCsv("d,s,zf_sum_rate,dpc_sum_rate,diff,status\n1,1,1,1,0,Ok", "c.csv");
    expect(() => renderRegion([wrong], SUMMARY)).toThrow(/header mismatch in c\.csv/);
  });
});
