import { describe, expect, it } from "vitest";

import { aggregate, loadCsv, parseCsv } from "../src/csv.js";

const HEADER = "method,b,n,replicate,elapsed_s,per_element_s";
const FIXTURE = new URL("../fixtures/bench_sample.csv", import.meta.url).pathname;

function csv(...rows: string[]): string {
  return [HEADER, ...rows].join("\n") + "\n";
}

describe("parseCsv", () => {
  it("reads well-formed rows", () => {
    const rows = parseCsv(csv("xor,3,8,0,1e-06,1.25e-07"));
    expect(rows).toEqual([
      { method: "xor", b: 3, n: 8, replicate: 0, elapsedS: 1e-6, perElementS: 1.25e-7 },
    ]);
  });

  it("names the offending header column", () => {
    expect(() => parseCsv("method,b,n,replicate,elapsed,per_element_s\n"))
      .toThrow(/column 5 is 'elapsed'/);
  });

  it("names the offending row and column", () => {
    expect(() => parseCsv(csv("xor,3,8,0,fast,1e-07"))).toThrow(
      /row 2: column 'elapsed_s'/,
    );
  });

  it("rejects rows with the wrong field count", () => {
    expect(() => parseCsv(csv("xor,3,8,0,1e-06"))).toThrow(/row 2: 5 fields/);
  });

  it("rejects inconsistent n", () => {
    expect(() => parseCsv(csv("xor,3,9,0,1e-06,1.25e-07"))).toThrow(/n=9/);
  });

  it("rejects an empty file", () => {
    expect(() => parseCsv("")).toThrow(/empty CSV/);
  });
});

describe("aggregate", () => {
  it("collapses equal replicates to a zero-width envelope", () => {
    const rows = parseCsv(csv(
      "xor,4,16,0,4.8e-06,3e-07",
      "xor,4,16,1,4.8e-06,3e-07",
      "xor,4,16,2,4.8e-06,3e-07",
    ));
    const points = aggregate(rows).get("xor")!;
    expect(points).toEqual([{ b: 4, mean: 3e-7, min: 3e-7, max: 3e-7 }]);
  });

  it("matches the hand-computed mean, min, and max exactly", () => {
    const rows = parseCsv(csv(
      "xor,4,16,0,1.6e-08,1e-09",
      "xor,4,16,1,3.2e-08,2e-09",
      "xor,4,16,2,4.8e-08,3e-09",
    ));
    const [point] = aggregate(rows).get("xor")!;
    expect(point.mean).toBe((1e-9 + 2e-9 + 3e-9) / 3); // exactly 2e-9 in IEEE
    expect(point.mean).toBe(2e-9);
    expect(point.min).toBe(1e-9);
    expect(point.max).toBe(3e-9);
  });

  it("is independent of row order", () => {
    const rows = parseCsv(csv(
      "a,3,8,0,8e-07,1e-07",
      "b,3,8,0,1.6e-06,2e-07",
      "a,4,16,0,4.8e-06,3e-07",
      "a,3,8,1,2.4e-06,3e-07",
    ));
    const shuffled = [rows[2], rows[0], rows[3], rows[1]];
    expect(aggregate(shuffled)).toEqual(aggregate(rows));
  });

  it("sorts points by b within each series", () => {
    const rows = parseCsv(csv(
      "a,10,1024,0,1e-05,9.765625e-09",
      "a,4,16,0,4.8e-06,3e-07",
      "a,8,256,0,1e-05,3.90625e-08",
    ));
    const bs = aggregate(rows).get("a")!.map((p) => p.b);
    expect(bs).toEqual([4, 8, 10]);
  });

  it("keeps min <= mean <= max", () => {
    const bundle = loadCsv(FIXTURE);
    for (const points of bundle.values()) {
      for (const p of points) {
        expect(p.min).toBeLessThanOrEqual(p.mean);
        expect(p.mean).toBeLessThanOrEqual(p.max);
      }
    }
  });
});

describe("loadCsv on harness output", () => {
  it("produces one point per (method, b) pair", () => {
    const bundle = loadCsv(FIXTURE);
    // fixture: 5 methods x 11 sizes x 5 replicates from bitrev-bench
    expect(bundle.size).toBe(5);
    for (const points of bundle.values()) {
      expect(points.length).toBe(11);
    }
  });

  it("wraps read errors with the path", () => {
    expect(() => loadCsv("/no/such/file.csv")).toThrow(/no\/such\/file/);
  });
});
