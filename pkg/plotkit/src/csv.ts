/**
 * Reading bitrev-bench CSV output and collapsing replicates into
 * per-(method, size) mean/min/max statistics.
 *
 * Expected schema: method,b,n,replicate,elapsed_s,per_element_s
 */

import { readFileSync } from "fs";

export interface RecordRow {
  method: string;
  b: number;
  n: number;
  replicate: number;
  elapsedS: number;
  perElementS: number;
}

/** Per-element statistics for one method at one size. */
export interface SeriesPoint {
  b: number;
  mean: number;
  min: number;
  max: number;
}

/** method id -> points with strictly increasing b. */
export type SeriesBundle = Map<string, SeriesPoint[]>;

const HEADER = ["method", "b", "n", "replicate", "elapsed_s", "per_element_s"];

function numeric(field: string, value: string, line: number): number {
  const parsed = Number(value);
  if (value === "" || !Number.isFinite(parsed)) {
    throw new Error(`row ${line}: column '${field}' is not a number: '${value}'`);
  }
  return parsed;
}

export function parseCsv(text: string): RecordRow[] {
  const lines = text.split("\n").filter((l) => l.length > 0);
  if (lines.length === 0) {
    throw new Error("empty CSV: no header row");
  }
  const header = lines[0].split(",");
  for (let i = 0; i < HEADER.length; i++) {
    if (header[i] !== HEADER[i]) {
      throw new Error(
        `header column ${i + 1} is '${header[i] ?? ""}', expected '${HEADER[i]}'`,
      );
    }
  }
  if (header.length !== HEADER.length) {
    throw new Error(`header has ${header.length} columns, expected ${HEADER.length}`);
  }
  const rows: RecordRow[] = [];
  for (let i = 1; i < lines.length; i++) {
    const fields = lines[i].split(",");
    const line = i + 1;
    if (fields.length !== HEADER.length) {
      throw new Error(`row ${line}: ${fields.length} fields, expected ${HEADER.length}`);
    }
    const row: RecordRow = {
      method: fields[0],
      b: numeric("b", fields[1], line),
      n: numeric("n", fields[2], line),
      replicate: numeric("replicate", fields[3], line),
      elapsedS: numeric("elapsed_s", fields[4], line),
      perElementS: numeric("per_element_s", fields[5], line),
    };
    if (row.n !== 2 ** row.b) {
      throw new Error(`row ${line}: n=${row.n} does not match 2**${row.b}`);
    }
    rows.push(row);
  }
  return rows;
}

/** Collapse replicates into (mean, min, max) per (method, b), sorted by b. */
export function aggregate(rows: RecordRow[]): SeriesBundle {
  const sums = new Map<string, Map<number, { sum: number; count: number; min: number; max: number }>>();
  for (const row of rows) {
    let byB = sums.get(row.method);
    if (!byB) {
      byB = new Map();
      sums.set(row.method, byB);
    }
    const acc = byB.get(row.b);
    if (!acc) {
      byB.set(row.b, {
        sum: row.perElementS,
        count: 1,
        min: row.perElementS,
        max: row.perElementS,
      });
    } else {
      acc.sum += row.perElementS;
      acc.count += 1;
      acc.min = Math.min(acc.min, row.perElementS);
      acc.max = Math.max(acc.max, row.perElementS);
    }
  }
  const bundle: SeriesBundle = new Map();
  for (const method of [...sums.keys()].sort()) {
    const byB = sums.get(method)!;
    const points = [...byB.keys()]
      .sort((a, b) => a - b)
      .map((b) => {
        const acc = byB.get(b)!;
        return { b, mean: acc.sum / acc.count, min: acc.min, max: acc.max };
      });
    bundle.set(method, points);
  }
  return bundle;
}

export function loadCsv(path: string): SeriesBundle {
  let text: string;
  try {
    text = readFileSync(path, "utf8");
  } catch (err) {
    throw new Error(`cannot read ${path}: ${(err as Error).message}`);
  }
  try {
    return aggregate(parseCsv(text));
  } catch (err) {
    throw new Error(`${path}: ${(err as Error).message}`);
  }
}
