/**
 * Figure model: two panels over one series bundle.  The left panel shows
 * the full size range, the right only sizes from the zoom threshold up,
 * where the fast methods separate.  Pure data; rendering lives in svg.ts.
 */

import type { SeriesBundle, SeriesPoint } from "./csv.js";

export interface FigureOptions {
  logY?: boolean;
  zoomFrom?: number;
  width?: number;
  height?: number;
}

export interface PanelSeries {
  method: string;
  color: string;
  points: SeriesPoint[];
}

export interface PanelModel {
  title: string;
  series: PanelSeries[];
  bMin: number;
  bMax: number;
  yMin: number;
  yMax: number;
}

export interface FigureModel {
  panels: PanelModel[];
  logY: boolean;
  width: number;
  height: number;
}

const PALETTE = [
  "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
  "#8c564b", "#17becf", "#e377c2", "#7f7f7f", "#bcbd22", "#000000",
];

function panelFrom(title: string, series: PanelSeries[]): PanelModel {
  const bs: number[] = [];
  const ys: number[] = [];
  for (const s of series) {
    for (const p of s.points) {
      bs.push(p.b);
      ys.push(p.min, p.max);
    }
  }
  return {
    title,
    series,
    bMin: Math.min(...bs),
    bMax: Math.max(...bs),
    yMin: Math.min(...ys),
    yMax: Math.max(...ys),
  };
}

export function buildFigure(bundle: SeriesBundle, options: FigureOptions = {}): FigureModel {
  if (bundle.size === 0) {
    throw new Error("cannot build a figure from an empty bundle");
  }
  const zoomFrom = options.zoomFrom ?? 20;
  const methods = [...bundle.keys()];
  const full: PanelSeries[] = methods.map((method, i) => ({
    method,
    color: PALETTE[i % PALETTE.length],
    points: bundle.get(method)!,
  }));
  const zoomed: PanelSeries[] = full
    .map((s) => ({ ...s, points: s.points.filter((p) => p.b >= zoomFrom) }))
    .filter((s) => s.points.length > 0);

  const panels = [panelFrom("all sizes", full)];
  if (zoomed.length > 0) {
    panels.push(panelFrom(`b >= ${zoomFrom}`, zoomed));
  } else {
    panels.push({
      title: `b >= ${zoomFrom} (no data)`,
      series: [],
      bMin: zoomFrom,
      bMax: zoomFrom + 1,
      yMin: 1e-9,
      yMax: 1e-6,
    });
  }
  return {
    panels,
    logY: options.logY ?? true,
    width: options.width ?? 1100,
    height: options.height ?? 420,
  };
}

/** Powers of ten spanning [lo, hi], for the log axis. */
export function logTicks(lo: number, hi: number): number[] {
  const ticks: number[] = [];
  for (let e = Math.floor(Math.log10(lo)); e <= Math.ceil(Math.log10(hi)); e++) {
    ticks.push(10 ** e);
  }
  return ticks;
}

/** Round-number ticks spanning [lo, hi] for the linear axis. */
export function linearTicks(lo: number, hi: number, count = 5): number[] {
  if (hi <= lo) {
    return [lo];
  }
  const rawStep = (hi - lo) / count;
  const mag = 10 ** Math.floor(Math.log10(rawStep));
  const step = [1, 2, 5, 10].map((m) => m * mag).find((s) => s >= rawStep)!;
  const ticks: number[] = [];
  for (let t = Math.ceil(lo / step) * step; t <= hi; t += step) {
    ticks.push(t);
  }
  return ticks;
}
