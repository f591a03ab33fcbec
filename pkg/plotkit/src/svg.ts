/**
 * Hand-rolled SVG rendering of the figure model: per series a shaded
 * min/max band beneath a mean line with point markers, a legend, and a
 * log or linear time axis.  Point markers carry data-b / data-mean
 * attributes so tests (and curious people) can read the plotted values
 * back out of the file.
 */

import type { FigureModel, PanelModel } from "./figure.js";
import { linearTicks, logTicks } from "./figure.js";

const MARGIN = { top: 34, right: 16, bottom: 44, left: 74 };

function esc(text: string): string {
  return text.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
}

function fmt(value: number): string {
  if (value === 0) return "0";
  const e = Math.floor(Math.log10(Math.abs(value)));
  if (e < -2 || e > 3) return value.toExponential(0);
  return String(Number(value.toPrecision(3)));
}

class Scale {
  constructor(
    private lo: number,
    private hi: number,
    private outLo: number,
    private outHi: number,
    private log: boolean,
  ) {
    if (log) {
      this.lo = Math.log10(lo);
      this.hi = Math.log10(hi);
    }
  }

  at(value: number): number {
    const v = this.log ? Math.log10(value) : value;
    const span = this.hi - this.lo || 1;
    return this.outLo + ((v - this.lo) / span) * (this.outHi - this.outLo);
  }
}

function renderPanel(
  panel: PanelModel,
  logY: boolean,
  x0: number,
  panelWidth: number,
  height: number,
): string {
  const plotW = panelWidth - MARGIN.left - MARGIN.right;
  const plotH = height - MARGIN.top - MARGIN.bottom;
  const left = x0 + MARGIN.left;
  const top = MARGIN.top;
  // pad the y range so bands do not sit on the frame
  const yPad = logY ? 1.4 : 0.08 * (panel.yMax - panel.yMin || panel.yMax || 1);
  const yLo = logY ? panel.yMin / yPad : Math.max(0, panel.yMin - yPad);
  const yHi = logY ? panel.yMax * yPad : panel.yMax + yPad;
  const sx = new Scale(panel.bMin, Math.max(panel.bMax, panel.bMin + 1), left, left + plotW, false);
  const sy = new Scale(yLo, yHi, top + plotH, top, logY);

  const parts: string[] = [];
  parts.push(
    `<rect x="${left}" y="${top}" width="${plotW}" height="${plotH}" fill="#fcfcfc" stroke="#444"/>`,
  );
  parts.push(
    `<text x="${left + plotW / 2}" y="${top - 12}" text-anchor="middle" font-size="14">${esc(panel.title)}</text>`,
  );

  const yTicks = logY ? logTicks(yLo, yHi) : linearTicks(yLo, yHi);
  for (const t of yTicks) {
    if (t < yLo || t > yHi) continue;
    const y = sy.at(t);
    parts.push(`<line x1="${left}" y1="${y}" x2="${left + plotW}" y2="${y}" stroke="#ddd"/>`);
    parts.push(
      `<text x="${left - 6}" y="${y + 4}" text-anchor="end" font-size="11">${fmt(t)}</text>`,
    );
  }
  for (let b = Math.ceil(panel.bMin); b <= panel.bMax; b++) {
    if (panel.bMax - panel.bMin > 14 && b % 2 === 1) continue;
    const x = sx.at(b);
    parts.push(
      `<line x1="${x}" y1="${top + plotH}" x2="${x}" y2="${top + plotH + 4}" stroke="#444"/>`,
    );
    parts.push(
      `<text x="${x}" y="${top + plotH + 17}" text-anchor="middle" font-size="11">${b}</text>`,
    );
  }
  parts.push(
    `<text x="${left + plotW / 2}" y="${top + plotH + 36}" text-anchor="middle" font-size="12">index bits b (n = 2^b)</text>`,
  );
  parts.push(
    `<text transform="rotate(-90 ${x0 + 18} ${top + plotH / 2})" x="${x0 + 18}" y="${top + plotH / 2}" text-anchor="middle" font-size="12">seconds / element</text>`,
  );

  for (const series of panel.series) {
    const pts = series.points;
    if (pts.length === 0) continue;
    // min/max envelope: forward along the max edge, back along the min edge
    const band = [
      ...pts.map((p) => `${sx.at(p.b)},${sy.at(p.max)}`),
      ...[...pts].reverse().map((p) => `${sx.at(p.b)},${sy.at(p.min)}`),
    ].join(" ");
    parts.push(`<polygon points="${band}" fill="${series.color}" opacity="0.18"/>`);
    const line = pts.map((p) => `${sx.at(p.b)},${sy.at(p.mean)}`).join(" ");
    parts.push(
      `<polyline points="${line}" fill="none" stroke="${series.color}" stroke-width="1.6"/>`,
    );
    for (const p of pts) {
      parts.push(
        `<circle cx="${sx.at(p.b)}" cy="${sy.at(p.mean)}" r="2.4" fill="${series.color}"` +
          ` data-method="${esc(series.method)}" data-b="${p.b}" data-mean="${p.mean}"/>`,
      );
    }
  }

  const legendX = left + plotW - 8;
  panel.series.forEach((series, i) => {
    const y = top + 14 + 15 * i;
    parts.push(
      `<line x1="${legendX - 86}" y1="${y - 4}" x2="${legendX - 66}" y2="${y - 4}" stroke="${series.color}" stroke-width="2"/>`,
    );
    parts.push(
      `<text x="${legendX - 60}" y="${y}" font-size="11" class="legend">${esc(series.method)}</text>`,
    );
  });
  return parts.join("\n");
}

export function renderSvg(figure: FigureModel): string {
  const panelWidth = figure.width / figure.panels.length;
  const body = figure.panels
    .map((panel, i) => renderPanel(panel, figure.logY, i * panelWidth, panelWidth, figure.height))
    .join("\n");
  return (
    `<svg xmlns="http://www.w3.org/2000/svg" width="${figure.width}" height="${figure.height}"` +
    ` viewBox="0 0 ${figure.width} ${figure.height}" font-family="sans-serif">\n` +
    `<rect width="${figure.width}" height="${figure.height}" fill="white"/>\n` +
    `${body}\n</svg>\n`
  );
}
