/**
 * plotkit FILE.csv [--out FIG] [--log-y | --linear-y] [--zoom-from B]
 *
 * Reads bitrev-bench CSV output and writes a two-panel SVG figure:
 * full size range on the left, the zoomed tail on the right, mean lines
 * with shaded min/max bands.
 */

import { writeFileSync } from "fs";

import { loadCsv } from "./csv.js";
import { buildFigure } from "./figure.js";
import { renderSvg } from "./svg.js";

export interface CliArgs {
  file: string;
  out: string;
  logY: boolean;
  zoomFrom: number;
}

const USAGE = "usage: plotkit FILE.csv [--out FIG] [--log-y|--linear-y] [--zoom-from B]";

export function parseArgs(argv: string[]): CliArgs {
  const args: CliArgs = { file: "", out: "figure.svg", logY: true, zoomFrom: 20 };
  for (let i = 0; i < argv.length; i++) {
    const arg = argv[i];
    if (arg === "--out") {
      args.out = argv[++i] ?? "";
      if (!args.out) throw new Error("--out needs a path");
    } else if (arg === "--log-y") {
      args.logY = true;
    } else if (arg === "--linear-y") {
      args.logY = false;
    } else if (arg === "--zoom-from") {
      const value = Number(argv[++i]);
      if (!Number.isInteger(value)) throw new Error("--zoom-from needs an integer");
      args.zoomFrom = value;
    } else if (arg === "--help" || arg === "-h") {
      throw new Error(USAGE);
    } else if (arg.startsWith("--")) {
      throw new Error(`unknown option ${arg}\n${USAGE}`);
    } else if (!args.file) {
      args.file = arg;
    } else {
      throw new Error(`unexpected argument ${arg}\n${USAGE}`);
    }
  }
  if (!args.file) throw new Error(USAGE);
  if (!/\.[a-z]+$/i.test(args.out)) args.out += ".svg";
  return args;
}

export function run(argv: string[]): string {
  const args = parseArgs(argv);
  const bundle = loadCsv(args.file);
  const figure = buildFigure(bundle, { logY: args.logY, zoomFrom: args.zoomFrom });
  writeFileSync(args.out, renderSvg(figure));
  const points = [...bundle.values()].reduce((acc, pts) => acc + pts.length, 0);
  console.log(`${args.out}: ${bundle.size} series, ${points} points`);
  return args.out;
}

