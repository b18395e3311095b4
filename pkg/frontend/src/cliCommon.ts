/** Shared argv handling and file IO for the plot entry points. */

import { readFileSync, writeFileSync } from "node:fs";

import { Table, parseCsv } from "./csv.js";
import type { RenderResult } from "./entropySurface.js";

export interface CliOptions {
  input: string;
  output: string;
  extra: Map<string, string>;
}

export function parseArgs(argv: string[], extraFlags: string[] = []): CliOptions {
  const extra = new Map<string, string>();
  let input = "";
  let output = "";
  for (let i = 0; i < argv.length; i += 2) {
    const flag = argv[i];
    const value = argv[i + 1];
    if (value === undefined) {
      throw new Error(`missing value for ${flag}`);
    }
    if (flag === "--in") input = value;
    else if (flag === "--out") output = value;
    else if (extraFlags.includes(flag)) extra.set(flag, value);
    else throw new Error(`unknown flag ${flag}`);
  }
  if (!input || !output) {
    throw new Error("usage: --in data.csv --out figure.svg" + (extraFlags.length ? ` [${extraFlags.join(" ")} ...]` : ""));
  }
  return { input, output, extra };
}

export function loadTable(path: string): Table {
  let textContent: string;
  try {
    textContent = readFileSync(path, "utf-8");
  } catch (err) {
    throw new Error(`cannot read ${path}: ${(err as Error).message}`);
  }
  return parseCsv(textContent);
}

export function emit(result: RenderResult, outputPath: string): void {
  for (const warning of result.warnings) {
    console.warn(`warning: ${warning}`);
  }
  writeFileSync(outputPath, result.svg, "utf-8");
}

export function runMain(fn: () => void): void {
  try {
    fn();
  } catch (err) {
    console.error(`error: ${(err as Error).message}`);
    process.exit(1);
  }
}
