/**
 * End-to-end acceptance: generate the four sweep CSVs with the qlorentz CLI
 * (massive distinguishability, entropy surface, photon Doppler, CHSH) and
 * render each one to a nonempty SVG; the entropy-surface soft data assertion
 * (monotone ridge at theta = pi/2) must hold on the default sweep.
 */

import { execFileSync } from "node:child_process";
import { mkdtempSync, readFileSync, statSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";

import { beforeAll, describe, expect, it } from "vitest";

import { parseCsv } from "../src/csv.js";
import { renderCurves } from "../src/curves.js";
import { renderEntropySurface } from "../src/entropySurface.js";
import { emit, loadTable } from "../src/cliCommon.js";

const dir = mkdtempSync(join(tmpdir(), "qlorentz-acceptance-"));

function qlorentz(args: string[]): void {
  execFileSync("python3", ["-m", "qlorentz.cli", ...args], {
    stdio: ["ignore", "inherit", "inherit"],
    timeout: 300_000,
  });
}

const csvs = {
  massive: join(dir, "massive.csv"),
  entropy: join(dir, "entropy.csv"),
  doppler: join(dir, "doppler.csv"),
  chsh: join(dir, "chsh.csv"),
};

beforeAll(() => {
  qlorentz(["massive-distinguish", "--out", csvs.massive]);
  qlorentz(["spin-entropy", "--out", csvs.entropy]);
  qlorentz(["photon-doppler", "--out", csvs.doppler]);
  qlorentz(["chsh", "--out", csvs.chsh]);
}, 600_000);

describe("plots consume the CLI sweeps", () => {
  it("entropy surface renders and its monotone-ridge assertion passes", () => {
    const result = renderEntropySurface(loadTable(csvs.entropy));
    const out = join(dir, "entropy.svg");
    emit(result, out);
    expect(result.warnings).toEqual([]);
    expect(statSync(out).size).toBeGreaterThan(1000);
  });

  it("massive distinguishability curves render", () => {
    const result = renderCurves(loadTable(csvs.massive), "gamma");
    const out = join(dir, "massive.svg");
    emit(result, out);
    expect(statSync(out).size).toBeGreaterThan(1000);
  });

  it("photon Doppler curves render", () => {
    const result = renderCurves(loadTable(csvs.doppler), "v");
    const out = join(dir, "doppler.svg");
    emit(result, out);
    expect(statSync(out).size).toBeGreaterThan(1000);
  });

  it("CHSH curves render with a flat compensated row", () => {
    const result = renderCurves(loadTable(csvs.chsh), "v");
    const out = join(dir, "chsh.svg");
    emit(result, out);
    expect(result.warnings).toEqual([]);
    expect(statSync(out).size).toBeGreaterThan(1000);
  });

  it("doppler closed-form column scales as the Doppler factor", () => {
    // sanity on the data the figures are drawn from, not on pixels
    const table = parseCsv(readFileSync(csvs.doppler, "utf-8"));
    const iOmega = table.columns.indexOf("omega");
    const iV = table.columns.indexOf("v");
    const iPe = table.columns.indexOf("pe_closed");
    const omega = table.rows[0][iOmega];
    const base = table.rows.find((r) => r[iOmega] === omega && r[iV] === 0)!;
    const boosted = table.rows.find((r) => r[iOmega] === omega && r[iV] === 0.6)!;
    expect(boosted[iPe] / base[iPe]).toBeCloseTo(4.0, 10);
  });
});
