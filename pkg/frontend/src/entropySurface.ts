/**
 * Heatmap of spin entropy over (theta, gamma) from the `spin-entropy` sweep
 * CSV.  Pure CSV-to-SVG transform: no physics is recomputed here; data
 * sanity checks are soft (warnings), per-figure failures are hard errors.
 */

import { Table, requireHeader } from "./csv.js";
import { document, el, formatTick, linearScale, text, viridis } from "./svg.js";

export interface RenderResult {
  svg: string;
  warnings: string[];
}

interface SurfaceGrid {
  thetas: number[];
  gammas: number[];
  values: number[][]; // [thetaIndex][gammaIndex]
}

function pivot(table: Table): SurfaceGrid {
  const thetas = [...new Set(table.rows.map((r) => r[0]))].sort((a, b) => a - b);
  const gammas = [...new Set(table.rows.map((r) => r[1]))].sort((a, b) => a - b);
  const values = thetas.map(() => gammas.map(() => Number.NaN));
  for (const [theta, gamma, entropy] of table.rows) {
    values[thetas.indexOf(theta)][gammas.indexOf(gamma)] = entropy;
  }
  for (const row of values) {
    if (row.some((v) => Number.isNaN(v))) {
      throw new Error("entropy sweep is not a complete (theta, gamma) grid");
    }
  }
  return { thetas, gammas, values };
}

function softChecks(grid: SurfaceGrid): string[] {
  const warnings: string[] = [];
  // ridge: entropy should rise monotonically with gamma at theta closest to pi/2
  const ridgeIndex = grid.thetas.reduce(
    (best, t, i) =>
      Math.abs(t - Math.PI / 2) < Math.abs(grid.thetas[best] - Math.PI / 2) ? i : best,
    0,
  );
  const ridge = grid.values[ridgeIndex];
  for (let j = 1; j < ridge.length; j++) {
    if (ridge[j] + 1e-12 < ridge[j - 1]) {
      warnings.push(
        `entropy ridge at theta=${grid.thetas[ridgeIndex].toFixed(3)} is not monotone in gamma`,
      );
      break;
    }
  }
  // zero-gamma slice should be a zero plateau
  if (grid.gammas[0] === 0) {
    const worst = Math.max(...grid.values.map((row) => Math.abs(row[0])));
    if (worst > 1e-9) {
      warnings.push(`gamma=0 slice is not zero (max |S| = ${worst.toExponential(2)})`);
    }
  }
  if (Math.min(...grid.values.flat()) < -1e-12) {
    warnings.push("negative entropy values present");
  }
  return warnings;
}

export function renderEntropySurface(table: Table): RenderResult {
  requireHeader(table, ["theta", "gamma", "entropy"]);
  const grid = pivot(table);
  const warnings = softChecks(grid);

  const width = 760;
  const height = 560;
  const left = 70;
  const right = width - 120;
  const top = 48;
  const bottom = height - 56;
  const x = linearScale([0, grid.thetas.length], [left, right]);
  const y = linearScale([0, grid.gammas.length], [bottom, top]);
  const vmax = Math.max(...grid.values.flat(), 1e-12);

  const parts: string[] = [];
  parts.push(text(left, 24, "Spin entropy over spinor angle and boost parameter", {
    "font-size": 16,
  }));
  for (let i = 0; i < grid.thetas.length; i++) {
    for (let j = 0; j < grid.gammas.length; j++) {
      parts.push(
        el("rect", {
          x: x(i),
          y: y(j + 1),
          width: x(i + 1) - x(i) + 0.5,
          height: y(j) - y(j + 1) + 0.5,
          fill: viridis(grid.values[i][j] / vmax),
        }),
      );
    }
  }
  parts.push(el("rect", {
    x: left, y: top, width: right - left, height: bottom - top,
    fill: "none", stroke: "#333",
  }));
  // axis labels at the cell centers of a thinned tick set
  const thinX = Math.max(1, Math.floor(grid.thetas.length / 6));
  for (let i = 0; i < grid.thetas.length; i += thinX) {
    parts.push(text(x(i + 0.5), bottom + 18, formatTick(grid.thetas[i]), { "text-anchor": "middle" }));
  }
  const thinY = Math.max(1, Math.floor(grid.gammas.length / 6));
  for (let j = 0; j < grid.gammas.length; j += thinY) {
    parts.push(text(left - 8, y(j + 0.5) + 4, formatTick(grid.gammas[j]), { "text-anchor": "end" }));
  }
  parts.push(text((left + right) / 2, height - 16, "theta (spinor angle)", { "text-anchor": "middle" }));
  parts.push(text(18, (top + bottom) / 2, "gamma", {
    "text-anchor": "middle",
    transform: `rotate(-90 18 ${(top + bottom) / 2})`,
  }));

  // colorbar
  const cbX = width - 88;
  const steps = 32;
  for (let k = 0; k < steps; k++) {
    const yy = linearScale([0, steps], [bottom, top])(k);
    const hh = (bottom - top) / steps + 0.5;
    parts.push(el("rect", { x: cbX, y: yy - hh, width: 18, height: hh, fill: viridis(k / (steps - 1)) }));
  }
  parts.push(el("rect", { x: cbX, y: top, width: 18, height: bottom - top, fill: "none", stroke: "#333" }));
  parts.push(text(cbX + 24, bottom + 4, "0"));
  parts.push(text(cbX + 24, top + 10, formatTick(vmax)));
  parts.push(text(cbX + 9, top - 10, "S (bits)", { "text-anchor": "middle" }));

  return { svg: document(width, height, parts), warnings };
}
