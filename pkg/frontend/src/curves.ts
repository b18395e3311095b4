/**
 * Line plot of one x column against every other column of a sweep CSV, with
 * a legend taken from the header.  Data expectations (flat compensated CHSH
 * row, matching closed/numeric pairs) are soft checks reported as warnings.
 */

import { Table, column } from "./csv.js";
import { SERIES_COLORS, document, el, frame, text } from "./svg.js";

import type { RenderResult } from "./entropySurface.js";

export function renderCurves(table: Table, xColumn: string): RenderResult {
  const xs = column(table, xColumn);
  const yNames = table.columns.filter((c) => c !== xColumn);
  if (yNames.length === 0) {
    throw new Error("need at least one y column besides the x column");
  }

  const warnings: string[] = [];
  const flat = yNames.find((name) => name === "zeta_compensated");
  if (flat) {
    const ys = column(table, flat);
    if (Math.max(...ys) - Math.min(...ys) > 1e-6) {
      warnings.push("zeta_compensated is not flat across the sweep");
    }
  }

  const order = xs.map((_, i) => i).sort((a, b) => xs[a] - xs[b]);
  const allY = yNames.flatMap((name) => column(table, name));
  const yMin = Math.min(...allY, 0);
  const yMax = Math.max(...allY);
  const pad = (yMax - yMin || 1) * 0.06;

  const width = 760;
  const height = 520;
  const { frame: fr, parts } = frame(
    width,
    height,
    [Math.min(...xs), Math.max(...xs)],
    [yMin, yMax + pad],
    xColumn,
    yNames.length === 1 ? yNames[0] : "value",
  );
  parts.unshift(text(64, 24, `Sweep curves vs ${xColumn}`, { "font-size": 16 }));

  yNames.forEach((name, k) => {
    const ys = column(table, name);
    const points = order.map((i) => `${fr.x(xs[i]).toFixed(2)},${fr.y(ys[i]).toFixed(2)}`);
    const color = SERIES_COLORS[k % SERIES_COLORS.length];
    parts.push(
      el("polyline", {
        points: points.join(" "),
        fill: "none",
        stroke: color,
        "stroke-width": 2,
      }),
    );
    for (const p of points) {
      const [px, py] = p.split(",");
      parts.push(el("circle", { cx: px, cy: py, r: 2.6, fill: color }));
    }
    const ly = 50 + 18 * k;
    parts.push(el("line", { x1: fr.right - 150, y1: ly, x2: fr.right - 122, y2: ly, stroke: color, "stroke-width": 2 }));
    parts.push(text(fr.right - 116, ly + 4, name));
  });

  return { svg: document(width, height, parts), warnings };
}
