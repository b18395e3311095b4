/** Small SVG scene helpers: scales, axes, color ramps, element builders. */

export interface Scale {
  (x: number): number;
  domain: [number, number];
}

export function linearScale(domain: [number, number], range: [number, number]): Scale {
  const [d0, d1] = domain;
  const [r0, r1] = range;
  const span = d1 - d0 || 1;
  const fn = ((x: number) => r0 + ((x - d0) / span) * (r1 - r0)) as Scale;
  fn.domain = domain;
  return fn;
}

/** Around n round-valued ticks covering [min, max]. */
export function ticks(min: number, max: number, n = 5): number[] {
  if (!(max > min)) {
    return [min];
  }
  const rawStep = (max - min) / Math.max(1, n);
  const power = Math.pow(10, Math.floor(Math.log10(rawStep)));
  const candidates = [1, 2, 2.5, 5, 10].map((m) => m * power);
  const step = candidates.find((s) => (max - min) / s <= n) ?? candidates[4];
  const start = Math.ceil(min / step) * step;
  const out: number[] = [];
  for (let t = start; t <= max + step * 1e-9; t += step) {
    out.push(Math.abs(t) < step * 1e-9 ? 0 : t);
  }
  return out;
}

export function formatTick(x: number): string {
  if (x === 0) return "0";
  const abs = Math.abs(x);
  if (abs >= 0.01 && abs < 10000) {
    return String(Number(x.toPrecision(4)));
  }
  return x.toExponential(2);
}

const VIRIDIS_STOPS: Array<[number, [number, number, number]]> = [
  [0.0, [68, 1, 84]],
  [0.25, [59, 82, 139]],
  [0.5, [33, 145, 140]],
  [0.75, [94, 201, 98]],
  [1.0, [253, 231, 37]],
];

/** Perceptual color ramp for t in [0, 1]. */
export function viridis(t: number): string {
  const x = Math.min(1, Math.max(0, t));
  for (let i = 1; i < VIRIDIS_STOPS.length; i++) {
    const [t1, c1] = VIRIDIS_STOPS[i];
    if (x <= t1) {
      const [t0, c0] = VIRIDIS_STOPS[i - 1];
      const f = (x - t0) / (t1 - t0);
      const rgb = c0.map((c, k) => Math.round(c + f * (c1[k] - c)));
      return `rgb(${rgb[0]},${rgb[1]},${rgb[2]})`;
    }
  }
  return "rgb(253,231,37)";
}

export const SERIES_COLORS = [
  "#1f77b4",
  "#d62728",
  "#2ca02c",
  "#9467bd",
  "#ff7f0e",
  "#8c564b",
];

export function el(tag: string, attrs: Record<string, string | number>, body = ""): string {
  const rendered = Object.entries(attrs)
    .map(([k, v]) => `${k}="${String(v)}"`)
    .join(" ");
  return body ? `<${tag} ${rendered}>${body}</${tag}>` : `<${tag} ${rendered}/>`;
}

export function text(x: number, y: number, content: string, attrs: Record<string, string | number> = {}): string {
  const escaped = content.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
  return el("text", { x, y, "font-size": 12, "font-family": "sans-serif", ...attrs }, escaped);
}

export function document(width: number, height: number, children: string[]): string {
  return [
    `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" height="${height}" viewBox="0 0 ${width} ${height}">`,
    el("rect", { x: 0, y: 0, width, height, fill: "white" }),
    ...children,
    "</svg>",
  ].join("\n");
}

export interface Frame {
  x: Scale;
  y: Scale;
  left: number;
  top: number;
  right: number;
  bottom: number;
}

/** Plot frame with axes, tick marks and labels. */
export function frame(
  width: number,
  height: number,
  xDomain: [number, number],
  yDomain: [number, number],
  xLabel: string,
  yLabel: string,
): { frame: Frame; parts: string[] } {
  const left = 64;
  const right = width - 24;
  const top = 40;
  const bottom = height - 48;
  const x = linearScale(xDomain, [left, right]);
  const y = linearScale(yDomain, [bottom, top]);
  const parts: string[] = [];
  parts.push(el("rect", {
    x: left, y: top, width: right - left, height: bottom - top,
    fill: "none", stroke: "#333", "stroke-width": 1,
  }));
  for (const t of ticks(xDomain[0], xDomain[1])) {
    parts.push(el("line", { x1: x(t), y1: bottom, x2: x(t), y2: bottom + 5, stroke: "#333" }));
    parts.push(text(x(t), bottom + 18, formatTick(t), { "text-anchor": "middle" }));
  }
  for (const t of ticks(yDomain[0], yDomain[1])) {
    parts.push(el("line", { x1: left - 5, y1: y(t), x2: left, y2: y(t), stroke: "#333" }));
    parts.push(text(left - 8, y(t) + 4, formatTick(t), { "text-anchor": "end" }));
  }
  parts.push(text((left + right) / 2, height - 12, xLabel, { "text-anchor": "middle" }));
  parts.push(
    text(16, (top + bottom) / 2, yLabel, {
      "text-anchor": "middle",
      transform: `rotate(-90 16 ${(top + bottom) / 2})`,
    }),
  );
  return { frame: { x, y, left, top, right, bottom }, parts };
}
