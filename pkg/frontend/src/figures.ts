/** Renderers for the eight figure analogues, all consuming CLI CSV artifacts.
 *
 * Real-interval segments are drawn solid and complex segments are omitted;
 * classical stability charts shade the unstable bands; the phase diagram
 * fills the unbroken region connected to q = 0, clipped at the axis cap
 * where the traced line is unbounded.
 */

import { Cell, SchemaError, Table, column, numericColumn, requireColumns } from "./csv.js";
import { Scale, linearScale, logScale } from "./scale.js";
import { el, fmt, polyline, svgDocument, textEl } from "./svg.js";

export type FigureId =
  | "energy-levels"
  | "energy-surface"
  | "phase-diagram"
  | "levels-j2"
  | "levels-j2-jump"
  | "levels-j3"
  | "exceptional-lines"
  | "power-law-fit";

export interface FigureSpec {
  figure: FigureId;
  output: string;
  inputs: Record<string, unknown>;
  axes?: Record<string, [number, number]>;
}

export type TableLoader = (path: string) => Table;

const SWEEP_COLUMNS = ["q", "delta", "level", "re", "im"];
const TRACE_COLUMNS = ["delta", "q_crit_pos", "q_crit_neg", "jump_flag"];
const FIT_COLUMNS = ["j", "bc", "A", "alpha", "residual_rms", "delta_lo", "delta_hi"];

const REAL_TOL = 1e-7;
const PALETTE = ["#1f6fb4", "#c23b22", "#2c8a4b", "#8a56b0", "#b58a2c", "#3aa6a6"];
const GRAY = "#c8c8c8";

function isReal(re: number, im: number): boolean {
  return Math.abs(im) <= REAL_TOL * Math.max(1, Math.abs(re));
}

interface Panel {
  x0: number;
  y0: number;
  w: number;
  h: number;
}

interface LevelSeries {
  x: number[];
  levels: Map<number, Array<{ re: number; im: number }>>;
}

function levelSeries(table: Table, context: string): LevelSeries {
  requireColumns(table, SWEEP_COLUMNS, context);
  const sweepParam = table.meta["sweep_param"] === "delta" ? "delta" : "q";
  const xs = numericColumn(table, sweepParam);
  const levels = numericColumn(table, "level");
  const res = numericColumn(table, "re");
  const ims = numericColumn(table, "im");
  const x: number[] = [];
  const byLevel = new Map<number, Array<{ re: number; im: number }>>();
  for (let i = 0; i < xs.length; i++) {
    if (x.length === 0 || xs[i] !== x[x.length - 1]) x.push(xs[i]);
    let series = byLevel.get(levels[i]);
    if (!series) {
      series = [];
      byLevel.set(levels[i], series);
    }
    series.push({ re: res[i], im: ims[i] });
  }
  for (const [label, series] of byLevel) {
    if (series.length !== x.length) {
      throw new SchemaError(`${context}: level ${label} has ${series.length} points for ${x.length} grid values`);
    }
  }
  return { x, levels: byLevel };
}

function realSegments(
  x: number[],
  series: Array<{ re: number; im: number }>,
): Array<Array<[number, number]>> {
  const segments: Array<Array<[number, number]>> = [];
  let current: Array<[number, number]> = [];
  for (let i = 0; i < x.length; i++) {
    if (isReal(series[i].re, series[i].im)) {
      current.push([x[i], series[i].re]);
    } else if (current.length > 0) {
      segments.push(current);
      current = [];
    }
  }
  if (current.length > 0) segments.push(current);
  return segments;
}

function panelScales(panel: Panel, xDomain: [number, number], yDomain: [number, number]) {
  const xs = linearScale(xDomain, [panel.x0, panel.x0 + panel.w]);
  const ys = linearScale(yDomain, [panel.y0 + panel.h, panel.y0]);
  return { xs, ys };
}

function drawFrame(panel: Panel, xs: Scale, ys: Scale, title: string, xLabel: string, yLabel: string): string[] {
  const parts: string[] = [];
  parts.push(
    el("rect", {
      x: panel.x0,
      y: panel.y0,
      width: panel.w,
      height: panel.h,
      fill: "none",
      stroke: "#333333",
      "stroke-width": "1",
    }),
  );
  for (const t of xs.ticks()) {
    const px = xs.map(t);
    parts.push(polyline([[px, panel.y0 + panel.h], [px, panel.y0 + panel.h + 4]], { stroke: "#333333", "stroke-width": "1" }));
    parts.push(textEl(px, panel.y0 + panel.h + 14, String(t)));
  }
  for (const t of ys.ticks()) {
    const py = ys.map(t);
    parts.push(polyline([[panel.x0 - 4, py], [panel.x0, py]], { stroke: "#333333", "stroke-width": "1" }));
    parts.push(textEl(panel.x0 - 6, py + 3, String(t), "end"));
  }
  parts.push(textEl(panel.x0 + panel.w / 2, panel.y0 - 6, title));
  parts.push(textEl(panel.x0 + panel.w / 2, panel.y0 + panel.h + 28, xLabel));
  parts.push(textEl(panel.x0 - 34, panel.y0 + panel.h / 2, yLabel, "middle"));
  return parts;
}

function clippedGroup(panel: Panel, id: string, body: string[]): string[] {
  return [
    `<clipPath id="${id}"><rect x="${fmt(panel.x0)}" y="${fmt(panel.y0)}" width="${fmt(panel.w)}" height="${fmt(panel.h)}"/></clipPath>`,
    `<g clip-path="url(#${id})">${body.join("")}</g>`,
  ];
}

function asStringArray(value: unknown, name: string): string[] {
  if (!Array.isArray(value) || value.some((v) => typeof v !== "string")) {
    throw new SchemaError(`inputs.${name} must be an array of CSV paths`);
  }
  return value as string[];
}

function asString(value: unknown, name: string): string {
  if (typeof value !== "string") {
    throw new SchemaError(`inputs.${name} must be a CSV path`);
  }
  return value;
}

/** Unstable bands of the classical chart: alternate regions of the sorted
 * boundary stack, starting below the lowest curve. */
function stabilityShading(
  panel: Panel,
  xs: Scale,
  ys: Scale,
  neumann: LevelSeries,
  dirichlet: LevelSeries,
): string[] {
  const x = neumann.x;
  const bands: string[] = [];
  for (let i = 0; i + 1 < x.length; i++) {
    const stack = (idx: number) => {
      const values: number[] = [];
      for (const series of neumann.levels.values()) values.push(series[idx].re);
      for (const series of dirichlet.levels.values()) values.push(series[idx].re);
      return values.sort((a, b) => a - b);
    };
    const left = stack(i);
    const right = stack(i + 1);
    const px0 = xs.map(x[i]);
    const px1 = xs.map(x[i + 1]);
    const yTop = panel.y0;
    const yBottom = panel.y0 + panel.h;
    const bandCount = Math.min(left.length, right.length);
    // region below the lowest boundary is unstable, then alternate upward
    for (let b = -1; b < bandCount - 1; b += 2) {
      const l0 = b < 0 ? yBottom : Math.min(yBottom, Math.max(yTop, ys.map(left[b])));
      const l1 = Math.min(yBottom, Math.max(yTop, ys.map(left[b + 1])));
      const r0 = b < 0 ? yBottom : Math.min(yBottom, Math.max(yTop, ys.map(right[b])));
      const r1 = Math.min(yBottom, Math.max(yTop, ys.map(right[b + 1])));
      bands.push(
        el("polygon", {
          points: `${fmt(px0)},${fmt(l0)} ${fmt(px1)},${fmt(r0)} ${fmt(px1)},${fmt(r1)} ${fmt(px0)},${fmt(l1)}`,
          fill: GRAY,
          "fill-opacity": "0.45",
          stroke: "none",
        }),
      );
    }
  }
  return bands;
}

interface LevelPanelInput {
  title: string;
  sweep: string;
}

function renderLevelPanels(
  spec: FigureSpec,
  load: TableLoader,
  columnsPerRow: number,
  withReference: boolean,
): string {
  const rawPanels = spec.inputs["panels"];
  if (!Array.isArray(rawPanels) || rawPanels.length === 0) {
    throw new SchemaError("inputs.panels must be a nonempty array of {title, sweep}");
  }
  const panelsIn = rawPanels.map((p, i) => {
    if (typeof p !== "object" || p === null || typeof (p as any).sweep !== "string") {
      throw new SchemaError(`inputs.panels[${i}] must be {title, sweep}`);
    }
    return p as unknown as LevelPanelInput;
  });
  let reference: [LevelSeries, LevelSeries] | null = null;
  if (withReference && spec.inputs["reference"] !== undefined) {
    const refPaths = asStringArray(spec.inputs["reference"], "reference");
    if (refPaths.length !== 2) {
      throw new SchemaError("inputs.reference must hold the Neumann and Dirichlet classical sweeps");
    }
    reference = [
      levelSeries(load(refPaths[0]), refPaths[0]),
      levelSeries(load(refPaths[1]), refPaths[1]),
    ];
  }

  const panelW = 250;
  const panelH = 260;
  const marginX = 58;
  const marginY = 40;
  const rows = Math.ceil(panelsIn.length / columnsPerRow);
  const width = marginX + columnsPerRow * (panelW + 46);
  const height = 18 + rows * (panelH + marginY + 14);
  const body: string[] = [];

  panelsIn.forEach((input, idx) => {
    const table = load(input.sweep);
    const series = levelSeries(table, input.sweep);
    const col = idx % columnsPerRow;
    const row = Math.floor(idx / columnsPerRow);
    const panel: Panel = {
      x0: marginX + col * (panelW + 46),
      y0: 24 + row * (panelH + marginY + 14),
      w: panelW,
      h: panelH,
    };
    const xAxis = spec.axes?.["x"] ?? [series.x[0], series.x[series.x.length - 1]];
    const yAxis = spec.axes?.["y"] ?? autoRealRange(series);
    const { xs, ys } = panelScales(panel, xAxis, yAxis);
    const inner: string[] = [];
    if (reference) {
      inner.push(...stabilityShading(panel, xs, ys, reference[0], reference[1]));
      for (const refSeries of reference) {
        for (const levelValues of refSeries.levels.values()) {
          for (const seg of realSegments(refSeries.x, levelValues)) {
            inner.push(
              polyline(seg.map(([x, y]) => [xs.map(x), ys.map(y)]), {
                stroke: "#666666",
                "stroke-width": "1",
                "stroke-dasharray": "2,3",
              }),
            );
          }
        }
      }
    }
    const labels = [...series.levels.keys()].sort((a, b) => a - b);
    for (const label of labels) {
      const seg = realSegments(series.x, series.levels.get(label)!);
      for (const points of seg) {
        inner.push(
          polyline(points.map(([x, y]) => [xs.map(x), ys.map(y)]), {
            stroke: PALETTE[label % PALETTE.length],
            "stroke-width": "1.6",
          }),
        );
      }
    }
    body.push(...clippedGroup(panel, `panel${idx}`, inner));
    body.push(...drawFrame(panel, xs, ys, input.title, xLabelFor(table), "a"));
  });
  return svgDocument(width, height, body);
}

function xLabelFor(table: Table): string {
  return table.meta["sweep_param"] === "delta" ? "delta" : "q";
}

function autoRealRange(series: LevelSeries): [number, number] {
  let lo = Infinity;
  let hi = -Infinity;
  for (const values of series.levels.values()) {
    for (const v of values) {
      if (isReal(v.re, v.im)) {
        lo = Math.min(lo, v.re);
        hi = Math.max(hi, v.re);
      }
    }
  }
  if (!(hi > lo)) {
    lo = 0;
    hi = 1;
  }
  const pad = 0.06 * (hi - lo);
  return [lo - pad, hi + pad];
}

function renderEnergySurface(spec: FigureSpec, load: TableLoader): string {
  const table = load(asString(spec.inputs["surface"], "surface"));
  requireColumns(table, SWEEP_COLUMNS, "surface");
  const qs = numericColumn(table, "q");
  const ds = numericColumn(table, "delta");
  const levels = numericColumn(table, "level");
  const res = numericColumn(table, "re");
  const ims = numericColumn(table, "im");
  const qGrid = [...new Set(qs)].sort((a, b) => a - b);
  const dGrid = [...new Set(ds)].sort((a, b) => a - b);
  const labelSet = [...new Set(levels)].sort((a, b) => a - b);
  const value = new Map<string, { re: number; im: number }>();
  for (let i = 0; i < qs.length; i++) {
    value.set(`${qs[i]}|${ds[i]}|${levels[i]}`, { re: res[i], im: ims[i] });
  }
  let reLo = Infinity;
  let reHi = -Infinity;
  for (let i = 0; i < res.length; i++) {
    if (isReal(res[i], ims[i])) {
      reLo = Math.min(reLo, res[i]);
      reHi = Math.max(reHi, res[i]);
    }
  }
  if (!(reHi > reLo)) throw new SchemaError("surface has no real sheet to draw");

  const width = 640;
  const height = 480;
  const norm = (v: number, lo: number, hi: number) => (v - lo) / (hi - lo);
  const project = (q: number, d: number, re: number): [number, number] => {
    const u = norm(q, qGrid[0], qGrid[qGrid.length - 1]);
    const v = norm(d, dGrid[0], dGrid[dGrid.length - 1]);
    const w = norm(re, reLo, reHi);
    const x = 90 + ((u - v + 1) / 2) * 460;
    const y = 420 - w * 250 - ((u + v) / 2) * 110;
    return [x, y];
  };

  const body: string[] = [];
  labelSet.forEach((label, li) => {
    const stroke = PALETTE[li % PALETTE.length];
    const lineOf = (points: Array<[number, number, number] | null>) => {
      let current: Array<[number, number]> = [];
      const out: string[] = [];
      for (const p of points) {
        if (p === null) {
          if (current.length > 1) out.push(polyline(current, { stroke, "stroke-width": "1" }));
          current = [];
        } else {
          current.push(project(p[0], p[1], p[2]));
        }
      }
      if (current.length > 1) out.push(polyline(current, { stroke, "stroke-width": "1" }));
      return out;
    };
    for (const d of dGrid) {
      body.push(
        ...lineOf(
          qGrid.map((q) => {
            const cell = value.get(`${q}|${d}|${label}`);
            return cell && isReal(cell.re, cell.im) ? [q, d, cell.re] : null;
          }),
        ),
      );
    }
    for (const q of qGrid) {
      body.push(
        ...lineOf(
          dGrid.map((d) => {
            const cell = value.get(`${q}|${d}|${label}`);
            return cell && isReal(cell.re, cell.im) ? [q, d, cell.re] : null;
          }),
        ),
      );
    }
    body.push(textEl(560, 40 + 14 * li, `level ${label}`, "end"));
    body.push(polyline([[565, 36 + 14 * li], [590, 36 + 14 * li]], { stroke, "stroke-width": "2" }));
  });
  body.push(textEl(150, 452, "q axis toward lower right"));
  body.push(textEl(480, 452, "delta axis toward lower left"));
  return svgDocument(width, height, body);
}

interface TracePoints {
  delta: number[];
  pos: Array<number | null>;
  neg: Array<number | null>;
  meta: Record<string, string>;
}

function tracePoints(table: Table, context: string): TracePoints {
  requireColumns(table, TRACE_COLUMNS, context);
  const toNullable = (cells: Cell[], name: string) =>
    cells.map((v, i) => {
      if (v === null) return null;
      if (typeof v !== "number") {
        throw new SchemaError(`${context}: column ${name} row ${i} is not numeric`);
      }
      return v;
    });
  return {
    delta: numericColumn(table, "delta"),
    pos: toNullable(column(table, "q_crit_pos"), "q_crit_pos"),
    neg: toNullable(column(table, "q_crit_neg"), "q_crit_neg"),
    meta: table.meta,
  };
}

function renderPhaseDiagram(spec: FigureSpec, load: TableLoader): string {
  const trace = tracePoints(load(asString(spec.inputs["trace"], "trace")), "trace");
  const dMax = spec.axes?.["delta"]?.[1] ?? trace.delta[trace.delta.length - 1];
  const qAxis = spec.axes?.["q"] ?? [-3, 8];
  const width = 560;
  const height = 440;
  const panel: Panel = { x0: 70, y0: 30, w: 430, h: 340 };
  const xs = linearScale([-dMax, dMax], [panel.x0, panel.x0 + panel.w]);
  const ys = linearScale(qAxis, [panel.y0 + panel.h, panel.y0]);

  // mirrored polygon of the unbroken region connected to q = 0; unbounded
  // samples are clipped at the axis cap
  const cap = (v: number | null, side: 1 | -1) => (v === null ? qAxis[side === 1 ? 1 : 0] : v);
  const mirrored: Array<{ d: number; top: number; bottom: number }> = [];
  for (let i = trace.delta.length - 1; i >= 0; i--) {
    mirrored.push({ d: -trace.delta[i], top: cap(trace.pos[i], 1), bottom: cap(trace.neg[i], -1) });
  }
  for (let i = 0; i < trace.delta.length; i++) {
    mirrored.push({ d: trace.delta[i], top: cap(trace.pos[i], 1), bottom: cap(trace.neg[i], -1) });
  }
  const ring = [
    ...mirrored.map((p) => [xs.map(p.d), ys.map(p.top)] as [number, number]),
    ...mirrored.slice().reverse().map((p) => [xs.map(p.d), ys.map(p.bottom)] as [number, number]),
  ];
  const inner: string[] = [
    el("polygon", {
      points: ring.map(([x, y]) => `${fmt(x)},${fmt(y)}`).join(" "),
      fill: "#9ec7e8",
      "fill-opacity": "0.8",
      stroke: "none",
    }),
  ];
  for (const side of ["pos", "neg"] as const) {
    let run: Array<[number, number]> = [];
    const flush = () => {
      if (run.length > 1) {
        inner.push(polyline(run, { stroke: "#1f3d7a", "stroke-width": "1.8" }));
      }
      run = [];
    };
    for (const p of mirrored) {
      const raw = side === "pos" ? p.top : p.bottom;
      const capped = side === "pos" ? raw >= qAxis[1] : raw <= qAxis[0];
      if (capped) {
        flush();
      } else {
        run.push([xs.map(p.d), ys.map(raw)]);
      }
    }
    flush();
  }
  inner.push(polyline([[xs.map(-dMax), ys.map(0)], [xs.map(dMax), ys.map(0)]], { stroke: "#999999", "stroke-width": "0.8", "stroke-dasharray": "4,3" }));

  const body = [
    ...clippedGroup(panel, "phase", inner),
    ...drawFrame(panel, xs, ys, `unbroken region, j = ${trace.meta["j"] ?? "?"}`, "delta", "q"),
  ];
  return svgDocument(width, height, body);
}

const MARKERS = ["square", "circle", "triangle", "diamond"] as const;

function marker(kind: (typeof MARKERS)[number], x: number, y: number, color: string): string {
  const r = 3.2;
  switch (kind) {
    case "square":
      return el("rect", { x: x - r, y: y - r, width: 2 * r, height: 2 * r, fill: color, stroke: "none" });
    case "circle":
      return el("circle", { cx: x, cy: y, r, fill: color, stroke: "none" });
    case "triangle":
      return el("polygon", {
        points: `${fmt(x)},${fmt(y - r)} ${fmt(x - r)},${fmt(y + r)} ${fmt(x + r)},${fmt(y + r)}`,
        fill: color,
        stroke: "none",
      });
    case "diamond":
      return el("polygon", {
        points: `${fmt(x)},${fmt(y - r)} ${fmt(x - r)},${fmt(y)} ${fmt(x)},${fmt(y + r)} ${fmt(x + r)},${fmt(y)}`,
        fill: color,
        stroke: "none",
      });
  }
}

function renderExceptionalLines(spec: FigureSpec, load: TableLoader): string {
  const paths = asStringArray(spec.inputs["traces"], "traces");
  const traces = paths.map((p) => tracePoints(load(p), p));
  const width = 560;
  const height = 640;
  const panels: Array<{ panel: Panel; side: "pos" | "neg"; title: string; domain: [number, number] }> = [
    {
      panel: { x0: 70, y0: 30, w: 430, h: 250 },
      side: "pos",
      title: "breaking boundary, q > 0",
      domain: spec.axes?.["qPos"] ?? [0, 6],
    },
    {
      panel: { x0: 70, y0: 350, w: 430, h: 250 },
      side: "neg",
      title: "breaking boundary, q < 0",
      domain: spec.axes?.["qNeg"] ?? [-4, 0],
    },
  ];
  const dDomain = spec.axes?.["delta"] ?? [traces[0].delta[0], traces[0].delta[traces[0].delta.length - 1]];
  const body: string[] = [];
  panels.forEach(({ panel, side, title, domain }, pi) => {
    const xs = linearScale(dDomain, [panel.x0, panel.x0 + panel.w]);
    const ys = linearScale(domain, [panel.y0 + panel.h, panel.y0]);
    const inner: string[] = [];
    traces.forEach((trace, ti) => {
      const color = PALETTE[ti % PALETTE.length];
      const values = side === "pos" ? trace.pos : trace.neg;
      let run: Array<[number, number]> = [];
      const flush = () => {
        if (run.length > 1) inner.push(polyline(run, { stroke: color, "stroke-width": "1.4" }));
        run = [];
      };
      for (let i = 0; i < trace.delta.length; i++) {
        const v = values[i];
        if (v === null) {
          flush();
          continue;
        }
        const px = xs.map(trace.delta[i]);
        const py = ys.map(v);
        run.push([px, py]);
        inner.push(marker(MARKERS[ti % MARKERS.length], px, py, color));
      }
      flush();
      if (pi === 0) {
        const lx = panel.x0 + panel.w - 80;
        const ly = panel.y0 + 16 + 14 * ti;
        inner.push(marker(MARKERS[ti % MARKERS.length], lx, ly - 3, color));
        inner.push(textEl(lx + 8, ly, `j = ${trace.meta["j"] ?? ti + 1}`, "start"));
      }
    });
    body.push(...clippedGroup(panel, `exc${pi}`, inner));
    body.push(...drawFrame(panel, xs, ys, title, "delta", "q*"));
  });
  return svgDocument(width, height, body);
}

function renderPowerLawFit(spec: FigureSpec, load: TableLoader): string {
  const tracePaths = asStringArray(spec.inputs["traces"], "traces");
  const fitPaths = asStringArray(spec.inputs["fits"], "fits");
  const traces = tracePaths.map((p) => tracePoints(load(p), p));
  const fits = fitPaths.map((p) => {
    const t = load(p);
    requireColumns(t, FIT_COLUMNS, p);
    if (t.rows.length !== 1) throw new SchemaError(`${p}: expected exactly one fit row`);
    return {
      j: String(t.rows[0][0]),
      a: t.rows[0][2] as number,
      alpha: t.rows[0][3] as number,
      lo: t.rows[0][5] as number,
      hi: t.rows[0][6] as number,
    };
  });

  const width = 560;
  const height = 440;
  const panel: Panel = { x0: 80, y0: 30, w: 420, h: 340 };
  const dDomain = spec.axes?.["delta"] ?? [0.3, 2.5];
  const qDomain = spec.axes?.["q"] ?? [0.05, 20];
  const xs = logScale(dDomain, [panel.x0, panel.x0 + panel.w]);
  const ys = logScale(qDomain, [panel.y0 + panel.h, panel.y0]);
  const inner: string[] = [];
  fits.forEach((fit, fi) => {
    const color = PALETTE[fi % PALETTE.length];
    const points: Array<[number, number]> = [];
    for (let i = 0; i <= 60; i++) {
      const d = fit.lo * Math.pow(fit.hi / fit.lo, i / 60);
      points.push([xs.map(d), ys.map(fit.a * Math.pow(d, -fit.alpha))]);
    }
    inner.push(polyline(points, { stroke: color, "stroke-width": "1.2" }));
  });
  traces.forEach((trace, ti) => {
    const color = PALETTE[ti % PALETTE.length];
    for (let i = 0; i < trace.delta.length; i++) {
      const v = trace.pos[i];
      if (v === null || v <= 0) continue;
      if (trace.delta[i] < dDomain[0] || trace.delta[i] > dDomain[1]) continue;
      inner.push(marker(MARKERS[ti % MARKERS.length], xs.map(trace.delta[i]), ys.map(v), color));
    }
    inner.push(marker(MARKERS[ti % MARKERS.length], panel.x0 + panel.w - 88, panel.y0 + 13 + 14 * ti, color));
    inner.push(textEl(panel.x0 + panel.w - 80, panel.y0 + 16 + 14 * ti, `j = ${trace.meta["j"] ?? ti + 1}`, "start"));
  });
  const body = [
    ...clippedGroup(panel, "fit", inner),
    ...drawFrame(panel, xs, ys, "power-law tails of the breaking boundary", "delta (log)", "q* (log)"),
  ];
  return svgDocument(width, height, body);
}

export function renderFigure(spec: FigureSpec, load: TableLoader): string {
  switch (spec.figure) {
    case "energy-levels":
      return renderLevelPanels(spec, load, 3, true);
    case "levels-j2":
      return renderLevelPanels(spec, load, 2, false);
    case "levels-j2-jump":
    case "levels-j3":
      return renderLevelPanels(spec, load, 2, false);
    case "energy-surface":
      return renderEnergySurface(spec, load);
    case "phase-diagram":
      return renderPhaseDiagram(spec, load);
    case "exceptional-lines":
      return renderExceptionalLines(spec, load);
    case "power-law-fit":
      return renderPowerLawFit(spec, load);
    default:
      throw new SchemaError(`unknown figure id: ${(spec as { figure: string }).figure}`);
  }
}
