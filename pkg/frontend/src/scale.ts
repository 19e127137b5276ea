/** Minimal linear/log axis scales with tick generation. */

export interface Scale {
  map(value: number): number;
  ticks(): number[];
  domain: [number, number];
  range: [number, number];
}

function niceStep(span: number, target: number): number {
  const raw = span / target;
  const mag = Math.pow(10, Math.floor(Math.log10(raw)));
  for (const m of [1, 2, 5, 10]) {
    if (m * mag >= raw) return m * mag;
  }
  return 10 * mag;
}

export function linearScale(domain: [number, number], range: [number, number]): Scale {
  const [d0, d1] = domain;
  const [r0, r1] = range;
  if (!(d1 > d0)) throw new Error(`degenerate domain [${d0}, ${d1}]`);
  const k = (r1 - r0) / (d1 - d0);
  return {
    domain,
    range,
    map: (v) => r0 + (v - d0) * k,
    ticks: () => {
      const step = niceStep(d1 - d0, 6);
      const ticks: number[] = [];
      let t = Math.ceil(d0 / step) * step;
      for (; t <= d1 + step * 1e-9; t += step) {
        ticks.push(Math.abs(t) < step * 1e-9 ? 0 : Number(t.toPrecision(12)));
      }
      return ticks;
    },
  };
}

export function logScale(domain: [number, number], range: [number, number]): Scale {
  const [d0, d1] = domain;
  const [r0, r1] = range;
  if (!(d0 > 0 && d1 > d0)) throw new Error(`log scale needs 0 < lo < hi, got [${d0}, ${d1}]`);
  const l0 = Math.log10(d0);
  const k = (r1 - r0) / (Math.log10(d1) - l0);
  return {
    domain,
    range,
    map: (v) => r0 + (Math.log10(v) - l0) * k,
    ticks: () => {
      const ticks: number[] = [];
      const e0 = Math.floor(Math.log10(d0));
      const e1 = Math.ceil(Math.log10(d1));
      for (let e = e0; e <= e1; e++) {
        for (const m of [1, 2, 5]) {
          const t = m * Math.pow(10, e);
          if (t >= d0 * (1 - 1e-12) && t <= d1 * (1 + 1e-12)) ticks.push(t);
        }
      }
      return ticks;
    },
  };
}
