import { describe, expect, it } from "vitest";

import { linearScale, logScale } from "../src/scale.js";

describe("linearScale", () => {
  it("maps endpoints and midpoints", () => {
    const s = linearScale([0, 10], [100, 200]);
    expect(s.map(0)).toBe(100);
    expect(s.map(10)).toBe(200);
    expect(s.map(5)).toBe(150);
  });

  it("supports inverted ranges for screen-y axes", () => {
    const s = linearScale([0, 1], [300, 0]);
    expect(s.map(0)).toBe(300);
    expect(s.map(1)).toBe(0);
  });

  it("produces ticks inside the domain", () => {
    const ticks = linearScale([-3, 3], [0, 1]).ticks();
    expect(ticks[0]).toBeGreaterThanOrEqual(-3);
    expect(ticks[ticks.length - 1]).toBeLessThanOrEqual(3);
    expect(ticks).toContain(0);
  });

  it("rejects degenerate domains", () => {
    expect(() => linearScale([1, 1], [0, 1])).toThrow();
  });
});

describe("logScale", () => {
  it("maps decades evenly", () => {
    const s = logScale([0.1, 10], [0, 200]);
    expect(s.map(0.1)).toBeCloseTo(0, 10);
    expect(s.map(1)).toBeCloseTo(100, 10);
    expect(s.map(10)).toBeCloseTo(200, 10);
  });

  it("rejects nonpositive domains", () => {
    expect(() => logScale([0, 1], [0, 1])).toThrow();
    expect(() => logScale([-1, 1], [0, 1])).toThrow();
  });

  it("emits 1-2-5 ticks within the domain", () => {
    const ticks = logScale([0.4, 2.2], [0, 1]).ticks();
    expect(ticks).toEqual([0.5, 1, 2]);
  });
});
