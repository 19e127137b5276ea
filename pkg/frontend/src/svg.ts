/** Deterministic SVG assembly: fixed fonts, fixed precision, no ambient state. */

export function fmt(v: number): string {
  const s = v.toFixed(2);
  return s === "-0.00" ? "0.00" : s;
}

export function el(
  tag: string,
  attrs: Record<string, string | number>,
  children: string[] = [],
): string {
  const parts = Object.entries(attrs).map(
    ([k, v]) => `${k}="${typeof v === "number" ? fmt(v) : v}"`,
  );
  const head = `<${tag}${parts.length ? " " + parts.join(" ") : ""}`;
  if (children.length === 0) return `${head}/>`;
  return `${head}>${children.join("")}</${tag}>`;
}

export function textEl(x: number, y: number, content: string, anchor = "middle"): string {
  return el(
    "text",
    {
      x,
      y,
      "text-anchor": anchor,
      "font-family": "monospace",
      "font-size": "10",
      fill: "#333333",
    },
    [escapeText(content)],
  );
}

export function escapeText(s: string): string {
  return s.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
}

export function polyline(points: Array<[number, number]>, attrs: Record<string, string | number>): string {
  const joined = points.map(([x, y]) => `${fmt(x)},${fmt(y)}`).join(" ");
  return el("polyline", { points: joined, fill: "none", ...attrs });
}

export function svgDocument(width: number, height: number, body: string[]): string {
  return [
    `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" height="${height}" viewBox="0 0 ${width} ${height}">`,
    el("rect", { x: 0, y: 0, width, height, fill: "#ffffff" }),
    ...body,
    "</svg>",
    "",
  ].join("\n");
}
