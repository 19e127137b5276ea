/** Reader for the ptmathieu CLI's CSV artifacts. */

export type Cell = number | string | null;

export interface Table {
  meta: Record<string, string>;
  columns: string[];
  rows: Cell[][];
}

export class SchemaError extends Error {}

const NUMERIC = /^[+-]?(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?$/;

function parseCell(raw: string): Cell {
  if (raw === "") return null;
  if (NUMERIC.test(raw)) return Number(raw);
  return raw;
}

export function parseCsv(text: string): Table {
  const meta: Record<string, string> = {};
  let columns: string[] | null = null;
  const rows: Cell[][] = [];
  for (const rawLine of text.split("\n")) {
    const line = rawLine.trim();
    if (line === "") continue;
    if (line.startsWith("#")) {
      const body = line.replace(/^#+\s*/, "");
      const eq = body.indexOf("=");
      if (eq > 0) {
        meta[body.slice(0, eq).trim()] = body.slice(eq + 1).trim();
      }
      continue;
    }
    if (columns === null) {
      columns = line.split(",");
      continue;
    }
    const cells = line.split(",").map(parseCell);
    if (cells.length !== columns.length) {
      throw new SchemaError(
        `row has ${cells.length} cells but the header declares ${columns.length} columns`,
      );
    }
    rows.push(cells);
  }
  if (columns === null) {
    throw new SchemaError("no column header found");
  }
  return { meta, columns, rows };
}

/** Assert the exact column layout contracted by the producing command. */
export function requireColumns(table: Table, expected: string[], context: string): void {
  const got = table.columns.join(",");
  const want = expected.join(",");
  if (got !== want) {
    throw new SchemaError(`${context}: expected columns "${want}", got "${got}"`);
  }
}

export function column(table: Table, name: string): Cell[] {
  const idx = table.columns.indexOf(name);
  if (idx < 0) {
    throw new SchemaError(`missing column "${name}" (have ${table.columns.join(",")})`);
  }
  return table.rows.map((r) => r[idx]);
}

export function numericColumn(table: Table, name: string): number[] {
  return column(table, name).map((v, i) => {
    if (typeof v !== "number") {
      throw new SchemaError(`column "${name}" row ${i} is not numeric: ${String(v)}`);
    }
    return v;
  });
}
