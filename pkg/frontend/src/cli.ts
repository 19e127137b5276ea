/** Figure renderer CLI.
 *
 * Usage:
 *   node dist/cli.js --spec path/to/figure.json
 *   node dist/cli.js --all path/to/specs-dir
 *
 * Input CSV paths inside a spec resolve relative to the spec file; the
 * output SVG path does too. Exit codes: 0 ok, 2 spec/schema error, 4 I/O.
 */

import * as fs from "node:fs";
import * as path from "node:path";

import { SchemaError, Table, parseCsv } from "./csv.js";
import { FigureSpec, renderFigure } from "./figures.js";

const FIGURE_IDS = new Set([
  "energy-levels",
  "energy-surface",
  "phase-diagram",
  "levels-j2",
  "levels-j2-jump",
  "levels-j3",
  "exceptional-lines",
  "power-law-fit",
]);

export function loadSpec(specPath: string): FigureSpec {
  const raw = JSON.parse(fs.readFileSync(specPath, "utf-8")) as Partial<FigureSpec>;
  if (typeof raw.figure !== "string" || !FIGURE_IDS.has(raw.figure)) {
    throw new SchemaError(`spec ${specPath}: unknown or missing figure id ${String(raw.figure)}`);
  }
  if (typeof raw.output !== "string" || raw.output === "") {
    throw new SchemaError(`spec ${specPath}: missing output path`);
  }
  if (typeof raw.inputs !== "object" || raw.inputs === null) {
    throw new SchemaError(`spec ${specPath}: missing inputs`);
  }
  return raw as FigureSpec;
}

export function renderSpecFile(specPath: string): string {
  const spec = loadSpec(specPath);
  const baseDir = path.dirname(specPath);
  const load = (csvPath: string): Table => {
    const resolved = path.resolve(baseDir, csvPath);
    return parseCsv(fs.readFileSync(resolved, "utf-8"));
  };
  const svg = renderFigure(spec, load);
  const outPath = path.resolve(baseDir, spec.output);
  fs.mkdirSync(path.dirname(outPath), { recursive: true });
  fs.writeFileSync(outPath, svg);
  return outPath;
}

export function runCli(argv: string[]): number {
  const specPaths: string[] = [];
  if (argv[0] === "--spec" && argv.length === 2) {
    specPaths.push(argv[1]);
  } else if (argv[0] === "--all" && argv.length === 2) {
    try {
      for (const name of fs.readdirSync(argv[1]).sort()) {
        if (name.endsWith(".json")) specPaths.push(path.join(argv[1], name));
      }
    } catch (err) {
      process.stderr.write(`cannot list spec directory: ${String(err)}\n`);
      return 4;
    }
    if (specPaths.length === 0) {
      process.stderr.write(`no .json specs found in ${argv[1]}\n`);
      return 2;
    }
  } else {
    process.stderr.write("usage: cli --spec <figure.json> | --all <specs-dir>\n");
    return 2;
  }
  for (const specPath of specPaths) {
    try {
      const out = renderSpecFile(specPath);
      process.stdout.write(`rendered ${specPath} -> ${out}\n`);
    } catch (err) {
      if (err instanceof SchemaError || err instanceof SyntaxError) {
        process.stderr.write(`${specPath}: ${err.message}\n`);
        return 2;
      }
      if (err instanceof Error && "code" in err) {
        process.stderr.write(`${specPath}: ${err.message}\n`);
        return 4;
      }
      throw err;
    }
  }
  return 0;
}

const invokedDirectly =
  process.argv[1] !== undefined &&
  import.meta.url === new URL(`file://${path.resolve(process.argv[1])}`).href;
if (invokedDirectly) {
  process.exit(runCli(process.argv.slice(2)));
}
