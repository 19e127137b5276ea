"""Command-line front end emitting deterministic CSV/JSON artifacts.

Commands: spectrum (one parameter point), sweep (1-D parameter sweep with
branch tracking), surface (2-D grid of spectra), trace (exceptional line on
both q sides), fit (power-law fit of a traced line read back from CSV).

Flags may also be given in a flat key = value config file via --config;
explicit flags override the file. Output is written atomically and embeds
the fully resolved configuration as '# key = value' header comments. Exit
codes: 0 success, 2 invalid configuration, 3 numerical failure, 4 I/O
failure. PTMATHIEU_WORKERS (optional) parallelizes surface and trace grid
points; output bytes are identical regardless of worker count.
"""

import argparse
import json
import os
import sys
import tempfile
from concurrent.futures import ProcessPoolExecutor

import numpy as np

from .eig import ConvergenceError, PairingError, converged_spectrum
from .fit import power_law_fit
from .model import ModelParams
from .phase import Side, trace_exceptional_line
from .sweep import sweep_levels

WORKERS_ENV = "PTMATHIEU_WORKERS"

_DEFAULTS = {
    "format": "csv",
    "k": 6,
    "tol": 1e-9,
    "tol_im": 1e-7,
    "tol_q": 1e-4,
    "q_max": 20.0,
    "scan_step": 0.02,
    "jump_threshold": 0.25,
    "j": 1,
    "bc": "neumann",
    "side": "positive",
    "delta_lo": 2.0,
    "delta_hi": 10.0,
}

_SCHEMAS = {
    "spectrum": ("level", "re", "im"),
    "sweep": ("q", "delta", "level", "re", "im"),
    "surface": ("q", "delta", "level", "re", "im"),
    "trace": ("delta", "q_crit_pos", "q_crit_neg", "jump_flag"),
    "fit": ("j", "bc", "A", "alpha", "residual_rms", "delta_lo", "delta_hi"),
}


class ConfigError(ValueError):
    pass


def _fmt(value):
    if value is None:
        return ""
    if isinstance(value, (bool, np.bool_)):
        return str(int(value))
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return "%.12g" % value
    return str(value)


def _json_value(value):
    if value is None or isinstance(value, (str, int)):
        return value
    return float("%.12g" % value)


def parse_grid(spec, name="grid"):
    """Parse 'start:stop:step' (inclusive endpoints) or an ascending comma list."""
    spec = str(spec).strip()
    try:
        if ":" in spec:
            parts = spec.split(":")
            if len(parts) != 3:
                raise ValueError("expected start:stop:step")
            start, stop, step = (float(p) for p in parts)
            if step <= 0 or stop < start:
                raise ValueError("need step > 0 and stop >= start")
            count = int(np.floor((stop - start) / step + 1e-9)) + 1
            return [start + i * step for i in range(count)]
        values = [float(p) for p in spec.split(",") if p.strip() != ""]
        if not values:
            raise ValueError("no values")
        if any(b <= a for a, b in zip(values, values[1:])):
            raise ValueError("values must be strictly ascending")
        return values
    except ValueError as exc:
        raise ConfigError(f"invalid {name} '{spec}': {exc}") from exc


def _read_config_file(path):
    values = {}
    try:
        with open(path, encoding="utf-8") as fh:
            for lineno, raw in enumerate(fh, 1):
                line = raw.strip()
                if not line or line.startswith("#"):
                    continue
                if "=" not in line:
                    raise ConfigError(f"{path}:{lineno}: expected 'key = value', got '{line}'")
                key, _, value = line.partition("=")
                values[key.strip().replace("-", "_")] = value.strip()
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc}") from exc
    return values


def _resolve(args, required, optional=None, defaults_override=None):
    """Merge defaults < config file < explicit flags; cast every value."""
    optional = optional or {}
    defaults = {**_DEFAULTS, **(defaults_override or {})}
    file_values = _read_config_file(args.config) if getattr(args, "config", None) else {}
    unknown = set(file_values) - set(required) - set(optional)
    if unknown:
        raise ConfigError(f"unknown config keys: {sorted(unknown)}")
    resolved = {}
    for key, caster in {**required, **optional}.items():
        value = getattr(args, key, None)
        if value is None and key in file_values:
            value = file_values[key]
        if value is None and key not in optional:
            value = defaults.get(key)
        if value is None:
            if key in optional:
                continue
            raise ConfigError(f"missing required option --{key.replace('_', '-')}")
        try:
            resolved[key] = caster(value)
        except (TypeError, ValueError) as exc:
            raise ConfigError(f"invalid value for {key}: {value!r} ({exc})") from exc
    return resolved


_COMMON = {"format": str, "tol_im": float}


def _check_config(cfg):
    for key in ("tol", "tol_im", "tol_q"):
        if key in cfg and not cfg[key] > 0:
            raise ConfigError(f"{key} must be positive, got {cfg[key]}")
    if "k" in cfg and cfg["k"] < 1:
        raise ConfigError(f"k must be >= 1, got {cfg['k']}")
    for key in ("q_max", "scan_step", "jump_threshold"):
        if key in cfg and not cfg[key] > 0:
            raise ConfigError(f"{key} must be positive, got {cfg[key]}")
    if cfg.get("format") not in (None, "csv", "json"):
        raise ConfigError(f"format must be csv or json, got {cfg['format']}")


def _header_lines(command, cfg):
    lines = [f"# ptmathieu {command}"]
    for key in sorted(cfg):
        lines.append(f"# {key} = {_fmt(cfg[key])}")
    return lines


def _write_output(path, command, cfg, columns, rows):
    if cfg["format"] == "csv":
        lines = _header_lines(command, cfg)
        lines.append(",".join(columns))
        for row in rows:
            lines.append(",".join(_fmt(v) for v in row))
        text = "\n".join(lines) + "\n"
    else:
        doc = {
            "command": command,
            "config": {k: _json_value(v) for k, v in cfg.items()},
            "columns": list(columns),
            "rows": [[_json_value(v) for v in row] for row in rows],
        }
        text = json.dumps(doc, sort_keys=True, indent=2) + "\n"
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp_path = tempfile.mkstemp(dir=directory, prefix=".ptmathieu-")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp_path, path)
    except BaseException:
        if os.path.exists(tmp_path):
            os.unlink(tmp_path)
        raise


def _workers():
    raw = os.environ.get(WORKERS_ENV)
    if raw is None:
        return 1
    try:
        workers = int(raw)
    except ValueError as exc:
        raise ConfigError(f"{WORKERS_ENV} must be an integer, got {raw!r}") from exc
    if workers < 1:
        raise ConfigError(f"{WORKERS_ENV} must be >= 1, got {workers}")
    return workers


def _map_tasks(fn, tasks):
    workers = _workers()
    if workers == 1 or len(tasks) < 2:
        return [fn(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, tasks))


def _spectrum_rows(task):
    q, delta, j, bc, k, tol, tol_im = task
    spec = converged_spectrum(
        ModelParams(q=q, delta=delta, j=j, bc=bc), k=k, tol=tol, tol_im=tol_im
    )
    return [(level, v.real, v.imag) for level, v in enumerate(spec.lowest(k))]


def _critical_q_task(task):
    from .phase import critical_q

    delta, j, bc, k, q_max, tol_q, scan_step, side, tol_im = task
    return critical_q(
        delta, j=j, bc=bc, k=k, q_max=q_max, tol_q=tol_q,
        side=side, scan_step=scan_step, tol_im=tol_im,
    )


def _cmd_spectrum(args):
    cfg = _resolve(args, {
        "q": float, "delta": float, "j": int, "bc": str, "k": int, "tol": float,
        **_COMMON,
    })
    _check_config(cfg)
    rows = _spectrum_rows(
        (cfg["q"], cfg["delta"], cfg["j"], cfg["bc"], cfg["k"], cfg["tol"], cfg["tol_im"])
    )
    return cfg, _SCHEMAS["spectrum"], rows


def _cmd_sweep(args):
    cfg = _resolve(
        args,
        {"sweep_param": str, "grid": str, "j": int, "bc": str, "k": int, "tol": float, **_COMMON},
        optional={"q": float, "delta": float},
        # grids cross the neighborhoods of exceptional points, where level
        # conditioning caps attainable truncation convergence at ~1e-8
        defaults_override={"tol": 1e-7},
    )
    _check_config(cfg)
    if cfg["sweep_param"] not in ("q", "delta"):
        raise ConfigError(f"sweep-param must be q or delta, got {cfg['sweep_param']}")
    fixed_key = "delta" if cfg["sweep_param"] == "q" else "q"
    if fixed_key not in cfg:
        raise ConfigError(f"missing required option --{fixed_key} (the non-swept parameter)")
    cfg.pop(cfg["sweep_param"], None)
    grid = parse_grid(cfg["grid"])
    base = ModelParams(
        q=cfg.get("q", 0.0), delta=cfg.get("delta", 0.0), j=cfg["j"], bc=cfg["bc"]
    )
    curves = sweep_levels(
        base, cfg["sweep_param"], grid, k=cfg["k"], tol=cfg["tol"], tol_im=cfg["tol_im"]
    )
    rows = []
    for i, t in enumerate(grid):
        q = t if cfg["sweep_param"] == "q" else cfg["q"]
        delta = t if cfg["sweep_param"] == "delta" else cfg["delta"]
        for curve in curves:
            v = curve.values[i]
            rows.append((q, delta, curve.label, v.real, v.imag))
    return cfg, _SCHEMAS["sweep"], rows


def _cmd_surface(args):
    cfg = _resolve(args, {
        "q_grid": str, "delta_grid": str, "j": int, "bc": str, "k": int, "tol": float,
        **_COMMON,
    }, defaults_override={"tol": 1e-7})
    _check_config(cfg)
    q_grid = parse_grid(cfg["q_grid"], "q-grid")
    d_grid = parse_grid(cfg["delta_grid"], "delta-grid")
    tasks = [
        (q, d, cfg["j"], cfg["bc"], cfg["k"], cfg["tol"], cfg["tol_im"])
        for q in q_grid
        for d in d_grid
    ]
    results = _map_tasks(_spectrum_rows, tasks)
    rows = []
    for (q, d, *_), levels in zip(tasks, results):
        for level, re, im in levels:
            rows.append((q, d, level, re, im))
    return cfg, _SCHEMAS["surface"], rows


def _cmd_trace(args):
    cfg = _resolve(args, {
        "delta_grid": str, "j": int, "bc": str, "k": int, "q_max": float,
        "tol_q": float, "scan_step": float, "jump_threshold": float,
        **_COMMON,
    })
    _check_config(cfg)
    grid = parse_grid(cfg["delta_grid"], "delta-grid")
    if grid[0] < 0:
        raise ConfigError("delta-grid must be nonnegative (the line is symmetric in delta)")
    sides = (Side.POSITIVE, Side.NEGATIVE)
    values = {}
    for side in sides:
        tasks = [
            (d, cfg["j"], cfg["bc"], cfg["k"], cfg["q_max"], cfg["tol_q"],
             cfg["scan_step"], side, cfg["tol_im"])
            for d in grid
        ]
        values[side] = _map_tasks(_critical_q_task, tasks)
    flagged = set()
    for side in sides:
        qs = values[side]
        for i in range(len(grid) - 1):
            q0, q1 = qs[i], qs[i + 1]
            if q0 is None or q1 is None:
                continue
            if abs(q1 - q0) > cfg["jump_threshold"] * max(1.0, abs(q0)):
                flagged.add(i + 1)
    rows = [
        (d, values[Side.POSITIVE][i], values[Side.NEGATIVE][i], 1 if i in flagged else 0)
        for i, d in enumerate(grid)
    ]
    return cfg, _SCHEMAS["trace"], rows


def _read_trace_csv(path):
    meta = {}
    columns = None
    rows = []
    with open(path, encoding="utf-8") as fh:
        for raw in fh:
            line = raw.strip()
            if not line:
                continue
            if line.startswith("#"):
                body = line.lstrip("#").strip()
                if "=" in body:
                    key, _, value = body.partition("=")
                    meta[key.strip()] = value.strip()
                continue
            if columns is None:
                columns = line.split(",")
                continue
            rows.append(line.split(","))
    if columns is None:
        raise ConfigError(f"{path} has no column header")
    return meta, columns, rows


def _cmd_fit(args):
    cfg = _resolve(
        args,
        {"input": str, "delta_lo": float, "delta_hi": float, "side": str, **_COMMON},
        optional={"j": int, "bc": str},
    )
    _check_config(cfg)
    if cfg["side"] not in ("positive", "negative"):
        raise ConfigError(f"side must be positive or negative, got {cfg['side']}")
    try:
        meta, columns, raw_rows = _read_trace_csv(cfg["input"])
    except OSError as exc:
        raise ConfigError(f"cannot read input {cfg['input']}: {exc}") from exc
    if "j" not in cfg:
        cfg["j"] = int(meta.get("j", _DEFAULTS["j"]))
    if "bc" not in cfg:
        cfg["bc"] = meta.get("bc", _DEFAULTS["bc"])
    column = "q_crit_pos" if cfg["side"] == "positive" else "q_crit_neg"
    for needed in ("delta", column):
        if needed not in columns:
            raise ConfigError(f"{cfg['input']} is missing column {needed} (have {columns})")
    i_delta = columns.index("delta")
    i_q = columns.index(column)
    points = []
    for row in raw_rows:
        d = float(row[i_delta])
        if row[i_q] != "":
            points.append((d, abs(float(row[i_q]))))
    result = power_law_fit(points, (cfg["delta_lo"], cfg["delta_hi"]))
    rows = [(
        cfg["j"], cfg["bc"], result.a_coef, result.alpha, result.residual_rms,
        result.delta_range[0], result.delta_range[1],
    )]
    return cfg, _SCHEMAS["fit"], rows


_COMMANDS = {
    "spectrum": _cmd_spectrum,
    "sweep": _cmd_sweep,
    "surface": _cmd_surface,
    "trace": _cmd_trace,
    "fit": _cmd_fit,
}


def build_parser():
    parser = argparse.ArgumentParser(
        prog="ptmathieu",
        description="Deformed Mathieu spectra, exceptional lines and power-law fits.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--output", "-o", required=True, help="output file path")
        p.add_argument("--format", choices=("csv", "json"), default=None)
        p.add_argument("--config", default=None,
                       help="flat key = value config file; flags override it")
        p.add_argument("--tol-im", dest="tol_im", type=float, default=None,
                       help="realness tolerance, relative to max(1, |Re|)")

    p = sub.add_parser("spectrum", help="k lowest levels at one parameter point")
    p.add_argument("--q", type=float, default=None)
    p.add_argument("--delta", type=float, default=None)
    p.add_argument("--j", type=int, default=None)
    p.add_argument("--bc", choices=("neumann", "dirichlet"), default=None)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--tol", type=float, default=None, help="level convergence tolerance")
    add_common(p)

    p = sub.add_parser("sweep", help="branch-tracked levels along a 1-D parameter grid")
    p.add_argument("--sweep-param", dest="sweep_param", choices=("q", "delta"), default=None)
    p.add_argument("--grid", default=None, help="start:stop:step or comma list")
    p.add_argument("--q", type=float, default=None, help="fixed q when sweeping delta")
    p.add_argument("--delta", type=float, default=None, help="fixed delta when sweeping q")
    p.add_argument("--j", type=int, default=None)
    p.add_argument("--bc", choices=("neumann", "dirichlet"), default=None)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--tol", type=float, default=None)
    add_common(p)

    p = sub.add_parser("surface", help="k lowest levels over a 2-D (q, delta) grid")
    p.add_argument("--q-grid", dest="q_grid", default=None)
    p.add_argument("--delta-grid", dest="delta_grid", default=None)
    p.add_argument("--j", type=int, default=None)
    p.add_argument("--bc", choices=("neumann", "dirichlet"), default=None)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--tol", type=float, default=None)
    add_common(p)

    p = sub.add_parser("trace", help="exceptional line q*(delta) on both q sides")
    p.add_argument("--delta-grid", dest="delta_grid", default=None)
    p.add_argument("--j", type=int, default=None)
    p.add_argument("--bc", choices=("neumann", "dirichlet"), default=None)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--q-max", dest="q_max", type=float, default=None)
    p.add_argument("--tol-q", dest="tol_q", type=float, default=None)
    p.add_argument("--scan-step", dest="scan_step", type=float, default=None)
    p.add_argument("--jump-threshold", dest="jump_threshold", type=float, default=None)
    add_common(p)

    p = sub.add_parser("fit", help="power-law fit of a traced line (reads a trace CSV)")
    p.add_argument("--input", default=None, help="trace CSV produced by the trace command")
    p.add_argument("--delta-lo", dest="delta_lo", type=float, default=None)
    p.add_argument("--delta-hi", dest="delta_hi", type=float, default=None)
    p.add_argument("--side", choices=("positive", "negative"), default=None)
    p.add_argument("--j", type=int, default=None, help="label override; default from the input header")
    p.add_argument("--bc", choices=("neumann", "dirichlet"), default=None,
                   help="label override; default from the input header")
    add_common(p)

    return parser


def _error_record(kind, exc):
    return json.dumps({"error": {"kind": kind, "message": str(exc)}}, sort_keys=True)


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg, columns, rows = _COMMANDS[args.command](args)
        _write_output(args.output, args.command, cfg, columns, rows)
    except (ConfigError, ValueError) as exc:
        print(_error_record("config", exc), file=sys.stderr)
        return 2
    except (ConvergenceError, PairingError, np.linalg.LinAlgError, FloatingPointError) as exc:
        print(_error_record("numerical", exc), file=sys.stderr)
        return 3
    except OSError as exc:
        print(_error_record("io", exc), file=sys.stderr)
        return 4
    print(f"{args.command}: wrote {len(rows)} rows to {args.output}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
