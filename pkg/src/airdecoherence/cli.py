"""Command-line front end.

    airdecoherence rate    --temp 1e-3 --density 2e10 --radius 4e-7 --dx 1e-5
    airdecoherence compare [--t-min ... --t-max ... --points ...]
    airdecoherence sweep   [--dx 1e-14 1e-8 ...]
    airdecoherence table   [--gamma 0.02]
    airdecoherence path    [--out DIR]
    airdecoherence oracle  --temp 1 --density 1e8 --dx 1e-8
    airdecoherence dawson  0 1 -1

All flags are SI (K, m, m^-3, Pa, s) except ``--mass-amu``. Global options
(``--constants``, ``--format``, ``--precision``, ``--out``) may be given
before or after the subcommand. Exit status: 0 success, 1 usage or
validation error, 2 numerical failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from pathlib import Path

import numpy as np

from . import design, rates
from .constants import AIR_MASS_AMU, load_constants
from .dawson import dawson_eval
from .dynamics import compare_paths
from .errors import DomainError, InfeasibleError, NumericalError
from .oracle import QuadratureSpec, gamma_numeric
from .rates import GasEnvironment, Scatterer, SuperpositionGeometry

EXIT_OK, EXIT_USAGE, EXIT_NUMERICAL = 0, 1, 2

COMPARE_COLUMNS = ["temperature_k", "gamma_exact", "gamma_lwl", "gamma_swl", "gamma_int_min", "gamma_int_tanh", "gamma_mlwl"]
TABLE_COLUMNS = ["gamma_hz", "temperature_k", "delta_x_m", "n_v_per_m3", "pressure_pa"]
PATH_COLUMNS = ["t_over_tau", "delta_x_m", "rate_hz", "gamma_accumulated", "coherence"]
DAWSON_COLUMNS = ["x", "dawson", "branch"]
ORACLE_COLUMNS = ["analytic", "numeric", "rel_error", "subdivisions", "error_estimate"]

COMPARE_DEFAULTS = dict(density=1e8, dx=1e-5, radius=4e-7, t_min=1e-18, t_max=1e-4, points=161)
SWEEP_DEFAULTS = dict(density=1e8, dx=[1e-14, 1e-11, 1e-8, 1e-5], radius=4e-7, t_min=1e-5, t_max=1e3, points=161)
PATH_DEFAULTS = dict(amplitude=1e-8, tau=1.0, temps=[1.0, 1e-2, 1e-4], density=1e8, radius=4e-7, steps=4096)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


# ---------------------------------------------------------------- formatting

def _fmt(value, precision):
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return f"{float(value):.{precision - 1}e}"
    if hasattr(value, "value"):  # enums
        return str(value.value)
    return str(value)


def _json(obj, precision):
    if isinstance(obj, dict):
        return "{" + ", ".join(f"{json.dumps(k)}: {_json(v, precision)}" for k, v in obj.items()) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(_json(v, precision) for v in obj) + "]"
    if isinstance(obj, (float, np.floating, int, np.integer)) and not isinstance(obj, bool):
        return _fmt(obj, precision)
    return json.dumps(_fmt(obj, precision))


def _csv(columns, rows, precision):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for row in rows:
        w.writerow([_fmt(row[c], precision) for c in columns])
    return buf.getvalue()


def _render(columns, rows, fmt, precision, single=False):
    if fmt == "json":
        body = rows[0] if single else rows
        return _json(body, precision) + "\n"
    return _csv(columns, rows, precision)


# ---------------------------------------------------------------- validation

def _finite(name, value, *, positive=False, nonneg=False):
    if not math.isfinite(value):
        raise DomainError(f"{name} must be finite, got {value!r}")
    if positive and value <= 0:
        raise DomainError(f"{name} must be > 0, got {value!r}")
    if nonneg and value < 0:
        raise DomainError(f"{name} must be >= 0, got {value!r}")
    return value


def _environment(args, c, temperature=None):
    temperature = args.temp if temperature is None else temperature
    _finite("--temp", temperature, positive=True)
    _finite("--mass-amu", args.mass_amu, positive=True)
    mass = args.mass_amu * c.amu
    if getattr(args, "pressure", None) is not None:
        _finite("--pressure", args.pressure, nonneg=True)
        return GasEnvironment.from_pressure(temperature, args.pressure, mass, c)
    _finite("--density", args.density, nonneg=True)
    return GasEnvironment(temperature, args.density, mass)


def _temperature_grid(args):
    _finite("--t-min", args.t_min, positive=True)
    _finite("--t-max", args.t_max, positive=True)
    if not args.t_min < args.t_max:
        raise DomainError("--t-min must be smaller than --t-max")
    if args.points < 2:
        raise DomainError("--points must be >= 2")
    return np.logspace(math.log10(args.t_min), math.log10(args.t_max), args.points)


# ---------------------------------------------------------------- commands

def cmd_rate(args, c):
    env = _environment(args, c)
    geom = SuperpositionGeometry(_finite("--dx", args.dx, nonneg=True))
    sc = Scatterer(_finite("--radius", args.radius, positive=True))
    b = rates.breakdown(geom, env, sc, c)
    row = {
        "temperature_k": env.temperature,
        "n_v_per_m3": env.number_density,
        "pressure_pa": env.pressure(c),
        "mass_amu": args.mass_amu,
        "radius_m": sc.radius,
        "delta_x_m": geom.delta_x,
        "lambda_thermal_m": b.lambda_thermal,
        "dawson_argument": b.dawson_argument,
        "regime": b.regime,
        "gamma_exact": b.gamma_exact,
        "gamma_lwl": b.gamma_lwl,
        "gamma_swl": b.gamma_swl,
        "gamma_int_min": b.gamma_int_min,
        "gamma_int_tanh": b.gamma_int_tanh,
        "gamma_mlwl": b.gamma_mlwl,
    }
    return _render(list(row), [row], args.format or "csv", args.precision or 9, single=True)


def cmd_compare(args, c):
    temps = _temperature_grid(args)
    geom = SuperpositionGeometry(_finite("--dx", args.dx, nonneg=True))
    sc = Scatterer(_finite("--radius", args.radius, positive=True))
    rows = []
    for t in temps:
        b = rates.breakdown(geom, _environment(args, c, float(t)), sc, c)
        rows.append({"temperature_k": float(t), **{k: getattr(b, k) for k in COMPARE_COLUMNS[1:]}})
    return _render(COMPARE_COLUMNS, rows, args.format or "csv", args.precision or 9)


def _dx_label(dx):
    return f"gamma_exact_dx_{dx:.6g}"


def cmd_sweep(args, c):
    temps = _temperature_grid(args)
    dxs = [_finite("--dx", d, nonneg=True) for d in args.dx]
    if not dxs:
        raise DomainError("--dx needs at least one value")
    sc = Scatterer(_finite("--radius", args.radius, positive=True))
    columns = ["temperature_k"] + [_dx_label(d) for d in dxs]
    if len(set(columns)) != len(columns):
        raise DomainError("--dx values must be distinct")
    rows = []
    for t in temps:
        env = _environment(args, c, float(t))
        row = {"temperature_k": float(t)}
        for d, col in zip(dxs, columns[1:]):
            row[col] = rates.gamma_exact(SuperpositionGeometry(d), env, sc, c)
        rows.append(row)
    return _render(columns, rows, args.format or "csv", args.precision or 9)


def cmd_table(args, c):
    for name, values in (("--gamma", args.gamma), ("--temp", args.temp), ("--dx", args.dx)):
        for v in values:
            _finite(name, v, positive=True)
    _finite("--mass-amu", args.mass_amu, positive=True)
    table = design.generate_table(
        args.gamma, args.temp, args.dx, Scatterer(_finite("--radius", args.radius, positive=True)), c, args.mass_amu
    )
    rows = [
        dict(zip(TABLE_COLUMNS, (r.gamma_target, r.temperature, r.delta_x, r.number_density, r.pressure)))
        for r in table
    ]
    return _render(TABLE_COLUMNS, rows, args.format or "csv", args.precision or 6)


def cmd_path(args, c):
    _finite("--amplitude", args.amplitude, nonneg=True)
    _finite("--tau", args.tau, positive=True)
    if args.steps < 16:
        raise DomainError("--steps must be >= 16")
    envs = [_environment(args, c, t) for t in args.temp]
    sc = Scatterer(_finite("--radius", args.radius, positive=True))
    kinds = ["sine", "constant"] if args.kind == "both" else [args.kind]
    fmt = args.format or "csv"
    precision = args.precision or 9
    outputs = []  # (name, kind, temperature, rows)
    for comp in compare_paths(args.amplitude, args.tau, envs, sc, c, args.steps):
        for kind in kinds:
            h = getattr(comp, kind)
            rows = [
                dict(zip(PATH_COLUMNS, vals))
                for vals in zip(
                    h.times / args.tau, h.delta_x, h.instantaneous_rate, h.accumulated_exponent, h.coherence
                )
            ]
            name = f"path_{kind}_T{_fmt(comp.temperature, 6)}.{fmt}"
            outputs.append((name, kind, comp.temperature, rows))
    if args.out is not None:
        return {name: _render(PATH_COLUMNS, rows, fmt, precision) for name, _, _, rows in outputs}
    if fmt == "json":
        return _json(
            [{"kind": k, "temperature_k": t, "rows": rows} for _, k, t, rows in outputs], precision
        ) + "\n"
    blocks = []
    for _, kind, temp, rows in outputs:
        blocks.append(f"# kind={kind} temperature_k={_fmt(temp, precision)}\n" + _csv(PATH_COLUMNS, rows, precision))
    return "".join(blocks)


def cmd_oracle(args, c):
    env = _environment(args, c)
    geom = SuperpositionGeometry(_finite("--dx", args.dx, nonneg=True))
    sc = Scatterer(_finite("--radius", args.radius, positive=True))
    spec = QuadratureSpec(
        rel_tol=args.rel_tol, max_subdivisions=args.max_subdivisions, momentum_cutoff_sigmas=args.cutoff
    )
    analytic = rates.gamma_exact(geom, env, sc, c)
    res = gamma_numeric(geom, env, sc, c, spec, full_output=True)
    rel = 0.0 if analytic == res.value else abs(res.value - analytic) / abs(analytic)
    record = {
        "analytic": analytic,
        "numeric": res.value,
        "rel_error": rel,
        "subdivisions": res.subdivisions,
        "error_estimate": res.error,
    }
    text = _render(ORACLE_COLUMNS, [record], args.format or "json", args.precision or 9, single=True)
    status = EXIT_NUMERICAL if rel > spec.rel_tol else EXIT_OK
    return text, status


def cmd_dawson(args, c):
    for x in args.x:
        if not math.isfinite(x):
            raise UsageError(f"dawson: non-finite argument {x!r}")
    rows = []
    for x in args.x:
        ev = dawson_eval(x)
        rows.append({"x": ev.x, "dawson": ev.value, "branch": ev.branch})
    return _render(DAWSON_COLUMNS, rows, args.format or "csv", args.precision or 9)


# ---------------------------------------------------------------- parser

def _global_options(parser, suppress):
    default = argparse.SUPPRESS if suppress else None
    parser.add_argument("--constants", default=default, help="JSON file overriding hbar, k_B, amu")
    parser.add_argument("--format", choices=["csv", "json"], default=default)
    parser.add_argument("--precision", type=int, default=default, help="significant digits (3-17)")
    parser.add_argument("--out", default=default, help="output file (directory for 'path')")


def _point_options(p, *, density_default=None):
    p.add_argument("--temp", type=float, required=True, help="temperature, K")
    g = p.add_mutually_exclusive_group(required=density_default is None)
    g.add_argument("--density", type=float, default=density_default, help="number density, m^-3")
    g.add_argument("--pressure", type=float, help="pressure, Pa")
    p.add_argument("--dx", type=float, required=True, help="superposition width, m")
    p.add_argument("--radius", type=float, default=4e-7, help="sphere radius, m")
    p.add_argument("--mass-amu", type=float, default=AIR_MASS_AMU, help="gas molecular mass, amu")


def build_parser():
    parser = _Parser(prog="airdecoherence", description="Air-molecule collisional decoherence rates.")
    _global_options(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("rate", help="all rate models at one point")
    _point_options(p)
    _global_options(p, suppress=True)

    p = sub.add_parser("compare", help="rate models over a temperature sweep")
    d = COMPARE_DEFAULTS
    p.add_argument("--t-min", type=float, default=d["t_min"])
    p.add_argument("--t-max", type=float, default=d["t_max"])
    p.add_argument("--points", type=int, default=d["points"])
    p.add_argument("--density", type=float, default=d["density"])
    p.add_argument("--dx", type=float, default=d["dx"])
    p.add_argument("--radius", type=float, default=d["radius"])
    p.add_argument("--mass-amu", type=float, default=AIR_MASS_AMU)
    _global_options(p, suppress=True)

    p = sub.add_parser("sweep", help="exact rate for several widths over temperature")
    d = SWEEP_DEFAULTS
    p.add_argument("--dx", type=float, nargs="+", default=d["dx"])
    p.add_argument("--t-min", type=float, default=d["t_min"])
    p.add_argument("--t-max", type=float, default=d["t_max"])
    p.add_argument("--points", type=int, default=d["points"])
    p.add_argument("--density", type=float, default=d["density"])
    p.add_argument("--radius", type=float, default=d["radius"])
    p.add_argument("--mass-amu", type=float, default=AIR_MASS_AMU)
    _global_options(p, suppress=True)

    p = sub.add_parser("table", help="densities and pressures for target rates")
    p.add_argument("--gamma", type=float, nargs="+", default=list(design.TABLE_GAMMAS))
    p.add_argument("--temp", type=float, nargs="+", default=list(design.TABLE_TEMPERATURES))
    p.add_argument("--dx", type=float, nargs="+", default=list(design.TABLE_DELTA_X))
    p.add_argument("--radius", type=float, default=design.TABLE_RADIUS)
    p.add_argument("--mass-amu", type=float, default=AIR_MASS_AMU)
    _global_options(p, suppress=True)

    p = sub.add_parser("path", help="decoherence along sine and constant paths")
    d = PATH_DEFAULTS
    p.add_argument("--kind", choices=["sine", "constant", "both"], default="both")
    p.add_argument("--amplitude", type=float, default=d["amplitude"])
    p.add_argument("--tau", type=float, default=d["tau"])
    p.add_argument("--temp", type=float, nargs="+", default=d["temps"])
    p.add_argument("--density", type=float, default=d["density"])
    p.add_argument("--radius", type=float, default=d["radius"])
    p.add_argument("--mass-amu", type=float, default=AIR_MASS_AMU)
    p.add_argument("--steps", type=int, default=d["steps"])
    _global_options(p, suppress=True)

    p = sub.add_parser("oracle", help="compare the closed form with brute-force quadrature")
    _point_options(p)
    p.add_argument("--rel-tol", type=float, default=1e-8)
    p.add_argument("--cutoff", type=float, default=12.0, help="momentum cutoff in sqrt(m k_B T)")
    p.add_argument("--max-subdivisions", type=int, default=20000)
    _global_options(p, suppress=True)

    p = sub.add_parser("dawson", help="evaluate the Dawson integral")
    p.add_argument("x", type=float, nargs="+")
    _global_options(p, suppress=True)
    return parser


COMMANDS = {
    "rate": cmd_rate,
    "compare": cmd_compare,
    "sweep": cmd_sweep,
    "table": cmd_table,
    "path": cmd_path,
    "oracle": cmd_oracle,
    "dawson": cmd_dawson,
}


def _write(result, out, stdout):
    if isinstance(result, dict):
        target = Path(out)
        target.mkdir(parents=True, exist_ok=True)
        for name, text in result.items():
            (target / name).write_text(text)
    elif out is None:
        stdout.write(result)
    else:
        Path(out).write_text(result)


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        for name in ("constants", "format", "precision", "out"):
            if not hasattr(args, name):
                setattr(args, name, None)
        if args.precision is not None and not 3 <= args.precision <= 17:
            raise UsageError("--precision must lie in [3, 17]")
        c = load_constants(args.constants)
        result = COMMANDS[args.command](args, c)
        status = EXIT_OK
        if isinstance(result, tuple):
            result, status = result
        _write(result, args.out, stdout)
        return status
    except UsageError as exc:
        stderr.write(f"{exc}\n")
        return EXIT_USAGE
    except (DomainError, InfeasibleError, ValueError, OSError) as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except NumericalError as exc:
        stderr.write(f"numerical failure: {exc}\n")
        return EXIT_NUMERICAL


if __name__ == "__main__":
    sys.exit(main())
