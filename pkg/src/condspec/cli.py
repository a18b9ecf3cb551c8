"""Command-line surface: tables, scans, figure data bundles, self checks.

Subcommands: truncate, variational, scan, figure, check, physical. Output is
deterministic CSV (or a JSON mirror) so downstream tooling can diff runs.
Configuration precedence is defaults < --config key=value file < flags; the
only environment variable honored is CONDSPEC_THREADS (scan fan-out width).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

import numpy as np

from .core import ModelParams
from .physical import (CoulombHO, CoulombLinearHO, LinearHO, PhysicalModel,
                       claimed_allowed_frequency, claimed_energy,
                       continuity_demo, to_dimensionless)
from .tableio import format_number, render_table, write_table
from .truncation import FreeParam, truncation_energy, truncation_solutions
from .variational import (DEFAULT_BASIS_SIZE, DEFAULT_CUTOFF, scan_curve,
                          solve_model)
from . import verify

_MODEL_KINDS = {"coulomb-ho": CoulombHO, "linear-ho": LinearHO,
                "coulomb-linear-ho": CoulombLinearHO}

_FIGURES = {
    1: {"free": FreeParam.A, "fixed_value": 0.0, "nmax": 10, "nu_max": 10},
    2: {"free": FreeParam.B, "fixed_value": 0.0, "nmax": 15, "nu_max": 15},
    3: {"free": FreeParam.A, "fixed_value": 1.0, "nmax": 10, "nu_max": 10},
}


def _threads() -> int:
    raw = os.environ.get("CONDSPEC_THREADS", "1")
    try:
        n = int(raw)
    except ValueError:
        raise ValueError(f"CONDSPEC_THREADS must be an integer, got {raw!r}")
    return max(1, n)


def _read_config(path: str | None) -> dict[str, str]:
    if not path:
        return {}
    conf = {}
    text = Path(path).read_text(encoding="utf-8")
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if "=" not in stripped:
            raise ValueError(f"{path}:{lineno}: expected key=value")
        key, _, value = stripped.partition("=")
        conf[key.strip()] = value.strip()
    return conf


def _resolve(args: argparse.Namespace, defaults: dict, conf: dict[str, str],
             casts: dict) -> argparse.Namespace:
    # flags beat config beats defaults; argparse leaves unset flags at None
    for key, fallback in defaults.items():
        if getattr(args, key, None) is not None:
            continue
        if key in conf:
            setattr(args, key, casts.get(key, str)(conf[key]))
        else:
            setattr(args, key, fallback)
    return args


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _parse_fix(spec_str: str) -> tuple[str, float]:
    # "--fix b=0" fixes b and leaves a free, and vice versa
    name, _, value = spec_str.partition("=")
    name = name.strip()
    if name not in ("a", "b") or not value:
        raise ValueError(f"--fix expects a=VALUE or b=VALUE, got {spec_str!r}")
    return name, float(value)


def cmd_truncate(args, conf) -> int:
    defaults = {"n": 1, "s": 0.0, "fix": "b=0", "format": "csv", "output": None}
    casts = {"n": int, "s": float, "fix": str, "format": str, "output": str}
    args = _resolve(args, defaults, conf, casts)
    fixed_name, fixed_value = _parse_fix(args.fix)
    free = FreeParam.B if fixed_name == "a" else FreeParam.A
    sols = truncation_solutions(args.n, args.s, free, fixed_value=fixed_value)
    columns = ["n", "s", "i", "root", "W"] + [f"c{j}" for j in range(args.n + 1)]
    rows = [[sol.n, sol.s, sol.index, sol.root, sol.W, *sol.poly_coeffs]
            for sol in sols]
    _emit(render_table(columns, rows, args.format), args.output)
    return 0


def cmd_variational(args, conf) -> int:
    defaults = {"s": 0.0, "a": 0.0, "b": 0.0, "basis": DEFAULT_BASIS_SIZE,
                "cutoff": DEFAULT_CUTOFF, "bands": 4, "format": "csv",
                "output": None}
    casts = {"s": float, "a": float, "b": float, "basis": int,
             "cutoff": float, "bands": int, "format": str, "output": str}
    args = _resolve(args, defaults, conf, casts)
    p = ModelParams(gamma=args.s, a=args.a, b=args.b)
    result = solve_model(p, basis_size=args.basis, cutoff=args.cutoff)
    bands = min(args.bands, len(result.eigenvalues))
    columns = ["nu", "W"]
    rows = [[nu, float(result.eigenvalues[nu])] for nu in range(bands)]
    _emit(render_table(columns, rows, args.format), args.output)
    return 0


def cmd_scan(args, conf) -> int:
    defaults = {"axis": "a", "min": -3.0, "max": 3.0, "points": 61,
                "s": 0.0, "a": 0.0, "b": 0.0, "bands": 4,
                "basis": DEFAULT_BASIS_SIZE, "cutoff": DEFAULT_CUTOFF,
                "format": "csv", "output": None}
    casts = {"axis": str, "min": float, "max": float, "points": int,
             "s": float, "a": float, "b": float, "bands": int, "basis": int,
             "cutoff": float, "format": str, "output": str}
    args = _resolve(args, defaults, conf, casts)
    template = ModelParams(gamma=args.s, a=args.a, b=args.b)
    curve = scan_curve(template, args.axis, (args.min, args.max, args.points),
                       nu_max=args.bands - 1, basis_size=args.basis,
                       cutoff=args.cutoff, threads=_threads())
    for idx, message in curve.errors:
        print(f"scan failed at {args.axis}={format_number(curve.grid[idx])}: {message}",
              file=sys.stderr)
    columns = [args.axis] + [f"W_{nu}" for nu in range(args.bands)]
    rows = [[float(curve.grid[k])] + [float(curve.bands[nu, k])
            for nu in range(args.bands)] for k in range(len(curve.grid))]
    _emit(render_table(columns, rows, args.format), args.output)
    return 0 if not curve.errors else 1


def _figure_tables(fig_id: int, grid_points: int, lo, hi, basis: int,
                   cutoff: float):
    spec = _FIGURES[fig_id]
    nmax, nu_max = spec["nmax"], spec["nu_max"]
    free, fixed_value = spec["free"], spec["fixed_value"]
    s = 0.0

    points = []
    roots_all = []
    for n in range(nmax + 1):
        for sol in truncation_solutions(n, s, free, fixed_value=fixed_value):
            points.append([sol.n, sol.index, sol.root, sol.W])
            roots_all.append(sol.root)
    roots_all = np.array(sorted(roots_all))

    if lo is None:
        lo = 1.05 * min(roots_all.min(), 0.0)
    if hi is None:
        hi = 1.05 * max(roots_all.max(), 0.0)
    uniform = np.linspace(lo, hi, grid_points)
    grid = np.unique(np.concatenate([uniform, roots_all]))

    axis = "a" if free == FreeParam.A else "b"
    if axis == "a":
        template = ModelParams(gamma=s, a=0.0, b=fixed_value)
    else:
        template = ModelParams(gamma=s, a=fixed_value, b=0.0)
    curve = scan_curve(template, axis, grid, nu_max=nu_max, basis_size=basis,
                       cutoff=cutoff, threads=_threads())
    if curve.errors:
        raise ArithmeticError(f"figure scan failed at {curve.errors[0]}")
    curve_cols = [axis] + [f"W_{nu}" for nu in range(nu_max + 1)]
    curve_rows = [[float(grid[k])] + [float(curve.bands[nu, k])
                  for nu in range(nu_max + 1)] for k in range(len(grid))]

    guide_cols = [axis, "W"]
    if fig_id == 1:
        apex = truncation_energy(nmax, s, fixed_value)
        guide_rows = [[float(v), float(apex)] for v in grid]
    elif fig_id == 2:
        guide_rows = [[float(v), truncation_energy(nmax, s, float(v))]
                      for v in grid]
    else:
        guide_rows = []

    return {
        "points": (["n", "i", axis, "W"], points),
        "curves": (curve_cols, curve_rows),
        "guide": (guide_cols, guide_rows),
    }


def cmd_figure(args, conf) -> int:
    defaults = {"id": 1, "output": None, "points": 241, "min": None,
                "max": None, "basis": DEFAULT_BASIS_SIZE,
                "cutoff": DEFAULT_CUTOFF, "format": "csv"}
    casts = {"id": int, "output": str, "points": int, "min": float,
             "max": float, "basis": int, "cutoff": float, "format": str}
    args = _resolve(args, defaults, conf, casts)
    if args.id not in _FIGURES:
        raise ValueError("--id must be 1, 2, or 3")
    out_dir = Path(args.output or f"figure-{args.id}")
    out_dir.mkdir(parents=True, exist_ok=True)
    tables = _figure_tables(args.id, args.points, args.min, args.max,
                            args.basis, args.cutoff)
    ext = "csv" if args.format == "csv" else "json"
    for name, (columns, rows) in tables.items():
        write_table(out_dir / f"{name}.{ext}", columns, rows, args.format)
    print(f"wrote {', '.join(n + '.' + ext for n in tables)} to {out_dir}")
    return 0


def cmd_check(args, conf) -> int:
    defaults = {"nmax": None, "s": 0.0, "a": 0.0, "b": 0.0, "nu": 0,
                "basis": None, "format": "json", "output": None}
    casts = {"nmax": int, "s": float, "a": float, "b": float, "nu": int,
             "basis": int, "format": str, "output": str}
    args = _resolve(args, defaults, conf, casts)
    suite = args.suite
    if suite == "hft":
        report = verify.check_hft(s=args.s, a=args.a, b=args.b, nu=args.nu,
                                  basis_size=args.basis or 20)
    elif suite == "point-on-curve":
        report = verify.check_point_on_curve(nmax=args.nmax if args.nmax is not None else 10,
                                             s=args.s,
                                             basis_size=args.basis or DEFAULT_BASIS_SIZE)
    elif suite == "oracle":
        report = verify.check_oracle()
    elif suite == "parity":
        report = verify.check_parity(nmax=args.nmax if args.nmax is not None else 15,
                                     s=args.s)
    elif suite == "rootcount":
        report = verify.check_rootcount(nmax=args.nmax if args.nmax is not None else 15)
    else:
        raise ValueError(f"unknown check suite {suite!r}")

    if args.format == "json":
        text = json.dumps(report.as_dict(), indent=2, default=float) + "\n"
    else:
        columns = sorted({key for case in report.cases for key in case})
        rows = [[case.get(col, "") for col in columns] for case in report.cases]
        header = (f"# suite={report.name} passed={report.passed} "
                  f"worst={format_number(report.worst)} "
                  f"threshold={format_number(report.threshold)}\n")
        text = header + render_table(columns, rows, "csv")
    _emit(text, args.output)
    return 0 if report.passed else 1


def _physical_from_args(args) -> PhysicalModel:
    return PhysicalModel(kind=_MODEL_KINDS[args.model], m=args.m,
                         omega=args.omega, k=args.k, eta=args.eta,
                         alpha=args.alpha, hbar=args.hbar, l=args.l)


def cmd_physical(args, conf) -> int:
    defaults = {"model": "coulomb-ho", "m": 1.0, "omega": 1.0, "k": 0.0,
                "eta": 0.0, "alpha": 1.0, "hbar": 1.0, "l": 0, "n": 1,
                "omega_min": 0.1, "omega_max": 2.0, "points": 100,
                "bands": 3, "format": "csv", "output": None}
    casts = {"model": str, "m": float, "omega": float, "k": float,
             "eta": float, "alpha": float, "hbar": float, "l": int, "n": int,
             "omega_min": float, "omega_max": float, "points": int,
             "bands": int, "format": str, "output": str}
    args = _resolve(args, defaults, conf, casts)
    if args.model not in _MODEL_KINDS:
        raise ValueError(f"--model must be one of {sorted(_MODEL_KINDS)}")
    pm = _physical_from_args(args)
    action = args.action

    if action == "allowed-frequency":
        allowed = claimed_allowed_frequency(pm, args.n)
        if allowed.unconstrained:
            print("truncation closes at every omega; no frequency restriction",
                  file=sys.stderr)
        columns = ["n", "n_bar", "omega", "energy"]
        rows = []
        for omega in allowed.omegas:
            pmo = PhysicalModel(kind=pm.kind, m=pm.m, omega=omega, k=pm.k,
                                eta=pm.eta, alpha=pm.alpha, hbar=pm.hbar, l=pm.l)
            rows.append([args.n, args.n + 1, omega, claimed_energy(pmo, args.n)])
        _emit(render_table(columns, rows, args.format), args.output)
        return 0

    if action == "energy":
        energy = claimed_energy(pm, args.n)
        delta = 2.0 * energy / (pm.alpha * pm.hbar * pm.omega)
        columns = ["n", "n_bar", "omega", "energy", "delta"]
        rows = [[args.n, args.n + 1, pm.omega, energy, delta]]
        _emit(render_table(columns, rows, args.format), args.output)
        return 0

    if action == "continuity":
        omegas = np.linspace(args.omega_min, args.omega_max, args.points)
        grid, table = continuity_demo(pm, omegas, nu_max=args.bands - 1)
        columns = ["omega"] + [f"delta_{nu}" for nu in range(args.bands)]
        rows = [[float(grid[j])] + [float(table[nu, j])
                for nu in range(args.bands)] for j in range(len(grid))]
        _emit(render_table(columns, rows, args.format), args.output)
        return 0

    raise ValueError(f"unknown physical action {action!r}")


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--format", choices=["csv", "json"], default=None)
    sub.add_argument("--output", default=None)
    sub.add_argument("--config", default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="condspec",
        description="Conditionally solvable radial spectra: exact truncation "
                    "points versus continuous variational eigenvalue curves.")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("truncate", help="exact truncation solutions for one order")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--s", type=float, default=None)
    p.add_argument("--fix", default=None, metavar="PARAM=VALUE")
    _add_common(p)
    p.set_defaults(func=cmd_truncate)

    p = subs.add_parser("variational", help="lowest eigenvalues at fixed couplings")
    for flag, typ in (("--s", float), ("--a", float), ("--b", float),
                      ("--basis", int), ("--cutoff", float), ("--bands", int)):
        p.add_argument(flag, type=typ, default=None)
    _add_common(p)
    p.set_defaults(func=cmd_variational)

    p = subs.add_parser("scan", help="eigenvalue bands along one coupling axis")
    p.add_argument("--axis", choices=["a", "b"], default=None)
    for flag, typ in (("--min", float), ("--max", float), ("--points", int),
                      ("--s", float), ("--a", float), ("--b", float),
                      ("--bands", int), ("--basis", int), ("--cutoff", float)):
        p.add_argument(flag, type=typ, default=None)
    _add_common(p)
    p.set_defaults(func=cmd_scan)

    p = subs.add_parser("figure", help="emit a CSV data bundle for one figure")
    p.add_argument("--id", type=int, default=None)
    for flag, typ in (("--points", int), ("--min", float), ("--max", float),
                      ("--basis", int), ("--cutoff", float)):
        p.add_argument(flag, type=typ, default=None)
    _add_common(p)
    p.set_defaults(func=cmd_figure)

    p = subs.add_parser("check", help="run one verification suite")
    p.add_argument("suite", choices=["hft", "point-on-curve", "oracle",
                                     "parity", "rootcount"])
    for flag, typ in (("--nmax", int), ("--s", float), ("--a", float),
                      ("--b", float), ("--nu", int), ("--basis", int)):
        p.add_argument(flag, type=typ, default=None)
    _add_common(p)
    p.set_defaults(func=cmd_check)

    p = subs.add_parser("physical", help="physical-model mappings and sweeps")
    p.add_argument("action", choices=["allowed-frequency", "energy", "continuity"])
    p.add_argument("--model", default=None)
    for flag, typ in (("--m", float), ("--omega", float), ("--k", float),
                      ("--eta", float), ("--alpha", float), ("--hbar", float),
                      ("--l", int), ("--n", int), ("--omega-min", float),
                      ("--omega-max", float), ("--points", int), ("--bands", int)):
        p.add_argument(flag, type=typ, default=None,
                       dest=flag.lstrip("-").replace("-", "_"))
    _add_common(p)
    p.set_defaults(func=cmd_physical)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        conf = _read_config(args.config)
        return args.func(args, conf)
    except (ArithmeticError, ValueError, OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
