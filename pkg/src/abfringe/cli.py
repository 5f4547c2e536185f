"""Command-line front end.

Exit codes: 0 success, 1 quadrature did not converge (or the oracle check
failed), 2 I/O failure, 3 invalid input.

Parameters come from, in increasing priority: built-in defaults, the
config file named by ``ABFRINGE_CONFIG`` or ``--config`` (flat key=value
lines or a JSON object, keys spelled like the long flags with underscores),
then explicit flags.
"""
from __future__ import annotations

import argparse
import json
import math
import os
import sys
from pathlib import Path

from .model import (
    CODATA2018,
    InterferometerGeometry,
    InvalidInput,
    ParticleParams,
    make_drive,
    drive_for_flux,
)
from .phase import PhaseRequest, fringe_shift, phase_oracle_time_domain, phase_upper, static_fringe_shift
from .quadrature import QuadratureSpec
from .regime import build_report
from .sweep import EmptyTableError, SweepSpec, TableWriteError, fig2_spec, format_table, emit_table, run_sweep

EXIT_OK, EXIT_NONCONVERGED, EXIT_IO, EXIT_INVALID = 0, 1, 2, 3

DEFAULTS = {
    "l1": 0.01,
    "l2": 0.01,
    "b": 0.01,
    "ts": None,
    "td": None,
    "i0": None,
    "radius": 1e-3,
    "omega": 0.0,
    "lambda": 1.0,
    "flux": None,
    "energy_ev": 10.0,
    "mass": CODATA2018.m_electron,
    "charge": CODATA2018.e_charge,
    "omega_t_min": 0.0,
    "omega_t_max": 25.0,
    "step": 0.05,
    "mode": "symmetric_f",
    "format": "csv",
    "out": None,
    "jobs": 1,
    "rel_tol": QuadratureSpec.rel_tol,
    "abs_tol": QuadratureSpec.abs_tol,
    "n_steps": 1_000_000,
}
_FORMAT_ALIASES = {"csv": "csv", "json": "json", "gnuplot": "gnuplot_dat", "gnuplot_dat": "gnuplot_dat"}
_STRING_KEYS = {"mode", "format", "out"}
_INT_KEYS = {"jobs", "n_steps"}


class UsageError(ValueError):
    pass


def load_config(path: str | os.PathLike) -> dict:
    text = Path(path).read_text()
    stripped = text.strip()
    if stripped.startswith("{"):
        raw = json.loads(stripped)
    else:
        raw = {}
        for lineno, line in enumerate(text.splitlines(), 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise UsageError(f"{path}:{lineno}: expected key=value, got {line!r}")
            key, value = (part.strip() for part in line.split("=", 1))
            raw[key] = value
    config = {}
    for key, value in raw.items():
        key = key.replace("-", "_").lstrip("_")
        if key not in DEFAULTS:
            raise UsageError(f"{path}: unknown config key {key!r}")
        config[key] = _coerce(key, value)
    return config


def _coerce(key: str, value):
    if value is None:
        return None
    if key in _STRING_KEYS:
        return str(value)
    if key in _INT_KEYS:
        return int(value)
    return float(value)


def _add_common(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("geometry (m, s)")
    g.add_argument("--l1", type=float)
    g.add_argument("--l2", type=float)
    g.add_argument("--b", type=float)
    g.add_argument("--ts", type=float, help="source-to-slit transit time; default chord length / particle speed")
    g.add_argument("--td", type=float, help="slit-to-screen transit time; default chord length / particle speed")
    d = p.add_argument_group("drive")
    d.add_argument("--i0", type=float, help="surface current amplitude per unit length (A/m)")
    d.add_argument("--radius", type=float, help="solenoid radius (m)")
    d.add_argument("--omega", type=float, help="angular frequency (rad/s)")
    d.add_argument("--lambda", dest="lambda_", type=float, help="order parameter in (0, 1]")
    d.add_argument("--flux", type=float, help="lambda*Phi_s in Wb, overrides --i0 (default: one flux quantum h/e)")
    q = p.add_argument_group("particle")
    q.add_argument("--energy-ev", type=float)
    q.add_argument("--mass", type=float)
    q.add_argument("--charge", type=float)
    n = p.add_argument_group("numerics and output")
    n.add_argument("--rel-tol", type=float)
    n.add_argument("--abs-tol", type=float)
    n.add_argument("--config", help="config file (key=value or JSON); default $ABFRINGE_CONFIG")


def _add_sweep(p: argparse.ArgumentParser, preset: bool = False) -> None:
    if not preset:
        p.add_argument("--omega-t-min", type=float)
        p.add_argument("--omega-t-max", type=float)
        p.add_argument("--step", type=float)
        p.add_argument("--mode", choices=("symmetric_f", "full_geometry"))
    p.add_argument("--format", choices=("csv", "json", "gnuplot"))
    p.add_argument("--out", help="output file (default: stdout)")
    p.add_argument("--jobs", type=int)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="abfringe", description="Time-varying Aharonov-Bohm fringe shifts.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, helptext in [
        ("steady", "static fringe shift dn_S"),
        ("shift", "phases and fringe shift for one geometry, drive and omega"),
        ("sweep", "sweep omega*T and write a table"),
        ("fig2", "f(omega T) on [0, 25] in steps of 0.05, gnuplot two-column data"),
        ("regime", "validity diagnostics of the classical-path approximation"),
        ("oracle", "compare the adaptive phase with the brute-force time-domain trapezoid"),
    ]:
        p = sub.add_parser(name, help=helptext)
        _add_common(p)
        if name == "sweep":
            _add_sweep(p)
        elif name == "fig2":
            _add_sweep(p, preset=True)
        elif name == "oracle":
            p.add_argument("--n-steps", type=int)
    return parser


def resolve(args: argparse.Namespace, environ=os.environ) -> dict:
    values = dict(DEFAULTS)
    config_path = args.config or environ.get("ABFRINGE_CONFIG")
    if config_path:
        values.update(load_config(config_path))
    for key in DEFAULTS:
        attr = "lambda_" if key == "lambda" else key
        flag = getattr(args, attr, None)
        if flag is not None:
            values[key] = flag
    return values


def _particle(v: dict) -> ParticleParams:
    return ParticleParams(
        mass=v["mass"], charge=v["charge"], kinetic_energy=v["energy_ev"] * CODATA2018.e_charge
    )


def _geometry(v: dict, particle: ParticleParams) -> InterferometerGeometry:
    ts = v["ts"] if v["ts"] is not None else math.hypot(v["l1"], v["b"]) / particle.speed
    td = v["td"] if v["td"] is not None else math.hypot(v["l2"], v["b"]) / particle.speed
    return InterferometerGeometry(l1=v["l1"], l2=v["l2"], b=v["b"], t_s=ts, t_d=td)


def _drive(v: dict, omega: float | None = None):
    omega = v["omega"] if omega is None else omega
    if not 0 < v["lambda"] <= 1:
        raise InvalidInput(f"lambda_order={v['lambda']!r} outside (0, 1]")
    if v["flux"] is not None:
        return drive_for_flux(v["flux"], v["radius"], omega)
    if v["i0"] is not None:
        return make_drive(v["i0"], v["radius"], omega, v["lambda"])
    return drive_for_flux(CODATA2018.flux_quantum, v["radius"], omega)


def _quad(v: dict) -> QuadratureSpec:
    return QuadratureSpec(rel_tol=v["rel_tol"], abs_tol=v["abs_tol"])


def _request(v: dict) -> PhaseRequest:
    particle = _particle(v)
    return PhaseRequest(
        geom=_geometry(v, particle), drive=_drive(v), particle=particle, quad=_quad(v), charge=v["charge"]
    )


def _print_mapping(mapping: dict, out) -> None:
    width = max(len(k) for k in mapping)
    for key, value in mapping.items():
        text = format(value, ".10g") if isinstance(value, float) else str(value)
        print(f"{key:<{width}}  {text}", file=out)


def _write_rows(rows, fmt: str, out_path: str | None, out) -> None:
    if out_path:
        emit_table(rows, fmt, out_path)
    else:
        out.write(format_table(rows, fmt))


def _report_nonconverged(rows, err) -> int:
    bad = [r.omega_t for r in rows if not r.converged]
    if bad:
        print(f"warning: quadrature did not converge at omega_t = {bad}", file=err)
        return EXIT_NONCONVERGED
    return EXIT_OK


def run(argv=None, out=None, err=None, environ=os.environ) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INVALID
    try:
        v = resolve(args, environ)
        cmd = args.command
        if cmd == "steady":
            drive = _drive(v)
            _print_mapping(
                {"flux_wb": drive.flux, "dn_static": static_fringe_shift(drive, CODATA2018, v["charge"])}, out
            )
            return EXIT_OK
        if cmd == "shift":
            res = fringe_shift(_request(v))
            _print_mapping(
                {
                    "phi_u": res.phi_u,
                    "phi_l": res.phi_l,
                    "dn_omega": res.dn_omega,
                    "dn_static": res.dn_static,
                    "f_ratio": res.f_ratio,
                    "quad_error": res.quad_error,
                    "converged": res.converged,
                },
                out,
            )
            return EXIT_OK if res.converged else EXIT_NONCONVERGED
        if cmd in ("sweep", "fig2"):
            fmt = _FORMAT_ALIASES[v["format"] if cmd == "sweep" or args.format else "gnuplot"]
            particle = _particle(v)
            common = dict(drive=_drive(v, 0.0), particle=particle, charge=v["charge"], quad=_quad(v), format=fmt)
            if cmd == "fig2":
                spec = fig2_spec(**common)
            else:
                geom = _geometry(v, particle)
                if v["mode"] == "symmetric_f" and not (geom.l1 == geom.l2 == geom.b and geom.t_s == geom.t_d):
                    geom = None
                spec = SweepSpec(
                    omega_t_min=v["omega_t_min"],
                    omega_t_max=v["omega_t_max"],
                    step=v["step"],
                    mode=v["mode"],
                    geom=geom,
                    output_path=v["out"],
                    **common,
                )
            rows = run_sweep(spec, jobs=v["jobs"])
            _write_rows(rows, fmt, v["out"], out)
            return _report_nonconverged(rows, err)
        if cmd == "regime":
            report = build_report(_request(v))
            d = report.to_dict()
            print("SI:", file=out)
            _print_mapping(d["si"], out)
            print("g*cm*s:", file=out)
            _print_mapping(d["cgs"], out)
            print("checks:", file=out)
            _print_mapping({k: ("pass" if ok else "n/a" if ok is None else "WARN") for k, ok in d["flags"].items()}, out)
            return EXIT_OK
        if cmd == "oracle":
            req = _request(v)
            up = phase_upper(req)
            oracle = phase_oracle_time_domain(req, v["n_steps"])
            diff = abs(up.phase - oracle)
            tol = max(1e-8, 1e-6 * abs(up.phase))
            _print_mapping(
                {"phi_u": up.phase, "phi_u_oracle": oracle, "abs_diff": diff, "tolerance": tol, "agree": diff <= tol},
                out,
            )
            if not up.converged:
                return EXIT_NONCONVERGED
            return EXIT_OK if diff <= tol else EXIT_NONCONVERGED
    except EmptyTableError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_INVALID
    except (TableWriteError, OSError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_IO
    except (InvalidInput, UsageError, ValueError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_INVALID
    return EXIT_INVALID


def main(argv=None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
