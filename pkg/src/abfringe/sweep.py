"""omega*T sweeps and table emission (CSV, JSON, gnuplot data)."""
from __future__ import annotations

import csv
import io
import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field, replace
from pathlib import Path
from typing import Sequence

from .model import CODATA2018, InterferometerGeometry, InvalidInput, ParticleParams, PhysicalConstants, SolenoidDrive
from .phase import PhaseRequest, f_ratio_with_error, fringe_shift, static_fringe_shift
from .quadrature import QuadratureSpec

MODES = ("symmetric_f", "full_geometry")
FORMATS = ("csv", "json", "gnuplot_dat")
FIELDS = ("omega", "omega_t", "f", "dn_omega", "dn_static", "quad_error")


class EmptyTableError(ValueError):
    pass


class TableWriteError(OSError):
    pass


@dataclass(frozen=True)
class SweepSpec:
    omega_t_min: float = 0.0
    omega_t_max: float = 25.0
    step: float = 0.05
    mode: str = "symmetric_f"
    geom: InterferometerGeometry | None = None
    drive: SolenoidDrive | None = None
    particle: ParticleParams | None = None
    charge: float | None = None
    quad: QuadratureSpec = field(default_factory=QuadratureSpec)
    constants: PhysicalConstants = CODATA2018
    output_path: str | None = None
    format: str = "csv"

    def __post_init__(self):
        if not self.omega_t_min >= 0:
            raise InvalidInput(f"omega_t_min must be >= 0, got {self.omega_t_min!r}")
        if not self.step > 0:
            raise InvalidInput(f"step must be > 0, got {self.step!r}")
        if not self.omega_t_max >= self.omega_t_min:
            raise InvalidInput(f"omega_t_max {self.omega_t_max!r} below omega_t_min {self.omega_t_min!r}")
        if self.mode not in MODES:
            raise InvalidInput(f"mode must be one of {MODES}, got {self.mode!r}")
        if self.format not in FORMATS:
            raise InvalidInput(f"format must be one of {FORMATS}, got {self.format!r}")
        if self.mode == "full_geometry" and (self.geom is None or self.drive is None):
            raise InvalidInput("full_geometry mode needs both geometry and drive")
        if self.mode == "symmetric_f" and self.geom is not None:
            g = self.geom
            if not (g.l1 == g.l2 == g.b and g.t_s == g.t_d):
                raise InvalidInput("symmetric_f mode needs l1 = l2 = b and T_S = T_D")

    @property
    def transit(self) -> float:
        """Time scale converting omega*T to omega."""
        return 1.0 if self.geom is None else self.geom.t_max

    def grid(self) -> list[float]:
        n = int(math.floor((self.omega_t_max - self.omega_t_min) / self.step + 1e-9)) + 1
        return [round(self.omega_t_min + i * self.step, 12) for i in range(n)]


@dataclass(frozen=True)
class SweepRow:
    omega: float
    omega_t: float
    f: float
    dn_omega: float
    dn_static: float
    quad_error: float
    converged: bool = True

    def values(self) -> tuple[float, ...]:
        return tuple(getattr(self, name) for name in FIELDS)


def _charge(spec: SweepSpec) -> float:
    if spec.charge is not None:
        return spec.charge
    if spec.particle is not None:
        return spec.particle.charge
    return spec.constants.e_charge


def sweep_row(spec: SweepSpec, omega_t: float) -> SweepRow:
    omega = omega_t / spec.transit
    if spec.mode == "symmetric_f":
        dn_static = 1.0 if spec.drive is None else static_fringe_shift(spec.drive, spec.constants, _charge(spec))
        f, err, ok = f_ratio_with_error(omega_t, spec.quad)
        # phi_U = -pi * dn_static * f
        return SweepRow(omega, omega_t, f, f * dn_static, dn_static, math.pi * abs(dn_static) * err, ok)
    req = PhaseRequest(
        geom=spec.geom,
        drive=replace(spec.drive, omega=omega),
        particle=spec.particle,
        quad=spec.quad,
        constants=spec.constants,
        charge=spec.charge,
    )
    res = fringe_shift(req)
    return SweepRow(omega, omega_t, res.f_ratio, res.dn_omega, res.dn_static, res.quad_error, res.converged)


def _row_job(args: tuple[SweepSpec, float]) -> SweepRow:
    return sweep_row(*args)


def run_sweep(spec: SweepSpec, jobs: int = 1) -> list[SweepRow]:
    """One row per grid point, in grid order regardless of ``jobs``."""
    grid = spec.grid()
    if jobs <= 1 or len(grid) < 2:
        return [sweep_row(spec, x) for x in grid]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_row_job, [(spec, x) for x in grid], chunksize=max(1, len(grid) // (4 * jobs))))


def fig2_spec(**overrides) -> SweepSpec:
    base = dict(omega_t_min=0.0, omega_t_max=25.0, step=0.05, mode="symmetric_f", format="gnuplot_dat")
    base.update(overrides)
    return SweepSpec(**base)


def _num(x: float) -> str:
    return format(x, ".17g")


def format_table(rows: Sequence[SweepRow], fmt: str) -> str:
    if not rows:
        raise EmptyTableError("no rows to emit")
    if fmt not in FORMATS:
        raise InvalidInput(f"format must be one of {FORMATS}, got {fmt!r}")
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(FIELDS)
        for row in rows:
            writer.writerow([_num(v) for v in row.values()])
        return buf.getvalue()
    if fmt == "json":
        payload = [{name: getattr(row, name) for name in FIELDS} for row in rows]
        return json.dumps(payload, indent=1) + "\n"
    lines = ["# omega_t f"]
    lines += [f"{_num(row.omega_t)} {_num(row.f)}" for row in rows]
    return "\n".join(lines) + "\n"


def emit_table(rows: Sequence[SweepRow], fmt: str, output_path: str | Path) -> Path:
    text = format_table(rows, fmt)
    path = Path(output_path)
    try:
        with open(path, "w", encoding="ascii", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise TableWriteError(f"cannot write {path}: {exc.strerror or exc}") from exc
    return path


def read_csv(path: str | Path) -> list[SweepRow]:
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        return [SweepRow(**{name: float(rec[name]) for name in FIELDS}) for rec in reader]


def row_dict(row: SweepRow) -> dict:
    return asdict(row)
