"""Domain records shared by every computation: constants, drive, geometry, particle.

Everything is SI. Records are frozen dataclasses; derived quantities are
properties so they can never drift from the fields they come from.
"""
from __future__ import annotations

import math
from dataclasses import dataclass


class InvalidInput(ValueError):
    """Raised when a record is constructed outside its physical domain."""


@dataclass(frozen=True)
class PhysicalConstants:
    # CODATA 2018
    hbar: float = 1.054571817e-34
    mu0: float = 1.25663706212e-6
    c: float = 299792458.0
    e_charge: float = 1.602176634e-19
    m_electron: float = 9.1093837015e-31

    def __post_init__(self):
        for name in ("hbar", "mu0", "c", "e_charge", "m_electron"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0):
                raise InvalidInput(f"constant {name} must be positive and finite, got {value!r}")

    @classmethod
    def custom(cls, **values: float) -> "PhysicalConstants":
        """Constants with some values overridden, e.g. ``hbar=1`` for natural units."""
        return cls(**values)

    @property
    def h(self) -> float:
        return 2.0 * math.pi * self.hbar

    @property
    def flux_quantum(self) -> float:
        """h/e in Wb."""
        return self.h / self.e_charge


CODATA2018 = PhysicalConstants()


@dataclass(frozen=True)
class SolenoidDrive:
    """Sinusoidal solenoid current ``lambda_order * i0 * cos(omega t)``.

    ``i0`` is a current per unit solenoid length (A/m), so the interior
    field is ``mu0 * i0`` and the steady flux is ``mu0 * i0 * pi * R**2``.
    """

    i0: float
    radius_r: float
    omega: float = 0.0
    lambda_order: float = 1.0
    mu0: float = CODATA2018.mu0

    def __post_init__(self):
        if not (math.isfinite(self.radius_r) and self.radius_r > 0):
            raise InvalidInput(f"non-positive radius: radius_r={self.radius_r!r} must be > 0")
        if not (math.isfinite(self.i0) and self.i0 >= 0):
            raise InvalidInput(f"negative amplitude: i0={self.i0!r} must be >= 0")
        if not (math.isfinite(self.omega) and self.omega >= 0):
            raise InvalidInput(f"negative frequency: omega={self.omega!r} must be >= 0")
        if not (0 < self.lambda_order <= 1):
            raise InvalidInput(f"lambda_order={self.lambda_order!r} outside (0, 1]")

    @property
    def phi_s(self) -> float:
        """Steady flux in Wb."""
        return self.mu0 * self.i0 * math.pi * self.radius_r**2

    @property
    def flux(self) -> float:
        """``lambda_order * phi_s``, the only drive strength the phases see."""
        return self.lambda_order * self.phi_s

    @property
    def period(self) -> float:
        return math.inf if self.omega == 0 else 2.0 * math.pi / self.omega


def make_drive(
    i0: float,
    radius_r: float,
    omega: float = 0.0,
    lambda_order: float = 1.0,
    constants: PhysicalConstants = CODATA2018,
) -> SolenoidDrive:
    return SolenoidDrive(i0=i0, radius_r=radius_r, omega=omega, lambda_order=lambda_order, mu0=constants.mu0)


def drive_for_flux(
    flux: float,
    radius_r: float,
    omega: float = 0.0,
    constants: PhysicalConstants = CODATA2018,
) -> SolenoidDrive:
    """Drive (with ``lambda_order=1``) whose ``lambda*phi_s`` equals ``flux``."""
    if flux < 0:
        raise InvalidInput(f"negative flux {flux!r}")
    i0 = flux / (constants.mu0 * math.pi * radius_r**2)
    return SolenoidDrive(i0=i0, radius_r=radius_r, omega=omega, lambda_order=1.0, mu0=constants.mu0)


@dataclass(frozen=True)
class InterferometerGeometry:
    """Two-slit layout: source at (-l1, 0), slits at (0, +-b), detector at (l2, 0).

    ``t_s`` and ``t_d`` are the source-to-slit and slit-to-screen transit
    times; the packet is at the slits at t = 0.
    """

    l1: float
    l2: float
    b: float
    t_s: float
    t_d: float

    def __post_init__(self):
        for name in ("l1", "l2", "b", "t_s", "t_d"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0):
                raise InvalidInput(f"geometry field {name}={value!r} must be > 0")

    @classmethod
    def symmetric(cls, length: float, transit: float) -> "InterferometerGeometry":
        return cls(l1=length, l2=length, b=length, t_s=transit, t_d=transit)

    @property
    def clearances(self) -> tuple[float, float]:
        """Closest approach of each straight leg to the solenoid axis."""
        return (
            self.l1 * self.b / math.hypot(self.l1, self.b),
            self.l2 * self.b / math.hypot(self.l2, self.b),
        )

    @property
    def r_max(self) -> float:
        return max(math.hypot(self.l1, self.b), math.hypot(self.l2, self.b))

    @property
    def t_max(self) -> float:
        return max(self.t_s, self.t_d)


@dataclass(frozen=True)
class GeometryReport:
    ok: bool
    clearance_source: float
    clearance_screen: float
    radius_r: float
    failures: tuple[str, ...] = ()


def validate_geometry(geom: InterferometerGeometry, radius_r: float) -> GeometryReport:
    c1, c2 = geom.clearances
    failures = []
    if not radius_r < c1:
        failures.append(f"source leg passes within {c1:.6g} m of the axis, inside radius {radius_r:.6g} m")
    if not radius_r < c2:
        failures.append(f"screen leg passes within {c2:.6g} m of the axis, inside radius {radius_r:.6g} m")
    return GeometryReport(not failures, c1, c2, radius_r, tuple(failures))


@dataclass(frozen=True)
class ParticleParams:
    mass: float
    charge: float
    kinetic_energy: float
    c: float = CODATA2018.c
    hbar: float = CODATA2018.hbar

    def __post_init__(self):
        if not (math.isfinite(self.mass) and self.mass > 0):
            raise InvalidInput(f"mass={self.mass!r} must be > 0")
        if not (math.isfinite(self.kinetic_energy) and self.kinetic_energy > 0):
            raise InvalidInput(f"kinetic_energy={self.kinetic_energy!r} must be > 0")
        if not math.isfinite(self.charge):
            raise InvalidInput(f"charge={self.charge!r} must be finite")
        if self.speed > 0.1 * self.c:
            raise InvalidInput(
                f"speed {self.speed:.4g} m/s exceeds 0.1 c; the nonrelativistic Lagrangian does not apply"
            )

    @property
    def speed(self) -> float:
        return math.sqrt(2.0 * self.kinetic_energy / self.mass)

    @property
    def momentum(self) -> float:
        return self.mass * self.speed

    @property
    def de_broglie(self) -> float:
        """Reduced wavelength hbar/(m v)."""
        return self.hbar / self.momentum


def electron(energy_ev: float, constants: PhysicalConstants = CODATA2018) -> ParticleParams:
    return ParticleParams(
        mass=constants.m_electron,
        charge=constants.e_charge,
        kinetic_energy=energy_ev * constants.e_charge,
        c=constants.c,
        hbar=constants.hbar,
    )


@dataclass(frozen=True)
class PhaseResult:
    """Phases of the two branches and the resulting fringe shifts.

    ``phi_u`` is the real phase with ``I_U = i * phi_u``. Build with
    :meth:`from_phases` so that ``f_ratio * dn_static == dn_omega`` holds
    bit-for-bit.
    """

    phi_u: float
    phi_l: float
    dn_omega: float
    dn_static: float
    f_ratio: float
    quad_error: float = 0.0
    converged: bool = True

    @classmethod
    def from_phases(
        cls, phi_u: float, phi_l: float, dn_static: float, quad_error: float = 0.0, converged: bool = True
    ) -> "PhaseResult":
        # orientation chosen so that omega = 0 gives +dn_static
        raw = (phi_l - phi_u) / (2.0 * math.pi)
        if dn_static != 0:
            ratio = raw / dn_static
            dn_omega = ratio * dn_static
        else:
            dn_omega = raw
            ratio = 1.0 if raw == 0 else math.copysign(math.inf, raw)
        return cls(phi_u, phi_l, dn_omega, dn_static, ratio, quad_error, converged)
