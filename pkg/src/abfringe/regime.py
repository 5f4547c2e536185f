"""Order-of-magnitude checks that the classical-path approximation holds.

Two ratios must be small: the A-dependent fluctuation coupling relative to
the kinetic term (dn_static * de_broglie / R) and omega * r_max / c, which
controls the near-field potential. Scales are reported in SI with a
g*cm*s view for comparison with hand estimates.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from .model import CODATA2018, InterferometerGeometry, ParticleParams, PhysicalConstants, SolenoidDrive

M_TO_CM = 100.0
KG_TO_G = 1000.0
MOMENTUM_SI_TO_CGS = KG_TO_G * M_TO_CM


@dataclass(frozen=True)
class RegimeThresholds:
    fluctuation: float = 1e-2
    near_field: float = 1e-2


def fluctuation_scale(particle: ParticleParams, transit: float, constants: PhysicalConstants = CODATA2018) -> float:
    """Transverse quantum-fluctuation size sqrt(2 hbar T / m) in m."""
    if not transit > 0:
        raise ValueError(f"transit time must be > 0, got {transit!r}")
    return math.sqrt(2.0 * constants.hbar * transit / particle.mass)


def fluctuation_velocity_scale(particle: ParticleParams, transit: float, constants: PhysicalConstants = CODATA2018) -> float:
    """sqrt(2 hbar / (m T)) in m/s, the matching bound on |y_dot|."""
    if not transit > 0:
        raise ValueError(f"transit time must be > 0, got {transit!r}")
    return math.sqrt(2.0 * constants.hbar / (particle.mass * transit))


def fluctuation_dominance_ratio(dn_static: float, particle: ParticleParams, length_scale_r: float) -> float:
    if not length_scale_r > 0:
        raise ValueError(f"length scale must be > 0, got {length_scale_r!r}")
    return abs(dn_static) * particle.de_broglie / length_scale_r


def near_field_ratio(
    geom: InterferometerGeometry, drive: SolenoidDrive, constants: PhysicalConstants = CODATA2018
) -> float:
    return drive.omega * geom.r_max / constants.c


@dataclass(frozen=True)
class RegimeReport:
    """Validity diagnostics. ``None`` marks a quantity that needs particle data that was not supplied."""

    dn_static: float
    near_field_ratio: float
    length_scale: float
    fluct_y_scale: float | None = None
    fluct_v_scale: float | None = None
    fluct_ratio: float | None = None
    de_broglie: float | None = None
    momentum: float | None = None
    thresholds: RegimeThresholds = field(default_factory=RegimeThresholds)

    @property
    def flags(self) -> dict[str, bool | None]:
        """True means the check passes; None means it could not be evaluated."""
        return {
            "near_field": self.near_field_ratio < self.thresholds.near_field,
            "fluctuation": None if self.fluct_ratio is None else self.fluct_ratio < self.thresholds.fluctuation,
        }

    @property
    def ok(self) -> bool:
        return all(v is not False for v in self.flags.values())

    @property
    def missing(self) -> tuple[str, ...]:
        names = ("fluct_y_scale", "fluct_v_scale", "fluct_ratio", "de_broglie", "momentum")
        return tuple(n for n in names if getattr(self, n) is None)

    def si(self) -> dict[str, float | None]:
        return {
            "dn_static": self.dn_static,
            "near_field_ratio": self.near_field_ratio,
            "fluct_ratio": self.fluct_ratio,
            "length_scale_m": self.length_scale,
            "fluct_y_scale_m": self.fluct_y_scale,
            "fluct_v_scale_m_per_s": self.fluct_v_scale,
            "de_broglie_m": self.de_broglie,
            "momentum_kg_m_per_s": self.momentum,
        }

    def cgs(self) -> dict[str, float | None]:
        def conv(value, factor):
            return None if value is None else value * factor

        return {
            "dn_static": self.dn_static,
            "near_field_ratio": self.near_field_ratio,
            "fluct_ratio": self.fluct_ratio,
            "length_scale_cm": self.length_scale * M_TO_CM,
            "fluct_y_scale_cm": conv(self.fluct_y_scale, M_TO_CM),
            "fluct_v_scale_cm_per_s": conv(self.fluct_v_scale, M_TO_CM),
            "de_broglie_cm": conv(self.de_broglie, M_TO_CM),
            "momentum_g_cm_per_s": conv(self.momentum, MOMENTUM_SI_TO_CGS),
        }

    def to_dict(self) -> dict:
        return {
            "si": self.si(),
            "cgs": self.cgs(),
            "flags": self.flags,
            "thresholds": {"fluctuation": self.thresholds.fluctuation, "near_field": self.thresholds.near_field},
            "missing": list(self.missing),
        }


def build_report(req, thresholds: RegimeThresholds | None = None) -> RegimeReport:
    """Aggregate all checks for a :class:`~abfringe.phase.PhaseRequest`.

    The length scale R of the fluctuation estimate is the smallest of
    l1, l2, b. Each fluctuation bound is evaluated at whichever transit time
    makes it larger (longest for |y|, shortest for |y_dot|).
    """
    thresholds = thresholds or RegimeThresholds()
    geom, k = req.geom, req.constants
    dn_static = req.phase_scale
    length = min(geom.l1, geom.l2, geom.b)
    base = dict(
        dn_static=dn_static,
        near_field_ratio=near_field_ratio(geom, req.drive, k),
        length_scale=length,
        thresholds=thresholds,
    )
    particle = req.particle
    if particle is None:
        return RegimeReport(**base)
    return RegimeReport(
        **base,
        fluct_y_scale=fluctuation_scale(particle, geom.t_max, k),
        fluct_v_scale=fluctuation_velocity_scale(particle, min(geom.t_s, geom.t_d), k),
        fluct_ratio=fluctuation_dominance_ratio(dn_static, particle, length),
        de_broglie=particle.de_broglie,
        momentum=particle.momentum,
    )
