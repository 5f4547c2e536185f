"""Azimuthal vector potential and induced electric field of the AC solenoid.

Lorentz gauge with zero scalar potential. ``vector_potential_exact`` is the
full Bessel form outside the solenoid; ``vector_potential_near`` is its
omega*r/c << 1 limit, which is what the phase integrals use.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .model import CODATA2018, InvalidInput, PhysicalConstants, SolenoidDrive
from .specfun import bessel_j1, bessel_y1


@dataclass(frozen=True)
class FieldPoint:
    r: float
    t: float = 0.0

    def __post_init__(self):
        if not self.r > 0:
            raise InvalidInput(f"field point radius r={self.r!r} must be > 0")


def vector_potential_exact(p: FieldPoint, drive: SolenoidDrive, k: PhysicalConstants = CODATA2018) -> float:
    """A_phi in T*m from the Bessel-function solution.

    At omega = 0 the Bessel form is 0 * infinity; the static potential is
    returned through :func:`vector_potential_near` instead, which is exact there.
    """
    if drive.omega == 0:
        return vector_potential_near(p, drive)
    w = drive.omega / k.c
    phase = drive.omega * p.t + 0.5 * math.pi
    return (
        -(drive.flux / (2.0 * drive.radius_r))
        * bessel_j1(w * drive.radius_r)
        * (math.sin(phase) * bessel_y1(w * p.r) + math.cos(phase) * bessel_j1(w * p.r))
    )


def near_field_potential(flux: float, omega: float, r, t):
    """Array-friendly near-field A_phi for a given ``lambda*phi_s``."""
    r = np.asarray(r, dtype=float)
    if np.any(r <= 0):
        raise InvalidInput("near-field potential requires r > 0")
    out = flux / (2.0 * math.pi) * np.cos(omega * np.asarray(t, dtype=float)) / r
    return float(out) if out.ndim == 0 else out


def vector_potential_near(p: FieldPoint, drive: SolenoidDrive) -> float:
    return near_field_potential(drive.flux, drive.omega, p.r, p.t)


def electric_field_near(p: FieldPoint, drive: SolenoidDrive) -> float:
    """E_phi = -dA_phi/dt in V/m."""
    return drive.flux * drive.omega / (2.0 * math.pi) * math.sin(drive.omega * p.t) / p.r
