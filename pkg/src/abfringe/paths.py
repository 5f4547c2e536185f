"""Straight-line classical paths S0 -> slit -> D for both branches.

Origin on the solenoid axis, source at (-l1, 0), detector at (l2, 0), slits
at (0, +b) (upper) and (0, -b) (lower). The packet is at the slits at t = 0,
so the source leg spans [-T_S, 0] and the screen leg [0, T_D]. Functions
accept scalar or array times.
"""
from __future__ import annotations

from enum import Enum
from typing import NamedTuple

import numpy as np

from .model import InterferometerGeometry, InvalidInput


class Branch(Enum):
    UPPER = "upper"
    LOWER = "lower"

    @property
    def sign(self) -> float:
        return 1.0 if self is Branch.UPPER else -1.0


class Leg(Enum):
    SOURCE_TO_SLIT = "source_to_slit"
    SLIT_TO_SCREEN = "slit_to_screen"


class SegmentId(NamedTuple):
    branch: Branch
    leg: Leg


SEGMENTS = tuple(SegmentId(br, leg) for br in Branch for leg in Leg)


def leg_interval(seg: SegmentId, geom: InterferometerGeometry) -> tuple[float, float]:
    return (-geom.t_s, 0.0) if seg.leg is Leg.SOURCE_TO_SLIT else (0.0, geom.t_d)


def _check_time(seg: SegmentId, t, geom: InterferometerGeometry) -> np.ndarray:
    t = np.asarray(t, dtype=float)
    lo, hi = leg_interval(seg, geom)
    if np.any(t < lo) or np.any(t > hi):
        raise InvalidInput(f"time outside the {seg.leg.value} interval [{lo!r}, {hi!r}]")
    return t


def _squeeze(a: np.ndarray):
    return float(a) if a.ndim == 0 else a


def classical_position(seg: SegmentId, t, geom: InterferometerGeometry):
    t = _check_time(seg, t, geom)
    b = seg.branch.sign * geom.b
    if seg.leg is Leg.SOURCE_TO_SLIT:
        x = geom.l1 * t / geom.t_s
        y = b * (t + geom.t_s) / geom.t_s
    else:
        x = geom.l2 * t / geom.t_d
        y = b * (geom.t_d - t) / geom.t_d
    return _squeeze(x), _squeeze(y)


def classical_velocity(seg: SegmentId, geom: InterferometerGeometry) -> tuple[float, float]:
    b = seg.branch.sign * geom.b
    if seg.leg is Leg.SOURCE_TO_SLIT:
        return geom.l1 / geom.t_s, b / geom.t_s
    return geom.l2 / geom.t_d, -b / geom.t_d


def azimuthal_projection(seg: SegmentId, t, geom: InterferometerGeometry):
    """theta_hat . r_dot = (x*vy - y*vx) / r in m/s."""
    x, y = classical_position(seg, t, geom)
    vx, vy = classical_velocity(seg, geom)
    r = np.hypot(x, y)
    if np.any(r == 0):
        raise InvalidInput("classical path passes through the solenoid axis")
    return _squeeze(np.asarray((x * vy - y * vx) / r))
