"""Aharonov-Bohm phases along the two classical branches and the fringe shift.

The upper-branch phase is

    phi_U = (q * lambda*Phi_s / (2 pi hbar)) * (leg_source + leg_screen)

where each leg is a Lorentzian-times-cosine integral obtained by completing
the square in the straight-line distance r(t)^2. Integrals are taken in
the dimensionless variable u = y / T so integrand values are O(1) whatever
the transit times are.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .model import (
    CODATA2018,
    InterferometerGeometry,
    InvalidInput,
    ParticleParams,
    PhaseResult,
    PhysicalConstants,
    SolenoidDrive,
    validate_geometry,
)
from .paths import Branch, Leg, SegmentId, azimuthal_projection, classical_position
from .potential import near_field_potential
from .quadrature import QuadratureSpec, integrate_adaptive, integrate_fixed_trapezoid


@dataclass(frozen=True)
class PhaseRequest:
    geom: InterferometerGeometry
    drive: SolenoidDrive
    particle: ParticleParams | None = None
    quad: QuadratureSpec = field(default_factory=QuadratureSpec)
    constants: PhysicalConstants = CODATA2018
    charge: float | None = None

    def __post_init__(self):
        report = validate_geometry(self.geom, self.drive.radius_r)
        if not report.ok:
            raise InvalidInput("; ".join(report.failures))

    @property
    def q(self) -> float:
        if self.charge is not None:
            return self.charge
        if self.particle is not None:
            return self.particle.charge
        return self.constants.e_charge

    @property
    def phase_scale(self) -> float:
        """q * lambda*Phi_s / (2 pi hbar), i.e. the static fringe shift."""
        return self.q * self.drive.flux / (2.0 * math.pi * self.constants.hbar)


class BranchPhase(NamedTuple):
    phase: float
    error: float
    converged: bool


def _leg_integral(length: float, b: float, omega_t: float, shift_sign: float, quad: QuadratureSpec):
    """-(b l / (b^2+l^2)) * T * int cos(omega (y -+ c)) / (y^2 + rho^2) dy, in units of u = y/T.

    ``shift_sign=-1`` gives the source leg (u in [c-1, c], cos(omega T (u - c))),
    ``+1`` the screen leg (u in [-c, 1-c], cos(omega T (u + c))).
    """
    d2 = b * b + length * length
    c = b * b / d2
    rho = b * length / d2
    rho2 = rho * rho
    lo, hi = (c - 1.0, c) if shift_sign < 0 else (-c, 1.0 - c)
    shift = shift_sign * c

    def integrand(u):
        return np.cos(omega_t * (u + shift)) / (u * u + rho2)

    out = integrate_adaptive(integrand, lo, hi, quad)
    return -rho * out.value, abs(rho) * out.error_estimate, out.converged


def branch_phase_substituted(req: PhaseRequest, b: float) -> BranchPhase:
    """Phase of the branch through the slit at (0, b); ``b < 0`` is the lower slit."""
    g, omega = req.geom, req.drive.omega
    v1, e1, ok1 = _leg_integral(g.l1, b, omega * g.t_s, -1.0, req.quad)
    v2, e2, ok2 = _leg_integral(g.l2, b, omega * g.t_d, +1.0, req.quad)
    scale = req.phase_scale
    return BranchPhase(scale * (v1 + v2), abs(scale) * (e1 + e2), ok1 and ok2)


def phase_upper(req: PhaseRequest) -> BranchPhase:
    return branch_phase_substituted(req, req.geom.b)


def phase_lower(req: PhaseRequest) -> BranchPhase:
    """Lower-branch phase. Mirror symmetry b -> -b makes it exactly -phi_U."""
    up = phase_upper(req)
    return BranchPhase(-up.phase, up.error, up.converged)


def _time_domain_integrand(req: PhaseRequest, seg: SegmentId):
    """(q/hbar) * A(r_cl(t), t) * (theta_hat . r_dot) as a function of t."""
    coeff = req.q / req.constants.hbar
    flux, omega = req.drive.flux, req.drive.omega

    def integrand(t):
        x, y = classical_position(seg, t, req.geom)
        r = np.hypot(x, y)
        return coeff * near_field_potential(flux, omega, r, t) * azimuthal_projection(seg, t, req.geom)

    return integrand


def phase_direct(req: PhaseRequest, branch: Branch) -> BranchPhase:
    """Adaptive integration of A . r_dot along the branch in the time domain.

    Independent of the completed-square substitution; used to verify the
    mirror antisymmetry of the two branches.
    """
    g = req.geom
    total, err, ok = 0.0, 0.0, True
    for leg, (lo, hi) in ((Leg.SOURCE_TO_SLIT, (-g.t_s, 0.0)), (Leg.SLIT_TO_SCREEN, (0.0, g.t_d))):
        f = _time_domain_integrand(req, SegmentId(branch, leg))
        span = hi - lo
        # integrate over s in [0, 1] with t = lo + span*s so tolerances act on phase units
        out = integrate_adaptive(lambda s, f=f, lo=lo, span=span: span * f(np.clip(lo + span * s, lo, hi)), 0.0, 1.0, req.quad)
        total += out.value
        err += out.error_estimate
        ok = ok and out.converged
    return BranchPhase(total, err, ok)


def phase_lower_direct(req: PhaseRequest) -> BranchPhase:
    return phase_direct(req, Branch.LOWER)


def phase_oracle_time_domain(req: PhaseRequest, n_steps: int = 1_000_000) -> float:
    """Brute-force trapezoid evaluation of the upper phase over t in [-T_S, T_D].

    The panels are split between the legs in proportion to their durations so
    that t = 0, where the velocity jumps, is always a node.
    """
    if int(n_steps) != n_steps or n_steps < 1000:
        raise InvalidInput(f"n_steps must be an integer >= 1000, got {n_steps!r}")
    g = req.geom
    n1 = max(1, round(n_steps * g.t_s / (g.t_s + g.t_d)))
    n2 = max(1, int(n_steps) - n1)
    src = integrate_fixed_trapezoid(
        _time_domain_integrand(req, SegmentId(Branch.UPPER, Leg.SOURCE_TO_SLIT)), -g.t_s, 0.0, n1
    )
    scr = integrate_fixed_trapezoid(
        _time_domain_integrand(req, SegmentId(Branch.UPPER, Leg.SLIT_TO_SCREEN)), 0.0, g.t_d, n2
    )
    return src + scr


def static_fringe_shift(
    drive: SolenoidDrive, constants: PhysicalConstants = CODATA2018, charge: float | None = None
) -> float:
    q = constants.e_charge if charge is None else charge
    return q * drive.flux / (2.0 * math.pi * constants.hbar)


def fringe_shift(req: PhaseRequest) -> PhaseResult:
    up = phase_upper(req)
    low = phase_lower(req)
    return PhaseResult.from_phases(
        up.phase,
        low.phase,
        req.phase_scale,
        quad_error=up.error,
        converged=up.converged and low.converged,
    )


def f_ratio_with_error(omega_t: float, quad: QuadratureSpec | None = None) -> tuple[float, float, bool]:
    if not omega_t >= 0:
        raise InvalidInput(f"omega_t must be >= 0, got {omega_t!r}")
    half = 0.5 * omega_t
    out = integrate_adaptive(lambda y: np.cos(half * y) / (1.0 + y * y), 0.0, 1.0, quad or QuadratureSpec())
    pref = (4.0 / math.pi) * math.cos(half)
    return pref * out.value, abs(pref) * out.error_estimate, out.converged


def f_ratio(omega_t: float, quad: QuadratureSpec | None = None) -> float:
    """Symmetric-geometry (l1 = l2 = b, T_S = T_D = T) ratio of the AC to the static shift."""
    return f_ratio_with_error(omega_t, quad)[0]


@dataclass(frozen=True)
class KernelPrefactor:
    modulus: float
    phase: float

    @property
    def value(self) -> complex:
        return self.modulus * complex(math.cos(self.phase), math.sin(self.phase))


def kernel_prefactor(
    geom: InterferometerGeometry, particle: ParticleParams, constants: PhysicalConstants = CODATA2018
) -> KernelPrefactor:
    """Free-particle amplitude of the two legs, identical for both branches.

    The returned phase is unwrapped: dynamical phase of each leg minus pi/4
    per leg from the i^{-1/2} factors.
    """
    m, hbar = particle.mass, constants.hbar
    modulus = m / (2.0 * math.pi * hbar * math.sqrt(geom.t_s * geom.t_d))
    dynamical = m * (geom.l1**2 + geom.b**2) / (2.0 * hbar * geom.t_s) + m * (geom.l2**2 + geom.b**2) / (
        2.0 * hbar * geom.t_d
    )
    return KernelPrefactor(modulus, dynamical - 0.5 * math.pi)


def interference_factor(phi_u: float, phi_l: float) -> tuple[float, float]:
    """Relative intensity |1 + exp(i dphi)|^2 / 4 at the detector and the fringe number dphi / 2pi."""
    dphi = phi_u - phi_l
    return 0.5 * (1.0 + math.cos(dphi)), dphi / (2.0 * math.pi)
