"""Time-varying Aharonov-Bohm fringe shifts for a two-slit interferometer around an AC solenoid."""
from .model import (
    CODATA2018,
    GeometryReport,
    InterferometerGeometry,
    InvalidInput,
    ParticleParams,
    PhaseResult,
    PhysicalConstants,
    SolenoidDrive,
    drive_for_flux,
    electron,
    make_drive,
    validate_geometry,
)
from .phase import (
    PhaseRequest,
    f_ratio,
    fringe_shift,
    interference_factor,
    kernel_prefactor,
    phase_lower,
    phase_lower_direct,
    phase_oracle_time_domain,
    phase_upper,
    static_fringe_shift,
)
from .quadrature import QuadratureOutcome, QuadratureSpec, integrate_adaptive, integrate_fixed_trapezoid
from .regime import RegimeReport, build_report
from .sweep import SweepRow, SweepSpec, emit_table, run_sweep

__version__ = "0.1.0"
