import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from abfringe.model import CODATA2018, InterferometerGeometry, InvalidInput, drive_for_flux, electron, make_drive
from abfringe.phase import (
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
from abfringe.quadrature import integrate_fixed_trapezoid
from conftest import geometries

K = CODATA2018
PHI0 = K.flux_quantum


def request(geom, flux=PHI0, omega=0.0, radius=None, **kw):
    radius = radius if radius is not None else 0.5 * min(geom.clearances)
    return PhaseRequest(geom=geom, drive=drive_for_flux(flux, radius, omega=omega), **kw)


def steady_phase(req):
    return -req.q * req.drive.flux / (2 * K.hbar)


def f_oracle(x, n=10**6):
    integral = integrate_fixed_trapezoid(lambda y: np.cos(x * y / 2) / (1 + y * y), 0.0, 1.0, n)
    return 4 / math.pi * math.cos(x / 2) * integral


def test_request_rejects_solenoid_crossing_paths(symmetric_geom):
    with pytest.raises(InvalidInput):
        request(symmetric_geom, radius=8e-3)


def test_steady_phase_closed_form(symmetric_geom):
    req = request(symmetric_geom)
    up = phase_upper(req)
    assert up.converged
    assert up.phase == pytest.approx(-math.pi, rel=1e-12)  # one flux quantum: -q h/e / 2 hbar
    assert up.phase == pytest.approx(steady_phase(req), rel=1e-12)


@given(geometries())
def test_steady_phase_is_geometry_independent(case):
    geom, radius = case
    req = request(geom, radius=radius)
    assert phase_upper(req).phase == pytest.approx(steady_phase(req), rel=1e-9)


def test_zero_flux(symmetric_geom):
    req = PhaseRequest(symmetric_geom, make_drive(0.0, 1e-3, omega=5e8))
    assert phase_upper(req).phase == 0.0
    assert phase_oracle_time_domain(req, 1000) == 0.0
    res = fringe_shift(req)
    assert res.dn_omega == 0.0 and res.f_ratio == 1.0


def test_symmetric_phase_reduces_to_f(symmetric_geom):
    omega_t = 5.0
    req = request(symmetric_geom, omega=omega_t / symmetric_geom.t_s)
    expected = -(req.q * req.drive.flux / (2 * K.hbar)) * f_oracle(omega_t)
    assert phase_upper(req).phase == pytest.approx(expected, rel=1e-8)
    assert phase_oracle_time_domain(req) == pytest.approx(expected, rel=1e-8)


def test_lower_is_minus_upper(symmetric_geom):
    req = request(symmetric_geom, omega=3.3e8)
    assert phase_lower(req).phase == -phase_upper(req).phase
    static = request(symmetric_geom)
    assert phase_lower(static).phase == pytest.approx(req.q * PHI0 / (2 * K.hbar), rel=1e-12)


@settings(max_examples=40)
@given(geometries(), st.floats(0.0, 25.0))
def test_direct_lower_branch_antisymmetry(case, omega_t):
    geom, radius = case
    req = request(geom, radius=radius, omega=omega_t / geom.t_max)
    up, low = phase_upper(req), phase_lower_direct(req)
    assert abs(low.phase + up.phase) <= 2 * (up.error + low.error)


def test_static_fringe_shift_examples():
    assert static_fringe_shift(drive_for_flux(PHI0, 1e-3), K) == pytest.approx(1.0, abs=1e-12)
    assert static_fringe_shift(drive_for_flux(PHI0 / 2, 1e-3), K) == pytest.approx(0.5, abs=1e-12)
    drive = make_drive(1.0, 1e-3, 0.0, 1.0)
    hand = 1.602176634e-19 * 3.9478e-12 / (2 * math.pi * 1.054571817e-34)
    assert static_fringe_shift(drive, K) == pytest.approx(hand, rel=1e-4)
    assert static_fringe_shift(drive, K) == pytest.approx(954.6, rel=1e-4)


@given(geometries())
def test_fringe_shift_static_limit(case):
    geom, radius = case
    res = fringe_shift(request(geom, flux=3.7 * PHI0, radius=radius))
    assert res.dn_omega == pytest.approx(res.dn_static, rel=1e-9)
    assert res.dn_static == pytest.approx(3.7, rel=1e-12)
    assert res.f_ratio * res.dn_static == res.dn_omega


def test_fringe_shift_vanishes_at_pi(symmetric_geom):
    res = fringe_shift(request(symmetric_geom, omega=math.pi / symmetric_geom.t_s))
    assert abs(res.dn_omega) < 1e-9


def test_high_frequency_suppression(symmetric_geom):
    res = fringe_shift(request(symmetric_geom, omega=1e3 / symmetric_geom.t_s))
    assert abs(res.dn_omega) < 0.02 * res.dn_static
    assert res.f_ratio == pytest.approx(f_oracle(1e3), abs=1e-7)


def test_f_examples():
    assert f_ratio(0.0) == pytest.approx(1.0, abs=1e-12)
    assert abs(f_ratio(math.pi)) < 1e-12
    oracle = f_oracle(2 * math.pi)
    assert oracle == pytest.approx(-0.14394565031494043, abs=1e-10)  # mpmath, 40 digits
    assert f_ratio(2 * math.pi) == pytest.approx(oracle, abs=1e-10)
    with pytest.raises(InvalidInput):
        f_ratio(-1.0)


def test_f_envelope_and_zeros():
    for x in np.linspace(0.0, 50.0, 1001):
        assert abs(f_ratio(x)) <= abs(math.cos(x / 2)) + 1e-15
    for k in range(4):
        assert abs(f_ratio((2 * k + 1) * math.pi)) < 1e-9


def test_continuity_in_omega():
    geom = InterferometerGeometry(0.02, 0.05, 0.01, 3e-8, 7e-8)
    base = phase_upper(request(geom)).phase
    slow = phase_upper(request(geom, omega=1e-4 / geom.t_max)).phase
    assert abs(slow - base) <= 1e-6 * abs(base)


def test_linearity_in_flux_and_charge():
    geom = InterferometerGeometry(0.02, 0.05, 0.01, 3e-8, 7e-8)
    omega = 4.0 / geom.t_max
    one = phase_upper(request(geom, omega=omega)).phase
    assert phase_upper(request(geom, flux=5 * PHI0, omega=omega)).phase == pytest.approx(5 * one, rel=1e-12)
    q2 = phase_upper(request(geom, omega=omega, charge=-2 * K.e_charge)).phase
    assert q2 == pytest.approx(-2 * one, rel=1e-12)


def test_omega_t_scaling(symmetric_geom):
    a = fringe_shift(request(symmetric_geom, omega=3.0 / symmetric_geom.t_s))
    half = InterferometerGeometry.symmetric(0.01, symmetric_geom.t_s / 2)
    b = fringe_shift(request(half, omega=6.0 / symmetric_geom.t_s))
    assert a.f_ratio == pytest.approx(b.f_ratio, rel=1e-10)


@pytest.mark.parametrize("omega_t", [0.0, 0.7, 2.0, 4.8, 9.0, 17.0])
def test_symmetric_reduction(omega_t):
    geom = InterferometerGeometry.symmetric(0.03, 2e-7)
    res = fringe_shift(request(geom, flux=2.5 * PHI0, omega=omega_t / geom.t_s))
    assert res.dn_omega == pytest.approx(res.dn_static * f_ratio(omega_t), rel=1e-8, abs=1e-14)


def _typo_variant_phase(req):
    """Upper phase with the cosine shift over (b^2 + l^2)^2 instead of (b^2 + l^2)."""
    g, omega = req.geom, req.drive.omega
    total = 0.0
    for length, t, sgn in ((g.l1, g.t_s, -1.0), (g.l2, g.t_d, 1.0)):
        d2 = g.b**2 + length**2
        c, rho = g.b**2 * t / d2, g.b * length * t / d2
        lo, hi = (-t + c, c) if sgn < 0 else (-c, t - c)
        wrong = g.b**2 * t / d2**2
        val = integrate_fixed_trapezoid(lambda y: np.cos(omega * (y + sgn * wrong)) / (y * y + rho * rho), lo, hi, 10**5)
        total += -t * (g.b * length / d2) * val
    return req.phase_scale * total


def test_squared_shift_variant_is_rejected_by_oracle():
    geom = InterferometerGeometry(0.02, 0.05, 0.01, 3e-8, 7e-8)
    req = request(geom, omega=3.0 / geom.t_max)
    oracle = phase_oracle_time_domain(req)
    assert phase_upper(req).phase == pytest.approx(oracle, rel=1e-6)
    assert abs(_typo_variant_phase(req) - oracle) > 1e-2


def test_kernel_prefactor():
    geom = InterferometerGeometry(0.02, 0.05, 0.01, 3e-8, 7e-8)
    p = electron(10.0)
    pref = kernel_prefactor(geom, p)
    assert pref.modulus == pytest.approx(p.mass / (2 * math.pi * K.hbar * math.sqrt(geom.t_s * geom.t_d)), rel=1e-14)
    mirrored = InterferometerGeometry(geom.l1, geom.l2, geom.b, geom.t_s, geom.t_d)
    assert kernel_prefactor(mirrored, p) == pref
    # choose transit times so each dynamical phase is exactly pi
    m, hb = p.mass, K.hbar
    ts = m * (geom.l1**2 + geom.b**2) / (2 * hb * math.pi)
    td = m * (geom.l2**2 + geom.b**2) / (2 * hb * math.pi)
    tuned = kernel_prefactor(InterferometerGeometry(geom.l1, geom.l2, geom.b, ts, td), p)
    assert tuned.phase == pytest.approx(2 * math.pi - math.pi / 2, rel=1e-12)
    direct = (m / (2j * math.pi * hb * ts)) ** 0.5 * (m / (2j * math.pi * hb * td)) ** 0.5
    assert tuned.value == pytest.approx(direct * np.exp(2j * math.pi), rel=1e-12)


@pytest.mark.parametrize(
    "dphi, intensity",
    [(0.0, 1.0), (math.pi, 0.0), (math.pi / 2, 0.5)],
)
def test_interference_factor(dphi, intensity):
    value, n = interference_factor(0.3 + dphi, 0.3)
    assert value == pytest.approx(intensity, abs=1e-15)
    assert n == pytest.approx(dphi / (2 * math.pi))
    assert value == pytest.approx(abs(1 + np.exp(1j * dphi)) ** 2 / 4, abs=1e-15)


def test_oracle_rejects_coarse_grid(symmetric_geom):
    with pytest.raises(InvalidInput):
        phase_oracle_time_domain(request(symmetric_geom), 10)
