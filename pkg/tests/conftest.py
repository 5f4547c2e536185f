import math

import numpy as np
import pytest
from hypothesis import settings, strategies as st

from abfringe.model import CODATA2018, InterferometerGeometry, drive_for_flux

settings.register_profile("default", deadline=None, max_examples=50)
settings.load_profile("default")


def log_uniform(lo, hi):
    return st.floats(math.log10(lo), math.log10(hi)).map(lambda e: 10.0**e)


@st.composite
def geometries(draw):
    """Random valid geometry from the acceptance ranges plus a solenoid radius that clears both legs."""
    l1, l2, b = (draw(log_uniform(1e-3, 1e-1)) for _ in range(3))
    t_s, t_d = (draw(log_uniform(1e-9, 1e-6)) for _ in range(2))
    geom = InterferometerGeometry(l1=l1, l2=l2, b=b, t_s=t_s, t_d=t_d)
    return geom, 0.5 * min(geom.clearances)


def random_geometry(rng: np.random.Generator):
    l1, l2, b = 10.0 ** rng.uniform(-3, -1, size=3)
    t_s, t_d = 10.0 ** rng.uniform(-9, -6, size=2)
    geom = InterferometerGeometry(l1=l1, l2=l2, b=b, t_s=t_s, t_d=t_d)
    return geom, 0.5 * min(geom.clearances)


@pytest.fixture
def flux_quantum_drive():
    return drive_for_flux(CODATA2018.flux_quantum, 1e-3)


@pytest.fixture
def symmetric_geom():
    return InterferometerGeometry.symmetric(0.01, 1e-8)


ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def criterion(request):
    """Record a one-line PASS/FAIL verdict for an acceptance criterion."""

    def record(label: str, ok: bool, detail: str = "") -> None:
        ACCEPTANCE_LINES.append(f"{'PASS' if ok else 'FAIL'}  {label}  {detail}".rstrip())
        assert ok, f"{label}: {detail}"

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
