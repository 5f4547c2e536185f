"""Bessel functions J0, J1, Y0, Y1 of real argument.

Ascending series for |x| <= SERIES_LIMIT, Hankel asymptotic expansion
beyond. Scalar only; the phase integrals never need vectorized Bessel calls.
"""
from __future__ import annotations

import math

SERIES_LIMIT = 12.0
EULER_GAMMA = 0.57721566490153286061
_EPS = 2.220446049250313e-16


def _j_series(order: int, x: float) -> float:
    half = 0.5 * x
    q = -half * half
    term = half**order / math.factorial(order)
    total = term
    k = 0
    while True:
        k += 1
        term *= q / (k * (k + order))
        total += term
        if abs(term) <= _EPS * abs(total) * 1e-2 and k > 2:
            return total


def _y0_series(x: float) -> float:
    q = 0.25 * x * x
    term = 1.0
    harmonic = 0.0
    total = 0.0
    k = 0
    while True:
        k += 1
        term *= -q / (k * k)
        harmonic += 1.0 / k
        contrib = -term * harmonic
        total += contrib
        if abs(contrib) <= _EPS * 1e-2 * max(abs(total), 1e-300) and k > 2:
            break
    return (2.0 / math.pi) * ((math.log(0.5 * x) + EULER_GAMMA) * _j_series(0, x) + total)


def _y1_series(x: float) -> float:
    # psi(k+1) + psi(k+2) = 2 H_k + 1/(k+1) - 2 gamma
    half = 0.5 * x
    q = -half * half
    term = half
    harmonic = 0.0
    total = term * (1.0 - 2.0 * EULER_GAMMA)
    k = 0
    while True:
        k += 1
        term *= q / (k * (k + 1))
        harmonic += 1.0 / k
        contrib = term * (2.0 * harmonic + 1.0 / (k + 1) - 2.0 * EULER_GAMMA)
        total += contrib
        if abs(contrib) <= _EPS * 1e-2 * max(abs(total), 1e-300) and k > 2:
            break
    return (2.0 / math.pi) * math.log(half) * _j_series(1, x) - 2.0 / (math.pi * x) - total / math.pi


def _hankel_pq(order: int, x: float) -> tuple[float, float]:
    """Asymptotic P, Q sums, truncated at the smallest term."""
    mu = 4.0 * order * order
    p, q = 1.0, 0.0
    a = 1.0
    prev = math.inf
    k = 0
    while True:
        k += 1
        a *= (mu - (2 * k - 1) ** 2) / (k * 8.0 * x)
        size = abs(a)
        if size >= prev or size < _EPS * 1e-3:
            break
        prev = size
        # a_k / x^k alternates between Q (odd k) and P (even k) with sign (-1)^floor(k/2)
        sign = -1.0 if (k // 2) % 2 else 1.0
        if k % 2:
            q += sign * a
        else:
            p += sign * a
    return p, q


def _asymptotic(order: int, x: float) -> tuple[float, float]:
    p, q = _hankel_pq(order, x)
    chi = x - (0.5 * order + 0.25) * math.pi
    scale = math.sqrt(2.0 / (math.pi * x))
    c, s = math.cos(chi), math.sin(chi)
    return scale * (p * c - q * s), scale * (p * s + q * c)


def bessel_j0(x: float) -> float:
    x = abs(float(x))
    if x <= SERIES_LIMIT:
        return _j_series(0, x)
    return _asymptotic(0, x)[0]


def bessel_j1(x: float) -> float:
    x = float(x)
    if not math.isfinite(x):
        raise ValueError(f"bessel_j1 needs a finite argument, got {x!r}")
    if x < 0:
        return -bessel_j1(-x)
    if x == 0:
        return 0.0
    if x <= SERIES_LIMIT:
        return _j_series(1, x)
    return _asymptotic(1, x)[0]


def bessel_y0(x: float) -> float:
    x = float(x)
    if not x > 0:
        raise ValueError(f"bessel_y0 is defined for x > 0, got {x!r}")
    if x <= SERIES_LIMIT:
        return _y0_series(x)
    return _asymptotic(0, x)[1]


def bessel_y1(x: float) -> float:
    x = float(x)
    if not x > 0:
        raise ValueError(f"bessel_y1 is defined for x > 0, got {x!r}")
    if not math.isfinite(x):
        raise ValueError(f"bessel_y1 needs a finite argument, got {x!r}")
    if x <= SERIES_LIMIT:
        return _y1_series(x)
    return _asymptotic(1, x)[1]


def bessel_j1_prime(x: float) -> float:
    return bessel_j0(x) - bessel_j1(x) / x


def bessel_y1_prime(x: float) -> float:
    return bessel_y0(x) - bessel_y1(x) / x
