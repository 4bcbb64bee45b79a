"""J_0, J_1, the regularized log of I_0, and the positive zeros of J_0."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceError, DomainError

SERIES_CUTOFF = 12.0  # J power series below, Hankel asymptotics above
LOG_I0_CUTOFF = 30.0  # I_0 power series below, asymptotic series in log space above
NEWTON_MAX_ITER = 50
ZERO_TOL = 1e-15
STALL_TOL = 1e-11


@dataclass(frozen=True)
class BesselZero:
    order: float
    index: int
    value: float


def _j_series(x: float, nu: int) -> float:
    # sum_k (-1)^k (x/2)^(2k+nu) / (k! (k+nu)!)
    h = 0.5 * x
    term = h**nu / math.factorial(nu)
    total = term
    q = -h * h
    k = 0
    while abs(term) > 1e-18 * max(1.0, abs(total)) or k < 4:
        k += 1
        term *= q / (k * (k + nu))
        total += term
    return total


def _hankel_pq(x: float, nu: int) -> tuple[float, float]:
    mu = 4.0 * nu * nu
    p = q = 0.0
    term = 1.0
    k = 0
    prev = math.inf
    while True:
        mag = abs(term)
        if mag < 1e-17 or mag > prev:
            break
        prev = mag
        if k % 2 == 0:
            p += term if k % 4 == 0 else -term
        else:
            q += term if k % 4 == 1 else -term
        k += 1
        term *= (mu - (2 * k - 1) ** 2) / (k * 8.0 * x)
    return p, q


def bessel_j0(x: float) -> float:
    """J_0(x) for x >= 0."""
    x = abs(float(x))
    if x <= SERIES_CUTOFF:
        return _j_series(x, 0)
    p, q = _hankel_pq(x, 0)
    c, s = math.cos(x), math.sin(x)
    # cos(x - pi/4) and sin(x - pi/4) without forming the shifted argument
    return math.sqrt(1.0 / (math.pi * x)) * (p * (c + s) - q * (s - c))


def bessel_j1(x: float) -> float:
    """J_1(x) for x >= 0."""
    x = float(x)
    if x < 0.0:
        return -bessel_j1(-x)
    if x <= SERIES_CUTOFF:
        return _j_series(x, 1)
    p, q = _hankel_pq(x, 1)
    c, s = math.cos(x), math.sin(x)
    return math.sqrt(1.0 / (math.pi * x)) * (p * (s - c) + q * (s + c))


def _i0_series_terms(z: np.ndarray, nu: int) -> np.ndarray:
    # sum_k (z/2)^(2k+nu) / (k! (k+nu)!); every term is positive
    h = 0.5 * z
    term = h**nu / math.factorial(nu)
    total = term.copy()
    q = h * h
    for k in range(1, 200):
        term = term * q / (k * (k + nu))
        total += term
        if np.all(term <= 1e-17 * total):
            break
    return total


def _log_i0_asymptotic_correction(z: np.ndarray) -> np.ndarray:
    # log of 1 + sum_k ((2k-1)!!)^2 / (k! (8z)^k), truncated at the smallest term
    term = np.ones_like(z)
    total = np.zeros_like(z)
    active = np.ones(z.shape, dtype=bool)
    for k in range(1, 60):
        nxt = term * (2 * k - 1) ** 2 / (k * 8.0 * z)
        active &= nxt < term
        term = np.where(active, nxt, 0.0)
        total += term
        if np.all(term < 1e-17):
            break
    return np.log1p(total)


def log_i0_regularized_array(z: np.ndarray) -> np.ndarray:
    """Vectorized log I_0(z) - z + log(2 pi z)/2 for z >= 1."""
    z = np.asarray(z, dtype=float)
    if np.any(z < 1.0):
        raise DomainError("log_i0_regularized requires z >= 1")
    out = np.empty_like(z)
    small = z <= LOG_I0_CUTOFF
    if np.any(small):
        zs = z[small]
        out[small] = np.log(_i0_series_terms(zs, 0)) - zs + 0.5 * np.log(2.0 * np.pi * zs)
    if np.any(~small):
        out[~small] = _log_i0_asymptotic_correction(z[~small])
    return out


def log_i0_regularized(z: float) -> float:
    """log I_0(z) - z + log(2 pi z)/2, which decays like 1/(8z)."""
    if not z >= 1.0:
        raise DomainError(f"log_i0_regularized requires z >= 1, got {z!r}")
    return float(log_i0_regularized_array(np.array([float(z)]))[0])


def log_i0(z: float) -> float:
    if not z >= 0.0:
        raise DomainError(f"log_i0 requires z >= 0, got {z!r}")
    if z < 1.0:
        return float(np.log(_i0_series_terms(np.array([float(z)]), 0))[0])
    return log_i0_regularized(z) + z - 0.5 * math.log(2.0 * math.pi * z)


def i1_over_i0_minus_half(z: np.ndarray) -> np.ndarray:
    """I_1(z)/I_0(z) - z/2 on [0, 1], free of the leading cancellation.

    I_1 - (z/2) I_0 = -sum_{k>=1} k (z/2)^(2k+1) / ((k!)^2 (k+1)).
    """
    z = np.asarray(z, dtype=float)
    h = 0.5 * z
    q = h * h
    diff = np.zeros_like(z)
    base = h.copy()  # (z/2)^(2k+1) / (k!)^2
    for k in range(1, 20):
        base = base * q / (k * k)
        diff -= base * k / (k + 1)
    return diff / _i0_series_terms(z, 0)


def j0_zero(n: int) -> BesselZero:
    """The n-th positive zero of J_0 by Newton's method from McMahon's estimate."""
    if n < 1 or int(n) != n:
        raise DomainError(f"zero index must be a positive integer, got {n!r}")
    n = int(n)
    beta = (n - 0.25) * math.pi
    x = beta + 1.0 / (8.0 * beta) - 124.0 / (3.0 * (8.0 * beta) ** 3)
    prev = math.inf
    for _ in range(NEWTON_MAX_ITER):
        step = bessel_j0(x) / bessel_j1(x)
        # stop at a tiny step, or once steps stop shrinking at the J_0 noise floor
        if abs(step) <= ZERO_TOL * x or (abs(step) >= prev and abs(step) < STALL_TOL):
            return BesselZero(order=0.0, index=n, value=x + step)
        x += step
        prev = abs(step)
    raise ConvergenceError(f"Newton iteration for zero {n} of J_0 did not converge")


def j0_zeros(count: int) -> list[BesselZero]:
    return [j0_zero(n) for n in range(1, count + 1)]
