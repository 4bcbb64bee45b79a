"""The Barnes double zeta function zeta_c(s) = sum_{n,l >= 1} (c l + n)^(-s).

Routes:

* ``zeta_c_series``: the double sum itself, Hurwitz zeta for the inner sum and
  Euler-Maclaurin for the outer tail. Needs s > 2; used as a reference.
* ``zeta_c_integral``: Mellin representation with the t -> 0 pole part split
  off, valid for s > -1.
* ``zeta_c_prime0`` / ``dzeta_c_prime0_dc``: the s-derivative at zero and its
  c-derivative, as integrals.
* ``dzeta_c_prime0_dc_integer``: closed form in digamma values at c = j.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

import numpy as np

from .errors import DomainError, PoleError
from .laurent import LaurentSeries, bose_derivative_series, bose_series
from .quadrature import (
    DEFAULT_ABS_TOL,
    QuadratureResult,
    integrate_finite,
    integrate_to_infinity,
)
from .specfun import EULER_GAMMA, digamma_gauss, hurwitz_zeta

INTEGER_TOL = 1e-9
SERIES_SWITCH = 0.5  # series branch for max(1, c) * t below this


@dataclass(frozen=True)
class ParameterC:
    c: float

    def __post_init__(self) -> None:
        if not (self.c > 0.0 and math.isfinite(self.c)):
            raise DomainError(f"parameter c must be positive and finite, got {self.c!r}")

    @property
    def nearest_integer(self) -> int:
        return int(round(self.c))

    @property
    def is_integer(self) -> bool:
        return abs(self.c - round(self.c)) <= INTEGER_TOL


def as_parameter(c: float | ParameterC) -> ParameterC:
    return c if isinstance(c, ParameterC) else ParameterC(float(c))


@dataclass(frozen=True)
class LaurentCoefficients:
    """Pole part of 1/((e^{ct}-1)(e^t-1)) = b_-2/t^2 + b_-1/t + b_0 + O(t)."""

    b_minus2: float
    b_minus1: float
    b_zero: float
    c: float


def laurent_coefficients(c: float | ParameterC) -> LaurentCoefficients:
    c = as_parameter(c).c
    return LaurentCoefficients(
        b_minus2=1.0 / c,
        b_minus1=-0.5 - 0.5 / c,
        b_zero=0.25 + c / 12.0 + 1.0 / (12.0 * c),
        c=c,
    )


# --- integrands -------------------------------------------------------------


@lru_cache(maxsize=256)
def _product_series(c: float) -> LaurentSeries:
    return bose_series(c) * bose_series(1.0)


@lru_cache(maxsize=256)
def _dc_product_series(c: float) -> LaurentSeries:
    # d/dc [1/((e^{ct}-1)(e^t-1))] = t D(ct) / (e^t - 1)
    return (bose_derivative_series(c) * bose_series(1.0)).shift(1)


def _switch(c: float) -> float:
    return SERIES_SWITCH / max(1.0, c)


def _piecewise(t: np.ndarray, c: float, direct: Callable, series: Callable) -> np.ndarray:
    t = np.asarray(t, dtype=float)
    small = t < _switch(c)
    out = np.empty_like(t)
    if np.any(small):
        out[small] = series(t[small])
    if np.any(~small):
        out[~small] = direct(t[~small])
    return out


def bose_product(t: np.ndarray, c: float) -> np.ndarray:
    """1/((e^{ct}-1)(e^t-1))."""
    return 1.0 / (np.expm1(c * t) * np.expm1(t))


def bose_product_dc(t: np.ndarray, c: float) -> np.ndarray:
    """-t e^{ct} / ((e^t-1)(e^{ct}-1)^2), the c-derivative of :func:`bose_product`."""
    # e^{ct}/(e^{ct}-1)^2 = 1/((e^{ct}-1)(1-e^{-ct}))
    return -t / (np.expm1(t) * np.expm1(c * t) * -np.expm1(-c * t))


def regularized_product(t: np.ndarray, c: float) -> np.ndarray:
    """(bose_product - b_-2/t^2 - b_-1/t - b_0) / t on (0, 1]."""
    b = laurent_coefficients(c)
    ser = _product_series(c)

    def direct(x):
        return (bose_product(x, c) - (b.b_minus2 / x + b.b_minus1) / x - b.b_zero) / x

    return _piecewise(t, c, direct, lambda x: ser.tail(x, 1, -1))


def regularized_product_dc(t: np.ndarray, c: float) -> np.ndarray:
    """(bose_product_dc + 1/(c^2 t^2) - 1/(2 c^2 t) - 1/12 + 1/(12 c^2)) / t on (0, 1]."""
    ser = _dc_product_series(c)
    c2 = c * c

    def direct(x):
        pole = (1.0 / (c2 * x) - 0.5 / c2) / x - 1.0 / 12.0 + 1.0 / (12.0 * c2)
        return (bose_product_dc(x, c) + pole) / x

    return _piecewise(t, c, direct, lambda x: ser.tail(x, 1, -1))


def _decay(c: float) -> float:
    return 1.0 + c


# --- zeta_c(s) ------------------------------------------------------------------


def zeta_c_series(s: float, c: float | ParameterC, abs_tol: float = 1e-13) -> float:
    """Reference value of zeta_c(s) for s >= 2.2 from the double sum.

    The first L rows sum_n (c l + n)^(-s) = zeta_H(s; c l + 1) are added
    directly; the rows l > L are summed by Euler-Maclaurin in l, with L grown
    until the first omitted correction is below ``abs_tol``.
    """
    c = as_parameter(c).c
    if s < 2.2:
        raise DomainError(f"zeta_c_series needs s >= 2.2, got {s!r}")

    def row_derivative(x: float, m: int) -> float:
        # d^m/dx^m zeta_H(s; c x + 1)
        rising = 1.0
        for i in range(m):
            rising *= s + i
        return (-c) ** m * rising * hurwitz_zeta(s + m, c * x + 1.0)

    # B_2, B_4, B_6, B_8 over (2k)!
    corr = (1.0 / 12.0, -1.0 / 720.0, 1.0 / 30240.0, -1.0 / 1209600.0)
    rows = 32
    while True:
        omitted = abs(5.0 / 66.0 / math.factorial(10) * row_derivative(rows, 9))
        if omitted <= abs_tol or rows > 4096:
            break
        rows *= 2
    head = math.fsum(hurwitz_zeta(s, c * l + 1.0) for l in range(1, rows + 1))
    tail = hurwitz_zeta(s - 1.0, c * rows + 1.0) / (c * (s - 1.0)) - 0.5 * row_derivative(rows, 0)
    tail -= sum(b * row_derivative(rows, 2 * k + 1) for k, b in enumerate(corr))
    return head + tail


def zeta_c_at0(c: float | ParameterC) -> float:
    """zeta_c(0) = b_0: the b_0/s pole meets the zero of 1/Gamma(s)."""
    return laurent_coefficients(c).b_zero


def zeta_c_integral_estimate(s: float, c: float | ParameterC, abs_tol: float = DEFAULT_ABS_TOL) -> QuadratureResult:
    c = as_parameter(c).c
    if s in (1.0, 2.0):
        raise PoleError(f"zeta_c has a pole at s = {s:g}")
    if not s > -1.0:
        raise DomainError(f"integral representation valid for s > -1, got {s!r}")
    if s == 0.0:
        return QuadratureResult(zeta_c_at0(c), 0.0, 0)
    b = laurent_coefficients(c)

    upper = integrate_to_infinity(lambda t: t ** (s - 1.0) * bose_product(t, c), 1.0, _decay(c), abs_tol)
    if s < 0.0:
        # u = t^(s+1) removes the t^s endpoint singularity
        p = 1.0 / (s + 1.0)
        lower = integrate_finite(lambda u: regularized_product(u**p, c), 0.0, 1.0, abs_tol).scaled(p)
    else:
        lower = integrate_finite(lambda t: t**s * regularized_product(t, c), 0.0, 1.0, abs_tol)
    quad = upper + lower
    rgamma = 1.0 / math.gamma(s)
    value = rgamma * (quad.value + b.b_minus2 / (s - 2.0) + b.b_minus1 / (s - 1.0)) + b.b_zero / math.gamma(s + 1.0)
    return QuadratureResult(value, abs(rgamma) * quad.error_estimate, quad.evaluations)


def zeta_c_integral(s: float, c: float | ParameterC) -> float:
    """zeta_c(s) for s > -1 (s not 1 or 2) from the Mellin representation."""
    return zeta_c_integral_estimate(s, c).value


# --- derivatives at s = 0 -------------------------------------------------------------


def zeta_c_prime0_estimate(c: float | ParameterC, abs_tol: float = DEFAULT_ABS_TOL) -> QuadratureResult:
    c = as_parameter(c).c
    b = laurent_coefficients(c)
    upper = integrate_to_infinity(lambda t: bose_product(t, c) / t, 1.0, _decay(c), abs_tol)
    lower = integrate_finite(lambda t: regularized_product(t, c), 0.0, 1.0, abs_tol)
    quad = upper + lower
    const = -0.5 * b.b_minus2 - b.b_minus1 + b.b_zero * EULER_GAMMA
    return QuadratureResult(quad.value + const, quad.error_estimate, quad.evaluations)


def zeta_c_prime0(c: float | ParameterC) -> float:
    """d/ds zeta_c(s) at s = 0."""
    return zeta_c_prime0_estimate(c).value


def dzeta_c_prime0_dc_estimate(c: float | ParameterC, abs_tol: float = DEFAULT_ABS_TOL) -> QuadratureResult:
    c = as_parameter(c).c
    upper = integrate_to_infinity(lambda t: bose_product_dc(t, c) / t, 1.0, _decay(c), abs_tol)
    lower = integrate_finite(lambda t: regularized_product_dc(t, c), 0.0, 1.0, abs_tol)
    quad = upper + lower
    const = EULER_GAMMA * (1.0 / 12.0 - 1.0 / (12.0 * c * c))
    return QuadratureResult(quad.value + const, quad.error_estimate, quad.evaluations)


def dzeta_c_prime0_dc(c: float | ParameterC) -> float:
    """d/dc of zeta_c'(0), by differentiating the integral representation under the integral sign."""
    return dzeta_c_prime0_dc_estimate(c).value


def _weighted_digamma_sum(j: int, digamma_fn: Callable[[int, int], float]) -> float:
    # p = j contributes p (j - p) = 0
    return math.fsum(p * (j - p) * digamma_fn(p, j) for p in range(1, j))


def dzeta_c_prime0_dc_integer(j: int, digamma_fn: Callable[[int, int], float] = digamma_gauss) -> float:
    """Closed form of d/dc zeta_c'(0) at an integer c = j >= 1."""
    if j < 1 or int(j) != j:
        raise DomainError(f"j must be a positive integer, got {j!r}")
    j = int(j)
    jj = float(j * j)
    return (
        -1.0 / 12.0
        - 1.0 / (8.0 * jj)
        + (1.0 - jj) / (12.0 * jj) * math.log(j)
        - _weighted_digamma_sum(j, digamma_fn) / (2.0 * j**3)
    )


def dzeta_c_at_s_integer(s: float, j: int) -> float:
    """d/dc zeta_c(s) at c = j via congruence classes mod j and Hurwitz zeta values."""
    if j < 1 or int(j) != j:
        raise DomainError(f"j must be a positive integer, got {j!r}")
    j = int(j)
    if s in (1.0, 2.0):
        raise PoleError(f"d/dc zeta_c(s) has a pole at s = {s:g}")
    if not s > -1.0:
        raise DomainError(f"supported for s > -1, got {s!r}")
    if s == 0.0:
        # only the 1/s pole of zeta_H(s+1) survives the leading factor s
        return (j * j - 1.0) / (12.0 * j * j)
    acc = []
    for p in range(1, j + 1):
        q = p / j
        term = hurwitz_zeta(s - 1.0, q) + (j - 2.0 * p) / j * hurwitz_zeta(s, q)
        if p != j:
            term -= p * (j - p) / (j * j) * hurwitz_zeta(s + 1.0, q)
        acc.append(term)
    return -0.5 * s * j ** (-s - 1.0) * math.fsum(acc)
