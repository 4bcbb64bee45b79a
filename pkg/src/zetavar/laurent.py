"""Truncated Laurent series built from 1/(e^x - 1) and its derivative.

The integrands behind zeta_c'(0) and its c-derivative are products of these
two functions with the pole part subtracted. Near t = 0 the subtraction
cancels almost every digit, so below a switch point the regular part is
evaluated from the series instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

import numpy as np

SERIES_ORDER = 24


@lru_cache(maxsize=None)
def bernoulli_numbers(n: int) -> tuple[Fraction, ...]:
    """B_0..B_n with the B_1 = -1/2 convention."""
    b = [Fraction(1)]
    for m in range(1, n + 1):
        acc = Fraction(0)
        binom = 1
        for k in range(m):
            acc += binom * b[k]
            binom = binom * (m + 1 - k) // (k + 1)
        b.append(-acc / (m + 1))
    return tuple(b)


@dataclass(frozen=True)
class LaurentSeries:
    """sum_i coeffs[i] * t**(lowest + i), truncated."""

    lowest: int
    coeffs: np.ndarray

    def __mul__(self, other: "LaurentSeries") -> "LaurentSeries":
        n = min(len(self.coeffs), len(other.coeffs))
        prod = np.convolve(self.coeffs[:n], other.coeffs[:n])[:n]
        return LaurentSeries(self.lowest + other.lowest, prod)

    def scale(self, factor: float) -> "LaurentSeries":
        return LaurentSeries(self.lowest, factor * self.coeffs)

    def shift(self, power: int) -> "LaurentSeries":
        return LaurentSeries(self.lowest + power, self.coeffs)

    def coefficient(self, power: int) -> float:
        i = power - self.lowest
        return float(self.coeffs[i]) if 0 <= i < len(self.coeffs) else 0.0

    def tail(self, t: np.ndarray, start: int, shift: int = 0) -> np.ndarray:
        """sum over powers p >= start of coeff_p * t**(p + shift)."""
        i0 = start - self.lowest
        c = self.coeffs[i0:]
        acc = np.zeros_like(t, dtype=float)
        for a in c[::-1]:
            acc = acc * t + a
        return acc * t ** (start + shift)


def bose_series(scale: float = 1.0, order: int = SERIES_ORDER) -> LaurentSeries:
    """1/(e^{scale t} - 1) = sum_n B_n scale^{n-1} t^{n-1} / n!."""
    b = bernoulli_numbers(order)
    coeffs = np.array([float(b[n] / factorial(n)) * scale ** (n - 1) for n in range(order + 1)])
    return LaurentSeries(-1, coeffs)


def bose_derivative_series(scale: float = 1.0, order: int = SERIES_ORDER) -> LaurentSeries:
    """D(scale t) where D(x) = d/dx 1/(e^x - 1) = -e^x/(e^x - 1)^2."""
    b = bernoulli_numbers(order + 1)
    coeffs = np.array([float(b[n] * (n - 1) / factorial(n)) * scale ** (n - 2) for n in range(order + 1)])
    return LaurentSeries(-2, coeffs)
