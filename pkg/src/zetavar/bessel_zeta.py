"""Bessel zeta functions xi_0 and xi_c, and the c-variation of xi_c'(0).

xi_0(s) = sum_n lambda_n^(-2s) over the positive zeros of J_0, continued to
-1/2 < s < 1 through log I_0. xi_c'(0) is reduced to zeta_c'(0).

The variation d/dc xi_c'(0) is available by four routes:

* ``integral``: differentiate the Barnes integral representation in c.
* ``sector``: variation of the sector determinant in the opening angle
  alpha = pi/c, pulled back to c by the chain rule.
* ``closed_integer``: finite trigonometric sum for integer c >= 2.
* ``closed_noninteger``: finite sum plus one real-line integral for c > 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .barnes import ParameterC, as_parameter, dzeta_c_prime0_dc_estimate, zeta_c_prime0_estimate
from .bessel import i1_over_i0_minus_half, log_i0, log_i0_regularized_array
from .errors import DomainError, PoleError
from .quadrature import (
    DEFAULT_ABS_TOL,
    QuadratureResult,
    integrate_finite,
    integrate_real_line_even,
)
from .specfun import EULER_GAMMA

LOG2 = math.log(2.0)
LOG_2PI = math.log(2.0 * math.pi)
NEAR_INTEGER_WARNING = 0.02
METHODS = ("integral", "sector", "closed_integer", "closed_noninteger")

# large-z expansion of log I_0(z) - z + log(2 pi z)/2 in u = 1/z
_LOG_I0_TAIL = (1.0 / 8.0, 1.0 / 16.0, 25.0 / 384.0)


@dataclass(frozen=True)
class VariationResult:
    c: float
    method: str
    value: float
    error_estimate: float
    evaluations: int = 0
    warnings: tuple[str, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        if self.method not in METHODS:
            raise DomainError(f"unknown variation method {self.method!r}")


@dataclass(frozen=True)
class SectorAngle:
    """Opening angle alpha in (0, pi) of the unit sector, with c = pi/alpha."""

    alpha: float

    def __post_init__(self) -> None:
        if not 0.0 < self.alpha < math.pi:
            raise DomainError(f"sector angle must lie in (0, pi), got {self.alpha!r}")

    @property
    def c(self) -> float:
        return math.pi / self.alpha

    @classmethod
    def from_c(cls, c: float) -> "SectorAngle":
        return cls(math.pi / c)


# --- xi_0 -----------------------------------------------------------------------


def _xi0_bracket(s: float, abs_tol: float) -> QuadratureResult:
    """The factor multiplying sin(pi s)/pi, without its -1/(4s) term."""
    # int_0^1 z^(-2s) I_1/I_0 dz with the z/2 leading part done exactly
    quad = integrate_finite(lambda z: z ** (-2.0 * s) * i1_over_i0_minus_half(z), 0.0, 1.0, abs_tol)
    value = 1.0 / (4.0 * (1.0 - s)) - log_i0(1.0) + 1.0 - 0.5 * LOG_2PI + 1.0 / (2.0 * s - 1.0)
    if s != 0.0:
        # int_1^inf z^(-2s-1) g(z) dz = int_0^1 u^(2s-1) g(1/u) du, g ~ u/8 + u^2/16 + 25 u^3/384
        a1, a2, a3 = _LOG_I0_TAIL

        def far(u):
            poly = u * (a1 + u * (a2 + u * a3))
            return u ** (2.0 * s - 1.0) * (log_i0_regularized_array(1.0 / u) - poly)

        quad = quad + integrate_finite(far, 0.0, 1.0, abs_tol).scaled(2.0 * s)
        value += 2.0 * s * (a1 / (2.0 * s + 1.0) + a2 / (2.0 * s + 2.0) + a3 / (2.0 * s + 3.0))
    return QuadratureResult(quad.value + value, quad.error_estimate, quad.evaluations)


def xi0_estimate(s: float, abs_tol: float = DEFAULT_ABS_TOL) -> QuadratureResult:
    if s == 0.5:
        raise PoleError("xi0 has a pole at s = 1/2")
    if not -0.5 < s < 1.0:
        raise DomainError(f"xi0 is implemented for -1/2 < s < 1, got {s!r}")
    if s == 0.0:
        # sin(pi s)/pi * (-1/(4s)) -> -1/4; every other term carries the zero
        return QuadratureResult(-0.25, 0.0, 1)
    prefactor = math.sin(math.pi * s) / math.pi
    bracket = _xi0_bracket(s, abs_tol).scaled(prefactor)
    return QuadratureResult(bracket.value - prefactor / (4.0 * s), bracket.error_estimate, bracket.evaluations)


def xi0(s: float, abs_tol: float = DEFAULT_ABS_TOL) -> float:
    """xi_0(s) = sum_n lambda_n^(-2s) over the zeros of J_0, continued to -1/2 < s < 1."""
    return xi0_estimate(s, abs_tol).value


def xi0_prime0(method: str = "closed") -> float:
    """d/ds xi_0(s) at s = 0, which equals -log(2 pi)/2.

    ``method="representation"`` evaluates the continued bracket at s = 0
    numerically instead of returning the closed value.
    """
    if method == "closed":
        return -0.5 * LOG_2PI
    if method == "representation":
        # d/ds [sin(pi s)/(4 pi s)] vanishes at 0, so only the bracket survives
        return _xi0_bracket(0.0, DEFAULT_ABS_TOL).value
    raise DomainError(f"unknown method {method!r}")


def xi0_zero_sum(s: float, zeros: int = 500) -> float:
    """Partial sum over the first zeros of J_0 plus a McMahon tail, for s > 1/2."""
    from .bessel import j0_zero
    from .specfun import hurwitz_zeta

    if not s > 0.5:
        raise DomainError(f"zero sum converges only for s > 1/2, got {s!r}")
    head = math.fsum(j0_zero(n).value ** (-2.0 * s) for n in range(1, zeros + 1))
    # lambda_n = beta + 1/(8 beta) + ..., beta = (n - 1/4) pi
    q = zeros + 0.75
    tail = math.pi ** (-2.0 * s) * hurwitz_zeta(2.0 * s, q)
    tail -= 0.25 * s * math.pi ** (-2.0 * s - 2.0) * hurwitz_zeta(2.0 * s + 2.0, q)
    return head + tail


# --- xi_c'(0) -------------------------------------------------------------------


def xi_c_prime0_estimate(c: float | ParameterC, abs_tol: float = DEFAULT_ABS_TOL) -> QuadratureResult:
    c = as_parameter(c).c
    z = zeta_c_prime0_estimate(c, abs_tol)
    value = 0.5 * (z.value + 5.0 / (24.0 * c) - (c + 1.0 / c) * LOG2 / 12.0)
    return QuadratureResult(value, 0.5 * z.error_estimate, z.evaluations)


def xi_c_prime0(c: float | ParameterC) -> float:
    """d/ds xi_c(s) at s = 0."""
    return xi_c_prime0_estimate(c).value


# --- variation in c -----------------------------------------------------------


def _near_integer_warnings(c: float) -> tuple[str, ...]:
    gap = abs(c - round(c))
    if 0.0 < gap < NEAR_INTEGER_WARNING and not ParameterC(c).is_integer:
        return (f"c = {c!r} is within {gap:.3g} of an integer; sin(pi c) is small against a peaked integral",)
    return ()


def dxi_dc_integral(c: float | ParameterC, abs_tol: float = DEFAULT_ABS_TOL) -> VariationResult:
    c = as_parameter(c).c
    dz = dzeta_c_prime0_dc_estimate(c, abs_tol)
    c2 = c * c
    value = 0.5 * (dz.value - 5.0 / (24.0 * c2) - (1.0 - 1.0 / c2) * LOG2 / 12.0)
    return VariationResult(c, "integral", value, 0.5 * dz.error_estimate, dz.evaluations)


def _sector_weight(cos_term: float) -> float:
    one_minus = 1.0 - cos_term
    return (-2.0 * EULER_GAMMA + LOG2 - math.log(one_minus)) / (4.0 * math.pi * one_minus)


def _log_one_plus_cosh(s: np.ndarray) -> np.ndarray:
    a = np.abs(s)
    return a - LOG2 + 2.0 * np.log1p(np.exp(-a))


def _inv_one_plus_cosh(s: np.ndarray) -> np.ndarray:
    e = np.exp(-np.abs(s))
    return 2.0 * e / (1.0 + e) ** 2


def _cosh_minus_cos(a: np.ndarray, b: float) -> np.ndarray:
    # cosh(a) - cos(b) = 2 sinh^2(a/2) + 2 sin^2(b/2), no cancellation near a = 0
    return 2.0 * np.sinh(0.5 * a) ** 2 + 2.0 * math.sin(0.5 * b) ** 2


def _sector_integral(c: float, abs_tol: float) -> QuadratureResult:
    """int_R (2 gamma - log 2 + log(1 + cosh s)) / ((1 + cosh s)(cosh(c s) - cos(pi c))) ds."""

    def f(s):
        num = 2.0 * EULER_GAMMA - LOG2 + _log_one_plus_cosh(s)
        return num * _inv_one_plus_cosh(s) / _cosh_minus_cos(c * s, math.pi * c)

    return integrate_real_line_even(f, 1.0 + c, abs_tol)


def _snap(c: float) -> tuple[float, bool]:
    p = ParameterC(c)
    return (float(p.nearest_integer), True) if p.is_integer else (c, False)


def sector_alpha_variation(angle: SectorAngle, abs_tol: float = DEFAULT_ABS_TOL) -> tuple[QuadratureResult, tuple[str, ...]]:
    """d/d alpha of the log-determinant derivative on the unit sector of angle alpha."""
    alpha = angle.alpha
    c, integer = _snap(angle.c)
    if integer:
        alpha = math.pi / c
    half = 0.5 * c  # pi / (2 alpha)
    k_lo = math.ceil(-half)
    k_hi = int(half) - 1 if integer and c % 2 == 0 else math.floor(half)
    terms = [1.0 / (3.0 * math.pi), math.pi / (12.0 * alpha * alpha)]
    terms += [_sector_weight(math.cos(2.0 * k * alpha)) for k in range(k_lo, k_hi + 1) if k != 0]
    warnings = _near_integer_warnings(angle.c)
    if integer:
        return QuadratureResult(math.fsum(terms), 0.0, 1), warnings
    quad = _sector_integral(c, abs_tol)
    weight = 2.0 / alpha * math.sin(math.pi * math.pi / alpha) / (16.0 * math.pi)
    terms.append(weight * quad.value)
    return QuadratureResult(math.fsum(terms), abs(weight) * quad.error_estimate, quad.evaluations), warnings


def alpha_to_c_factor(c: float) -> float:
    """d alpha / d c for alpha = pi/c."""
    return -math.pi / (c * c)


def dxi_dc_sector(c: float | ParameterC, abs_tol: float = DEFAULT_ABS_TOL) -> VariationResult:
    c = as_parameter(c).c
    if not c > 1.0:
        raise DomainError(f"the sector route needs c > 1, got {c!r}")
    res, warnings = sector_alpha_variation(SectorAngle.from_c(c), abs_tol)
    # xi_c(2s) is the sector zeta, so xi_c'(0) is half its derivative
    factor = 0.5 * alpha_to_c_factor(c)
    scaled = res.scaled(factor)
    return VariationResult(c, "sector", scaled.value, scaled.error_estimate, scaled.evaluations, warnings)


def dxi_dc_closed_integer(j: int) -> VariationResult:
    p = ParameterC(float(j))
    if not p.is_integer or p.nearest_integer < 2:
        raise DomainError(f"closed integer form needs an integer j >= 2, got {j!r}")
    j = p.nearest_integer
    jj = float(j * j)
    acc = []
    for k in range(1, math.ceil(j / 2 - 1) + 1):
        sn = math.sin(k * math.pi / j)
        acc.append(math.log(abs(sn)) / (sn * sn))
    inner = (
        1.0 / (3.0 * math.pi)
        + jj / (12.0 * math.pi)
        - EULER_GAMMA / (12.0 * math.pi) * (jj - 1.0)
        - math.fsum(acc) / (2.0 * math.pi)
    )
    return VariationResult(float(j), "closed_integer", -math.pi / (2.0 * jj) * inner, 0.0, 0)


def dxi_dc_closed_noninteger(c: float | ParameterC, abs_tol: float = DEFAULT_ABS_TOL) -> VariationResult:
    p = as_parameter(c)
    c = p.c
    if p.is_integer:
        raise DomainError(f"closed non-integer form needs a non-integer c, got {c!r}")
    if not c > 1.0:
        raise DomainError(f"closed non-integer form needs c > 1, got {c!r}")
    terms = [1.0 / (3.0 * math.pi), c * c / (12.0 * math.pi)]
    for k in range(math.ceil(-c / 2.0), math.ceil(c / 2.0 - 1.0) + 1):
        if k != 0:
            terms.append(_sector_weight(math.cos(2.0 * k * math.pi / c)))
    quad = _sector_integral(c, abs_tol)
    weight = 2.0 * c / math.pi * math.sin(math.pi * c) / (16.0 * math.pi)
    terms.append(weight * quad.value)
    envelope = -math.pi / (2.0 * c * c)
    return VariationResult(
        c,
        "closed_noninteger",
        envelope * math.fsum(terms),
        abs(envelope * weight) * quad.error_estimate,
        quad.evaluations,
        _near_integer_warnings(c),
    )


def dxi_dc(c: float | ParameterC, method: str = "auto", abs_tol: float = DEFAULT_ABS_TOL) -> VariationResult:
    """Dispatch d/dc xi_c'(0) to a route; ``auto`` picks the closed form matching c."""
    p = as_parameter(c)
    if method == "auto":
        if p.is_integer and p.nearest_integer >= 2:
            return dxi_dc_closed_integer(p.nearest_integer)
        if not p.is_integer and p.c > 1.0:
            return dxi_dc_closed_noninteger(p, abs_tol)
        return dxi_dc_integral(p, abs_tol)
    if method == "closed":
        return dxi_dc_closed_integer(p.nearest_integer) if p.is_integer else dxi_dc_closed_noninteger(p, abs_tol)
    if method == "integral":
        return dxi_dc_integral(p, abs_tol)
    if method == "sector":
        return dxi_dc_sector(p, abs_tol)
    if method == "closed_integer":
        return dxi_dc_closed_integer(p.c)
    if method == "closed_noninteger":
        return dxi_dc_closed_noninteger(p, abs_tol)
    raise DomainError(f"unknown method {method!r}")


def sector_variation(angle: SectorAngle, method: str = "auto") -> float:
    """d/d alpha zeta'_{S_alpha}(0), from any c-route through the chain rule."""
    c = angle.c
    return -2.0 * c * c / math.pi * dxi_dc(c, method).value
