"""Executable checks of the trigonometric, digamma and integral identities
behind the closed forms for d/dc xi_c'(0).

Every check returns an :class:`IdentityReport`; :func:`run_all` runs them over
the canonical parameter sets and :func:`run_cross_methods` compares the
variation routes against each other.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

import numpy as np

from .barnes import regularized_product_dc, bose_product_dc
from .bessel_zeta import (
    LOG2,
    _cosh_minus_cos,
    _inv_one_plus_cosh,
    _log_one_plus_cosh,
    dxi_dc_closed_integer,
    dxi_dc_closed_noninteger,
    dxi_dc_integral,
    dxi_dc_sector,
)
from .errors import DomainError
from .quadrature import DEFAULT_ABS_TOL, integrate_finite, integrate_real_line_even, integrate_to_infinity
from .specfun import EULER_GAMMA, digamma, digamma_gauss

CANONICAL_INTEGERS = tuple(range(2, 13))
CANONICAL_NONINTEGERS = (1.3, 1.5, 2.5, 3.25, 3.7, 4.75, 6.8)
SINGULAR_TERM_TOL = 1e-14


@dataclass(frozen=True)
class IdentityReport:
    name: str
    lhs: float
    rhs: float
    abs_diff: float
    tolerance: float
    passed: bool

    @classmethod
    def compare(cls, name: str, lhs: float, rhs: float, tolerance: float) -> "IdentityReport":
        diff = abs(lhs - rhs)
        return cls(name, lhs, rhs, diff, tolerance, bool(diff <= tolerance))

    def line(self) -> str:
        flag = "PASS" if self.passed else "FAIL"
        return (
            f"{flag} {self.name}: lhs={self.lhs:.17g} rhs={self.rhs:.17g} "
            f"diff={self.abs_diff:.3e} tol={self.tolerance:.1e}"
        )


@dataclass(frozen=True)
class ToleranceProfile:
    """Tolerances per check family."""

    cos_reformulation: float = 1e-12
    inverse_sin_squared: float = 1e-10
    half_range_fold: float = 1e-12
    digamma_trig: float = 1e-11
    cot_sum: float = 1e-10  # scaled by j^3
    weighted_cos: float = 1e-10
    residue_lemma: float = 1e-9
    log_lemma: float = 1e-8
    cross_integer: float = 1e-9
    cross_noninteger: float = 1e-8

    def tightened(self, tol: float) -> "ToleranceProfile":
        return ToleranceProfile(*([tol] * 10))


@dataclass(frozen=True)
class ParameterSets:
    integers: Sequence[int] = CANONICAL_INTEGERS
    nonintegers: Sequence[float] = CANONICAL_NONINTEGERS


# --- reciprocal sine sums -----------------------------------------------------


def cos_form_term(k: int, c: float) -> float:
    one_minus = 1.0 - math.cos(2.0 * k * math.pi / c)
    if one_minus < SINGULAR_TERM_TOL:
        raise DomainError(f"term k={k} is singular at c={c!r}")
    return (-2.0 * EULER_GAMMA + LOG2 - math.log(one_minus)) / (4.0 * math.pi * one_minus)


def sin_form_term(k: int, c: float) -> float:
    sn = math.sin(k * math.pi / c)
    return -(EULER_GAMMA + math.log(abs(sn))) / (4.0 * math.pi * sn * sn)


def check_cos_reformulation(c: float, k_set: Iterable[int], tolerance: float = 1e-12) -> IdentityReport:
    ks = list(k_set)
    if 0 in ks:
        raise DomainError("k_set must exclude 0")
    lhs = math.fsum(cos_form_term(k, c) for k in ks)
    rhs = math.fsum(sin_form_term(k, c) for k in ks)
    return IdentityReport.compare(f"cos_reformulation[c={c:g},k={ks}]", lhs, rhs, tolerance)


def closed_form_window(c: float) -> list[int]:
    """k from ceil(-c/2) to ceil(c/2 - 1), without 0."""
    return [k for k in range(math.ceil(-c / 2.0), math.ceil(c / 2.0 - 1.0) + 1) if k != 0]


def check_inverse_sin_squared(c: int, tolerance: float = 1e-10) -> IdentityReport:
    lhs = math.fsum(1.0 / math.sin(k * math.pi / c) ** 2 for k in range(1, c))
    return IdentityReport.compare(f"inverse_sin_squared[c={c}]", lhs, (c * c - 1.0) / 3.0, tolerance)


def _log_sin_ratio(k: int, c: int) -> float:
    sn = math.sin(k * math.pi / c)
    return math.log(abs(sn)) / (sn * sn)


def check_half_range_fold(c: int, tolerance: float = 1e-12) -> IdentityReport:
    half = math.ceil(c / 2.0 - 1.0)
    lhs = math.fsum(_log_sin_ratio(k, c) for k in range(1, half + 1)) / (2.0 * math.pi)
    rhs = math.fsum(_log_sin_ratio(k, c) for k in range(1, c)) / (4.0 * math.pi)
    return IdentityReport.compare(f"half_range_fold[c={c}]", lhs, rhs, tolerance)


def check_integer_window(c: int, tolerance: float = 1e-12) -> IdentityReport:
    """The symmetric cos-form window at integer c equals the closed trig bracket."""
    lhs = math.fsum(cos_form_term(k, c) for k in closed_form_window(c))
    rhs = -EULER_GAMMA / (12.0 * math.pi) * (c * c - 1.0) - math.fsum(
        _log_sin_ratio(k, c) for k in range(1, math.ceil(c / 2.0 - 1.0) + 1)
    ) / (2.0 * math.pi)
    return IdentityReport.compare(f"integer_window[c={c}]", lhs, rhs, tolerance)


# --- digamma and weighted cosine sums ----------------------------------------


def check_digamma_trig(
    j: int,
    tolerance: float = 1e-11,
    digamma_fn: Callable[[int, int], float] = digamma_gauss,
    label: str = "gauss",
) -> IdentityReport:
    lhs = math.fsum(p * (j - p) * (math.log(2.0 * j) + digamma_fn(p, j)) for p in range(1, j)) / (2.0 * math.pi * j)
    rhs = -EULER_GAMMA / (12.0 * math.pi) * (j * j - 1.0) - math.fsum(
        _log_sin_ratio(k, j) for k in range(1, (j - 1) // 2 + 1)
    ) / (2.0 * math.pi)
    return IdentityReport.compare(f"digamma_trig[{label},j={j}]", lhs, rhs, tolerance)


def generic_digamma_rational(p: int, j: int) -> float:
    return digamma(p / j)


def check_cot_sum_vanishes(j: int, tolerance: float = 1e-10) -> IdentityReport:
    terms = []
    for p in range(1, j):
        cot = 0.0 if 2 * p == j else 1.0 / math.tan(p * math.pi / j)
        terms.append(p * (j - p) * cot)
    return IdentityReport.compare(f"cot_sum_vanishes[j={j}]", math.fsum(terms), 0.0, tolerance * j**3)


def weighted_cos_sums(j: int, k: int) -> tuple[float, float]:
    """(sum p cos(2 k pi p/j), sum p^2 cos(2 k pi p/j)) over p = 1..j-1."""
    cs = [math.cos(2.0 * k * math.pi * p / j) for p in range(1, j)]
    return (
        math.fsum(p * x for p, x in zip(range(1, j), cs)),
        math.fsum(p * p * x for p, x in zip(range(1, j), cs)),
    )


def check_weighted_cos_sums(j: int, k: int, tolerance: float = 1e-10) -> IdentityReport:
    if not 1 <= k <= (j - 1) // 2:
        raise DomainError(f"k must lie in [1, (j-1)//2], got j={j}, k={k}")
    s1, s2 = weighted_cos_sums(j, k)
    sn2 = math.sin(k * math.pi / j) ** 2
    r1 = -j / 2.0
    r2 = j / (2.0 * sn2) - j * j / 2.0
    diff = max(abs(s1 - r1), abs(s2 - r2))
    # report the p(j-p) combination both sides; pass/fail uses the worse of the two sums
    lhs = j * s1 - s2
    rhs = j * r1 - r2
    return IdentityReport(f"weighted_cos_sums[j={j},k={k}]", lhs, rhs, diff, tolerance, bool(diff <= tolerance))


# --- real-line cosh integrals reduced to finite sums ---------------------------


def _require_noninteger(c: float) -> None:
    if not c > 0.0 or abs(c - round(c)) <= 1e-9:
        raise DomainError(f"identity needs a positive non-integer c, got {c!r}")


def _cosh_kernel(c: float, numerator: Callable[[np.ndarray], np.ndarray]) -> Callable[[np.ndarray], np.ndarray]:
    def f(s):
        return numerator(s) * _inv_one_plus_cosh(s) / _cosh_minus_cos(c * s, math.pi * c)

    return f


def residue_lemma_sides(c: float, abs_tol: float = DEFAULT_ABS_TOL) -> tuple[float, float]:
    _require_noninteger(c)
    quad = integrate_real_line_even(_cosh_kernel(c, np.ones_like), 1.0 + c, abs_tol)
    lhs = c / (4.0 * math.pi**2) * math.sin(math.pi * c) * quad.value
    ns = [n for n in range(math.ceil(-c / 2.0), math.floor(c / 2.0) + 1) if n != 0]
    rhs = (1.0 - c * c) / (12.0 * math.pi) + math.fsum(
        1.0 / (1.0 - math.cos(2.0 * math.pi * n / c)) for n in ns
    ) / (2.0 * math.pi)
    return lhs, rhs


def check_residue_lemma(c: float, tolerance: float = 1e-9) -> IdentityReport:
    lhs, rhs = residue_lemma_sides(c)
    return IdentityReport.compare(f"residue_lemma[c={c:g}]", lhs, rhs, tolerance)


def log_lemma_sides(c: float, abs_tol: float = DEFAULT_ABS_TOL) -> tuple[float, float]:
    _require_noninteger(c)
    quad = integrate_real_line_even(_cosh_kernel(c, _log_one_plus_cosh), 1.0 + c, abs_tol)
    lhs = c / (8.0 * math.pi**2) * math.sin(math.pi * c) * quad.value

    log_sum = 0.0
    for n in range(1, math.floor(c / 2.0) + 1):
        one_minus = 1.0 - math.cos(2.0 * math.pi * n / c)
        log_sum += math.log(one_minus) / one_minus
    # H(t) = e^{ct}/((e^t - 1)(1 - e^{ct})^2) is minus the c-derivative kernel over t
    far = integrate_to_infinity(lambda t: -bose_product_dc(t, c) / t, 1.0, 1.0 + c, abs_tol)
    near = integrate_finite(lambda t: -regularized_product_dc(t, c), 0.0, 1.0, abs_tol)
    bracket = math.pi / (2.0 * c) + math.pi * c / 3.0 + LOG2 * (math.pi / (6.0 * c) - math.pi * c / 6.0)
    rhs = (
        log_sum / (2.0 * math.pi)
        + c * c / math.pi * (far.value + near.value)
        - c / (4.0 * math.pi**2) * bracket
    )
    return lhs, rhs


def check_log_lemma(c: float, tolerance: float = 1e-8) -> IdentityReport:
    lhs, rhs = log_lemma_sides(c)
    return IdentityReport.compare(f"log_lemma[c={c:g}]", lhs, rhs, tolerance)


# --- drivers -------------------------------------------------------------------


def _sorted(reports: Iterable[IdentityReport]) -> list[IdentityReport]:
    return sorted(reports, key=lambda r: r.name)


def run_identities(profile: ToleranceProfile | None = None, params: ParameterSets | None = None) -> list[IdentityReport]:
    profile = profile or ToleranceProfile()
    params = params or ParameterSets()
    out: list[IdentityReport] = []
    for c in params.integers:
        out.append(check_cos_reformulation(c, closed_form_window(c), profile.cos_reformulation))
        out.append(check_inverse_sin_squared(c, profile.inverse_sin_squared))
        out.append(check_half_range_fold(c, profile.half_range_fold))
        out.append(check_integer_window(c, profile.half_range_fold))
        out.append(check_digamma_trig(c, profile.digamma_trig))
        out.append(check_digamma_trig(c, profile.digamma_trig, generic_digamma_rational, "generic"))
        out.append(check_cot_sum_vanishes(c, profile.cot_sum))
        for k in range(1, (c - 1) // 2 + 1):
            out.append(check_weighted_cos_sums(c, k, profile.weighted_cos))
    for c in params.nonintegers:
        out.append(check_cos_reformulation(c, closed_form_window(c), profile.cos_reformulation))
        out.append(check_residue_lemma(c, profile.residue_lemma))
        out.append(check_log_lemma(c, profile.log_lemma))
    return _sorted(out)


def run_cross_methods(profile: ToleranceProfile | None = None, params: ParameterSets | None = None) -> list[IdentityReport]:
    """Pairwise agreement of the d/dc xi_c'(0) routes."""
    profile = profile or ToleranceProfile()
    params = params or ParameterSets()
    out: list[IdentityReport] = []
    for j in params.integers:
        if j > 10:
            continue
        vals = {
            "integral": dxi_dc_integral(j).value,
            "sector": dxi_dc_sector(j).value,
            "closed_integer": dxi_dc_closed_integer(j).value,
        }
        out.extend(_pairs(f"cross[c={j}]", vals, profile.cross_integer))
    for c in params.nonintegers:
        if not c > 1.0:
            continue
        vals = {
            "integral": dxi_dc_integral(c).value,
            "sector": dxi_dc_sector(c).value,
            "closed_noninteger": dxi_dc_closed_noninteger(c).value,
        }
        out.extend(_pairs(f"cross[c={c:g}]", vals, profile.cross_noninteger))
    return _sorted(out)


def _pairs(prefix: str, vals: dict, tolerance: float) -> list[IdentityReport]:
    names = list(vals)
    return [
        IdentityReport.compare(f"{prefix} {a}~{b}", vals[a], vals[b], tolerance)
        for i, a in enumerate(names)
        for b in names[i + 1 :]
    ]


def run_all(profile: ToleranceProfile | None = None, params: ParameterSets | None = None) -> list[IdentityReport]:
    return _sorted(run_identities(profile, params) + run_cross_methods(profile, params))


def all_passed(reports: Iterable[IdentityReport]) -> bool:
    return all(r.passed for r in reports)
