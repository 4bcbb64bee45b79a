import math

import mpmath
import pytest
from hypothesis import given
from hypothesis import strategies as st

from zetavar.barnes import (
    ParameterC,
    dzeta_c_at_s_integer,
    dzeta_c_prime0_dc,
    dzeta_c_prime0_dc_integer,
    laurent_coefficients,
    zeta_c_at0,
    zeta_c_integral,
    zeta_c_prime0,
    zeta_c_series,
)
from zetavar.errors import DomainError, PoleError
from zetavar.specfun import EULER_GAMMA, digamma, riemann_zeta

# zeta_1(s) = sum_m (m - 1) m^-s = zeta(s-1) - zeta(s)
ZETA1_PRIME0 = float(mpmath.zeta(-1, derivative=1) - mpmath.zeta(0, derivative=1))


def test_parameter_classification():
    assert ParameterC(3.0).is_integer
    assert ParameterC(3.0 + 5e-10).is_integer
    assert not ParameterC(3.0 + 2e-9).is_integer
    assert ParameterC(2.6).nearest_integer == 3
    for bad in (0.0, -1.0, math.inf, math.nan):
        with pytest.raises(DomainError):
            ParameterC(bad)


def test_laurent_coefficients_examples():
    l1 = laurent_coefficients(1.0)
    assert (l1.b_minus2, l1.b_minus1) == (1.0, -1.0)
    assert l1.b_zero == pytest.approx(5 / 12, abs=1e-16)
    l2 = laurent_coefficients(2.0)
    assert (l2.b_minus2, l2.b_minus1) == (0.5, -0.75)
    assert l2.b_zero == pytest.approx(0.45833333333333, abs=1e-14)
    assert laurent_coefficients(math.pi).b_zero == pytest.approx(laurent_coefficients(1 / math.pi).b_zero, abs=1e-15)


@given(st.floats(min_value=0.05, max_value=50.0))
def test_b_zero_inversion_symmetry(c):
    assert abs(zeta_c_at0(c) - zeta_c_at0(1.0 / c)) < 1e-13 * max(c, 1 / c)


def test_series_at_c_one():
    for s in (3.0, 4.0):
        assert abs(zeta_c_series(s, 1.0) - (riemann_zeta(s - 1) - riemann_zeta(s))) < 1e-12
    assert abs(zeta_c_series(3.0, 1.0) - 0.44287716368863217) < 1e-12
    assert abs(zeta_c_series(4.0, 1.0) - 0.11973366944845608) < 1e-12


@pytest.mark.parametrize("c", [1.5, 2.0])
def test_series_scaling_law(c):
    assert abs(zeta_c_series(3.0, 1.0 / c) - c**3 * zeta_c_series(3.0, c)) < 1e-9


def test_series_against_mpmath_double_sum():
    c, s = 1.5, 3.0
    with mpmath.workdps(20):
        ref = mpmath.nsum(lambda n, l: (c * l + n) ** (-s), [1, mpmath.inf], [1, mpmath.inf])
    assert abs(zeta_c_series(s, c) - float(ref)) < 1e-12


def test_series_domain():
    with pytest.raises(DomainError):
        zeta_c_series(2.1, 1.0)


@pytest.mark.parametrize("s", [2.5, 3.0, 4.0])
@pytest.mark.parametrize("c", [1.0, 1.5, 2.0, math.pi])
def test_integral_matches_series(s, c):
    assert abs(zeta_c_integral(s, c) - zeta_c_series(s, c)) < 1e-9


def test_integral_at_c_one_matches_riemann():
    assert abs(zeta_c_integral(3.0, 1.0) - (riemann_zeta(2.0) - riemann_zeta(3.0))) < 1e-10
    for s in (-0.5, 0.5, 1.5):
        assert abs(zeta_c_integral(s, 1.0) - float(mpmath.zeta(s - 1) - mpmath.zeta(s))) < 1e-11


def test_integral_determinism_and_poles():
    assert zeta_c_integral(-0.5, 2.0) == zeta_c_integral(-0.5, 2.0)
    assert math.isfinite(zeta_c_integral(-0.5, 2.0))
    for s in (1.0, 2.0):
        with pytest.raises(PoleError):
            zeta_c_integral(s, 2.0)
    with pytest.raises(DomainError):
        zeta_c_integral(-1.0, 2.0)


@pytest.mark.parametrize("c", [0.7, 2.0, 3.3])
def test_at0_is_limit_of_integral(c):
    h = 1e-3
    f = lambda x: zeta_c_integral(x, c)  # noqa: E731
    # Richardson on the symmetric average removes the O(h^2) term
    avg = lambda step: 0.5 * (f(step) + f(-step))  # noqa: E731
    extrap = (4 * avg(h / 2) - avg(h)) / 3
    assert abs(extrap - zeta_c_at0(c)) < 1e-6


def test_at0_values():
    assert abs(zeta_c_at0(1.0) - (riemann_zeta(-1.0) - riemann_zeta(0.0))) < 1e-14
    assert zeta_c_at0(2.0) == pytest.approx(0.45833333333333, abs=1e-14)
    assert zeta_c_at0(2.7) == pytest.approx(zeta_c_at0(1 / 2.7), abs=1e-15)


def test_prime0_at_c_one():
    assert abs(zeta_c_prime0(1.0) - ZETA1_PRIME0) < 1e-12
    assert abs(zeta_c_prime0(1.0) - (-0.1654211437 + 0.9189385332)) < 1e-10


@pytest.mark.parametrize("c", [1.5, 2.0, 3.0, math.pi])
def test_prime0_functional_relation(c):
    lhs = zeta_c_prime0(1.0 / c) - zeta_c_prime0(c)
    assert abs(lhs - zeta_c_at0(c) * math.log(c)) < 1e-9


@pytest.mark.parametrize("c", [1.3, 2.0, 3.6])
def test_prime0_derivative_consistency(c):
    h = 1e-4
    fd = (zeta_c_prime0(c + h) - zeta_c_prime0(c - h)) / (2 * h)
    assert abs(fd - dzeta_c_prime0_dc(c)) < 1e-6


def test_dc_values():
    assert abs(dzeta_c_prime0_dc(1.0) + 5 / 24) < 1e-12
    with_psi = -1 / 12 - 1 / 32 - 3 * math.log(2) / 48 - digamma(0.5) / 16
    psi_folded = -1 / 12 - 1 / 32 + math.log(2) / 16 + EULER_GAMMA / 16
    assert abs(dzeta_c_prime0_dc(2.0) - with_psi) < 1e-12
    assert abs(with_psi - psi_folded) < 1e-15
    assert abs(dzeta_c_prime0_dc(2.0) + 0.0351856) < 1e-7
    assert abs(dzeta_c_prime0_dc(3.0) + 0.0137762) < 1e-7


@pytest.mark.parametrize("j", range(1, 11))
def test_integer_closed_form_matches_integral(j):
    assert abs(dzeta_c_prime0_dc(float(j)) - dzeta_c_prime0_dc_integer(j)) < 1e-9


@pytest.mark.parametrize("j", range(2, 9))
def test_integer_closed_form_digamma_variants(j):
    generic = dzeta_c_prime0_dc_integer(j, lambda p, q: digamma(p / q))
    assert abs(dzeta_c_prime0_dc_integer(j) - generic) < 1e-13


def test_integer_closed_form_edge():
    assert dzeta_c_prime0_dc_integer(1) == pytest.approx(-5 / 24, abs=1e-16)
    with pytest.raises(DomainError):
        dzeta_c_prime0_dc_integer(0)


def test_dc_at_s_values():
    assert dzeta_c_at_s_integer(0.0, 2) == 0.0625
    assert dzeta_c_at_s_integer(0.0, 1) == 0.0
    with mpmath.workdps(20):
        brute = -3 * mpmath.nsum(lambda n, l: l * (2 * l + n) ** (-4), [1, mpmath.inf], [1, mpmath.inf])
    assert abs(dzeta_c_at_s_integer(3.0, 2) - float(brute)) < 1e-8


@pytest.mark.parametrize("j", [1, 2, 3, 5])
@pytest.mark.parametrize("s", [-0.5, 0.5, 1.5, 3.0])
def test_dc_at_s_matches_finite_difference(j, s):
    h = 1e-5
    fd = (zeta_c_integral(s, j + h) - zeta_c_integral(s, j - h)) / (2 * h)
    assert abs(dzeta_c_at_s_integer(s, j) - fd) < 1e-6


@pytest.mark.parametrize("j", [2, 3, 4])
def test_dc_at_zero_matches_at0_derivative(j):
    assert abs(dzeta_c_at_s_integer(0.0, j) - (j * j - 1) / (12 * j * j)) < 1e-16
    h = 1e-5
    fd = (zeta_c_at0(j + h) - zeta_c_at0(j - h)) / (2 * h)
    assert abs(dzeta_c_at_s_integer(0.0, j) - fd) < 1e-9


def test_dc_at_s_errors():
    with pytest.raises(PoleError):
        dzeta_c_at_s_integer(1.0, 2)
    with pytest.raises(DomainError):
        dzeta_c_at_s_integer(0.5, 0)
