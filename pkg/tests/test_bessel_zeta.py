import math

import mpmath
import pytest
from hypothesis import given
from hypothesis import strategies as st

from zetavar.barnes import dzeta_c_prime0_dc_integer, zeta_c_prime0
from zetavar.bessel_zeta import (
    SectorAngle,
    VariationResult,
    dxi_dc,
    dxi_dc_closed_integer,
    dxi_dc_closed_noninteger,
    dxi_dc_integral,
    dxi_dc_sector,
    sector_variation,
    xi0,
    xi0_prime0,
    xi0_zero_sum,
    xi_c_prime0,
)
from zetavar.errors import DomainError, PoleError

HALF_LOG_2PI = 0.9189385332046727
INTEGERS = range(2, 11)
NONINTEGERS = (1.3, 1.5, 2.5, 3.25, 3.7, 4.25, 4.75, 6.8)


def test_xi0_at_zero():
    # the continued sum over J_0 zeros takes -1/4 at s = 0
    assert xi0(0.0) == -0.25
    assert abs(xi0(1e-8) + 0.25) < 1e-6
    assert abs(xi0(-1e-8) + 0.25) < 1e-6


def test_xi0_prime0():
    assert abs(xi0_prime0() + HALF_LOG_2PI) < 1e-12
    assert abs(xi0_prime0("representation") + HALF_LOG_2PI) < 1e-12
    h = 1e-4
    assert abs((xi0(h) - xi0(-h)) / (2 * h) + HALF_LOG_2PI) < 1e-6
    assert abs(xi0_prime0() - float(mpmath.zeta(0, derivative=1))) < 1e-15


@pytest.mark.parametrize("s", [0.75, 0.9])
def test_xi0_matches_zero_sum(s):
    assert abs(xi0(s) - xi0_zero_sum(s, 500)) < 1e-6


def test_xi0_against_mpmath_quadrature():
    # independent evaluation of the same continuation at s = 0.75 with tanh-sinh
    s = mpmath.mpf(3) / 4
    with mpmath.workdps(25):
        near = mpmath.quad(lambda z: z ** (-2 * s) * mpmath.besseli(1, z) / mpmath.besseli(0, z), [0, 1])
        g = lambda z: mpmath.log(mpmath.besseli(0, z)) - z + mpmath.log(2 * mpmath.pi * z) / 2  # noqa: E731
        far = mpmath.quad(lambda z: z ** (-2 * s - 1) * g(z), [1, 10, 100, mpmath.inf])
        bracket = near - mpmath.log(mpmath.besseli(0, 1)) + 1 - mpmath.log(2 * mpmath.pi) / 2
        bracket += 2 * s * far + 1 / (2 * s - 1) - 1 / (4 * s)
        ref = mpmath.sin(mpmath.pi * s) / mpmath.pi * bracket
    assert abs(xi0(0.75) - float(ref)) < 1e-10


def test_xi0_domain():
    with pytest.raises(PoleError):
        xi0(0.5)
    for s in (-0.5, 1.0, 1.5):
        with pytest.raises(DomainError):
            xi0(s)


def test_xi0_pole_residue():
    # near s = 1/2 the 1/(2s-1) term dominates with weight sin(pi/2)/pi
    e = 1e-6
    assert abs(xi0(0.5 + e) * 2 * e * math.pi - 1.0) < 1e-4


def test_xi_c_prime0_composition():
    expected = 0.5 * (zeta_c_prime0(1.0) + 5 / 24 - math.log(2) / 6)
    assert abs(xi_c_prime0(1.0) - expected) < 1e-15
    assert abs(xi_c_prime0(1.0) - 0.4231630963721) < 1e-12
    assert abs(xi_c_prime0(2.0) - 0.5 * (zeta_c_prime0(2.0) + 5 / 48 - 5 * math.log(2) / 24)) < 1e-15


@pytest.mark.parametrize("c", [1.4, 2.0, 3.5])
def test_xi_c_prime0_derivative_consistency(c):
    h = 1e-4
    fd = (xi_c_prime0(c + h) - xi_c_prime0(c - h)) / (2 * h)
    assert abs(fd - dxi_dc_integral(c).value) < 1e-6


def test_integral_route_spot_values():
    for j in (2, 3):
        expected = 0.5 * (dzeta_c_prime0_dc_integer(j) - 5 / (24 * j * j) - math.log(2) / 12 * (1 - 1 / j**2))
        assert abs(dxi_dc_integral(j).value - expected) < 1e-12
    assert abs(dxi_dc_integral(2).value + 0.0652954) < 1e-7
    assert abs(dxi_dc_integral(3).value + 0.0441343) < 1e-7
    assert abs(dxi_dc_integral(1).value + 5 / 24) < 1e-12


@pytest.mark.parametrize("j", INTEGERS)
def test_integer_three_way(j):
    a = dxi_dc_integral(j).value
    b = dxi_dc_sector(j).value
    c = dxi_dc_closed_integer(j).value
    assert max(abs(a - b), abs(a - c), abs(b - c)) < 1e-9


def test_closed_integer_spot_values():
    g = 0.5772156649015329
    # c = 2 has an empty log-sin sum: -1/24 - 1/24 + 3 gamma/96
    assert abs(dxi_dc_closed_integer(2).value - (-1 / 24 - 1 / 24 + 3 * g / 96)) < 1e-15
    assert abs(dxi_dc_closed_integer(2).value + 0.0652953) < 1e-7
    assert abs(dxi_dc_closed_integer(3).value + 0.0441342) < 1e-6


@pytest.mark.parametrize("c", NONINTEGERS)
def test_noninteger_three_way(c):
    a = dxi_dc_integral(c).value
    b = dxi_dc_sector(c).value
    n = dxi_dc_closed_noninteger(c).value
    assert max(abs(a - b), abs(a - n), abs(b - n)) < 1e-8


@pytest.mark.parametrize("c", [3.0 - 1e-3, 3.0 + 1e-3, 3.0001])
def test_continuity_at_integer(c):
    r = dxi_dc_closed_noninteger(c)
    assert abs(r.value - dxi_dc_closed_integer(3).value) < 1e-3
    assert abs(r.value - dxi_dc_integral(c).value) < 1e-8
    assert r.warnings


@pytest.mark.parametrize("c", [2.0 - 1e-3, 2.0 + 1e-3, 4.0 + 1e-6])
def test_near_even_integer_peak(c):
    # cos(pi c) -> 1 makes the real-line integrand sharply peaked at s = 0
    assert abs(dxi_dc_sector(c).value - dxi_dc_integral(c).value) < 1e-8


@given(st.floats(min_value=1.05, max_value=9.0))
def test_sector_matches_integral_everywhere(c):
    assert abs(dxi_dc_sector(c).value - dxi_dc_integral(c).value) < 1e-8


def test_window_bounds_coincide_for_nonintegers():
    for c in NONINTEGERS:
        assert math.floor(c / 2) == math.ceil(c / 2) - 1


def test_sector_variation_chain_rule():
    for c in (2.0, 3.0, 2.5):
        angle = SectorAngle.from_c(c)
        v = sector_variation(angle)
        assert abs(v * (-math.pi / (2 * c * c)) - dxi_dc(c).value) < 1e-15
    assert abs(sector_variation(SectorAngle(math.pi / 2)) - 8 / math.pi * 0.0652953438) < 1e-9
    assert abs(sector_variation(SectorAngle(math.pi / 3)) - 18 / math.pi * 0.0441342730) < 1e-9


def test_sector_angle_round_trip():
    for c in (1.3, 2.0, 7.7):
        a = SectorAngle.from_c(c)
        assert abs(a.alpha * a.c - math.pi) <= 2 * math.ulp(math.pi)
    with pytest.raises(DomainError):
        SectorAngle(math.pi)


def test_dispatch():
    assert dxi_dc(2.0).method == "closed_integer"
    assert dxi_dc(2.0 + 1e-12).method == "closed_integer"
    assert dxi_dc(2.5).method == "closed_noninteger"
    assert dxi_dc(2.5, "closed").method == "closed_noninteger"
    assert dxi_dc(1.0).method == "integral"
    assert dxi_dc(0.6).method == "integral"
    assert dxi_dc(2.5, "sector").method == "sector"
    with pytest.raises(DomainError):
        dxi_dc_closed_noninteger(3.0)
    with pytest.raises(DomainError):
        dxi_dc_closed_integer(1)
    with pytest.raises(DomainError):
        dxi_dc_sector(0.9)
    with pytest.raises(DomainError):
        VariationResult(2.0, "bogus", 0.0, 0.0)
