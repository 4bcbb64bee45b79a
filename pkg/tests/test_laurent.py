from fractions import Fraction

import numpy as np
import pytest

from zetavar.barnes import bose_product, bose_product_dc, regularized_product, regularized_product_dc, SERIES_SWITCH
from zetavar.laurent import bernoulli_numbers, bose_derivative_series, bose_series


def test_bernoulli_numbers():
    b = bernoulli_numbers(12)
    assert b[:5] == (Fraction(1), Fraction(-1, 2), Fraction(1, 6), Fraction(0), Fraction(-1, 30))
    assert b[12] == Fraction(-691, 2730)
    assert all(b[k] == 0 for k in range(3, 13, 2))


@pytest.mark.parametrize("c", [0.3, 1.0, 2.5, 6.8])
def test_product_series_low_coefficients(c):
    s = bose_series(c) * bose_series(1.0)
    assert s.coefficient(-2) == pytest.approx(1 / c, rel=1e-15)
    assert s.coefficient(-1) == pytest.approx(-0.5 - 0.5 / c, rel=1e-15)
    assert s.coefficient(0) == pytest.approx(0.25 + c / 12 + 1 / (12 * c), rel=1e-15)
    assert s.coefficient(1) == pytest.approx(-(1 + c) / 24, rel=1e-14)
    assert s.coefficient(2) == pytest.approx(-1 / (720 * c) + c / 144 - c**3 / 720, rel=1e-13, abs=1e-16)
    assert s.coefficient(3) == pytest.approx((1 + c**3) / 1440, rel=1e-13)


@pytest.mark.parametrize("c", [0.5, 2.5])
def test_derivative_series_poles(c):
    g = (bose_derivative_series(c) * bose_series(1.0)).shift(1)
    assert g.coefficient(-2) == pytest.approx(-1 / c**2, rel=1e-15)
    assert g.coefficient(-1) == pytest.approx(1 / (2 * c**2), rel=1e-15)
    assert g.coefficient(0) == pytest.approx(1 / 12 - 1 / (12 * c**2), rel=1e-14, abs=1e-17)


@pytest.mark.parametrize("c", [0.3, 1.0, 2.5, 6.8])
def test_series_matches_direct_at_switch(c):
    t0 = SERIES_SWITCH / max(1.0, c)
    below = np.array([t0 * (1 - 1e-13)])
    above = np.array([t0 * (1 + 1e-13)])
    assert abs(regularized_product(below, c)[0] - regularized_product(above, c)[0]) < 1e-12
    assert abs(regularized_product_dc(below, c)[0] - regularized_product_dc(above, c)[0]) < 1e-12


def test_series_against_high_precision():
    import mpmath

    with mpmath.workdps(50):
        c = mpmath.mpf(2.5)
        for t in (1e-6, 1e-3, 0.05, 0.19):
            T = mpmath.mpf(t)
            F = 1 / ((mpmath.exp(c * T) - 1) * (mpmath.exp(T) - 1))
            ref = (F - 1 / (c * T**2) + (mpmath.mpf(1) / 2 + 1 / (2 * c)) / T - (mpmath.mpf(1) / 4 + c / 12 + 1 / (12 * c))) / T
            assert abs(regularized_product(np.array([t]), 2.5)[0] - float(ref)) < 1e-13


def test_direct_forms_positive_and_decaying():
    t = np.array([1.0, 5.0, 20.0])
    assert np.all(bose_product(t, 2.0) > 0)
    assert np.all(bose_product_dc(t, 2.0) < 0)
    assert np.all(np.diff(bose_product(t, 2.0)) < 0)
