"""Barnes and Bessel zeta functions, their derivatives at zero, and their variation in c."""

from .barnes import (
    LaurentCoefficients,
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
from .bessel import BesselZero, bessel_j0, bessel_j1, j0_zero, log_i0_regularized
from .bessel_zeta import (
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
    xi_c_prime0,
)
from .errors import ConvergenceError, DomainError, PoleError, ZetaVarError
from .identities import IdentityReport, ToleranceProfile, run_all
from .quadrature import QuadratureResult, integrate_finite, integrate_real_line_even, integrate_to_infinity
from .specfun import (
    bernoulli_poly,
    digamma,
    digamma_gauss,
    euler_gamma,
    hurwitz_constant_at_one,
    hurwitz_zeta,
    log_gamma,
    riemann_zeta,
)

__version__ = "0.1.0"
