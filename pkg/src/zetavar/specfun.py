"""Real special functions: log-gamma, digamma, Hurwitz/Riemann zeta, Bernoulli polynomials.

Everything is binary64. The Hurwitz zeta is evaluated by Euler-Maclaurin
summation and is only supported for s > -3, which covers every value the
zeta-derivative formulas need (s = -1, 0 and the neighbourhood of s = 1).
"""

from __future__ import annotations

import math

from .errors import DomainError, PoleError

EULER_GAMMA = 0.5772156649015329

# B_2, B_4, ..., B_22
_BERNOULLI_EVEN = (
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
)

# Few direct terms keep the s < 0 head free of cancellation; the long
# Bernoulli tail (B_2 .. B_20) makes up for it. B_22 bounds the remainder.
HURWITZ_DIRECT_TERMS = 6
HURWITZ_CORRECTIONS = 10
HURWITZ_MIN_S = -3.0

DIGAMMA_SHIFT = 8.0
# B_2k / (2k) for k = 1..7; the 1/x^14 term keeps the truncation near 1e-15 at x = 8
_DIGAMMA_SERIES = (
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32760.0,
    1.0 / 12.0,
)


def euler_gamma() -> float:
    return EULER_GAMMA


def log_gamma(x: float) -> float:
    """log Gamma(x) for x > 0."""
    if not x > 0.0:
        raise DomainError(f"log_gamma requires x > 0, got {x!r}")
    return math.lgamma(x)


def digamma(x: float) -> float:
    """psi(x) = d/dx log Gamma(x) for x > 0.

    Shifts x upward with psi(x+1) = psi(x) + 1/x until x >= 8, then uses the
    asymptotic series through the 1/x^14 term.
    """
    if not x > 0.0:
        raise DomainError(f"digamma requires x > 0, got {x!r}")
    shift = 0.0
    while x < DIGAMMA_SHIFT:
        shift += 1.0 / x
        x += 1.0
    r = 1.0 / (x * x)
    tail = 0.0
    for coeff in reversed(_DIGAMMA_SERIES):
        tail = r * (coeff + tail)
    return math.log(x) - 0.5 / x - tail - shift


def digamma_gauss(p: int, j: int) -> float:
    """psi(p/j) from Gauss's finite trigonometric sum, 1 <= p <= j-1."""
    if j < 2 or not 1 <= p <= j - 1:
        raise DomainError(f"digamma_gauss requires 1 <= p <= j-1 and j >= 2, got p={p}, j={j}")
    acc = 0.0
    for k in range(1, (j + 1) // 2):
        acc += math.cos(2.0 * k * p * math.pi / j) * math.log(math.sin(k * math.pi / j))
    # cot(pi/2) evaluates to ~6e-17 in floating point; pin the exact zero
    cot = 0.0 if 2 * p == j else 1.0 / math.tan(p * math.pi / j)
    return -EULER_GAMMA - math.log(2.0 * j) - 0.5 * math.pi * cot + 2.0 * acc


def bernoulli_poly(n: int, x: float) -> float:
    if n == 1:
        return x - 0.5
    if n == 2:
        return x * x - x + 1.0 / 6.0
    raise DomainError(f"bernoulli_poly supports degrees 1 and 2, got {n}")


def _hurwitz_check(s: float, q: float) -> None:
    if s == 1.0:
        raise PoleError("Hurwitz zeta has a pole at s = 1")
    if not q > 0.0:
        raise DomainError(f"Hurwitz zeta requires q > 0, got {q!r}")
    if not s > HURWITZ_MIN_S:
        raise DomainError(f"Hurwitz zeta supported only for s > {HURWITZ_MIN_S}, got {s!r}")


def hurwitz_zeta(s: float, q: float) -> float:
    """zeta_H(s; q) = sum_{k>=0} (k+q)^(-s), for s > -3, s != 1, q > 0."""
    _hurwitz_check(s, q)
    n = HURWITZ_DIRECT_TERMS
    head = math.fsum((k + q) ** (-s) for k in range(n))
    a = n + q
    total = a ** (1.0 - s) / (s - 1.0) + 0.5 * a ** (-s)
    # term_k = B_2k/(2k)! * s(s+1)...(s+2k-2) * a^(-s-2k+1)
    rising = s
    power = a ** (-s - 1.0)
    fact = 2.0
    for k in range(1, HURWITZ_CORRECTIONS + 1):
        total += _BERNOULLI_EVEN[k - 1] / fact * rising * power
        rising *= (s + 2 * k - 1) * (s + 2 * k)
        power /= a * a
        fact *= (2 * k + 1) * (2 * k + 2)
    return head + total


def hurwitz_remainder_bound(s: float, q: float) -> float:
    """Magnitude of the first omitted Euler-Maclaurin term of :func:`hurwitz_zeta`."""
    _hurwitz_check(s, q)
    m = HURWITZ_CORRECTIONS + 1
    a = HURWITZ_DIRECT_TERMS + q
    rising = 1.0
    for i in range(2 * m - 1):
        rising *= s + i
    return abs(_BERNOULLI_EVEN[m - 1] / math.factorial(2 * m) * rising * a ** (-s - 2 * m + 1))


def hurwitz_constant_at_one(q: float) -> float:
    """Constant term of zeta_H(1 + e; q) = 1/e + C + O(e); equals -psi(q)."""
    if not q > 0.0:
        raise DomainError(f"q must be positive, got {q!r}")
    return -digamma(q)


def riemann_zeta(s: float) -> float:
    if s == 1.0:
        raise PoleError("Riemann zeta has a pole at s = 1")
    return hurwitz_zeta(s, 1.0)
