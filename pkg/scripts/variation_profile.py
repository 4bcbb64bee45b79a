"""Profile of zeta_c'(0), xi_c'(0) and their c-derivatives, with a finite-difference check.

    python scripts/variation_profile.py --c 1.5 2 3 4.5 --h 1e-4
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from zetavar.barnes import dzeta_c_prime0_dc, zeta_c_prime0
from zetavar.bessel_zeta import dxi_dc, xi_c_prime0


@dataclass(frozen=True)
class ProfileConfig:
    c_values: tuple[float, ...] = (1.5, 2.0, 3.0, 4.5, 6.0)
    h: float = 1e-4


def central_difference(f, c: float, h: float) -> float:
    return (f(c + h) - f(c - h)) / (2.0 * h)


def run(cfg: ProfileConfig) -> None:
    print(f"{'c':>6} {'zeta_c_prime0':>20} {'dzeta/dc':>20} {'fd diff':>9} {'xi_c_prime0':>20} {'dxi/dc':>20} {'fd diff':>9}")
    for c in cfg.c_values:
        dz = dzeta_c_prime0_dc(c)
        dx = dxi_dc(c).value
        fz = central_difference(zeta_c_prime0, c, cfg.h)
        fx = central_difference(xi_c_prime0, c, cfg.h)
        print(
            f"{c:6.3f} {zeta_c_prime0(c):20.15f} {dz:20.15f} {fz - dz:9.1e} "
            f"{xi_c_prime0(c):20.15f} {dx:20.15f} {fx - dx:9.1e}"
        )


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--c", type=float, nargs="+", default=list(ProfileConfig.c_values))
    ap.add_argument("--h", type=float, default=ProfileConfig.h)
    a = ap.parse_args()
    run(ProfileConfig(tuple(a.c), a.h))


if __name__ == "__main__":
    main()
