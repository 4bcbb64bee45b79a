"""Convergence of the truncated J_0 zero sum toward the integral value of xi_0(s).

    python scripts/xi0_zero_sum_convergence.py --s 0.6 0.75 0.9
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass, field

from zetavar.bessel_zeta import xi0, xi0_zero_sum


@dataclass(frozen=True)
class ZeroSumConfig:
    s_values: tuple[float, ...] = (0.6, 0.75, 0.9)
    zero_counts: tuple[int, ...] = field(default=(10, 50, 100, 500, 2000))


def run(cfg: ZeroSumConfig) -> list[tuple[float, int, float]]:
    rows = []
    print(f"{'s':>6} {'zeros':>6} {'zero sum':>22} {'diff':>10}")
    for s in cfg.s_values:
        ref = xi0(s)
        for n in cfg.zero_counts:
            approx = xi0_zero_sum(s, n)
            rows.append((s, n, approx - ref))
            print(f"{s:6.3f} {n:6d} {approx:22.17f} {approx - ref:10.2e}")
    return rows


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--s", type=float, nargs="+", default=list(ZeroSumConfig.s_values))
    ap.add_argument("--zeros", type=int, nargs="+", default=[10, 50, 100, 500, 2000])
    a = ap.parse_args()
    run(ZeroSumConfig(tuple(a.s), tuple(a.zeros)))


if __name__ == "__main__":
    main()
