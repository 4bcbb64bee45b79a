"""Tabulate d xi_c'(0)/dc from every route over a grid of c and report the spread.

    python scripts/compare_variation_routes.py --c-min 1.1 --c-max 8 --step 0.05
"""

from __future__ import annotations

import argparse
import csv
import sys
from dataclasses import dataclass

import numpy as np

from zetavar.barnes import ParameterC
from zetavar.bessel_zeta import dxi_dc_closed_integer, dxi_dc_closed_noninteger, dxi_dc_integral, dxi_dc_sector


@dataclass(frozen=True)
class RouteSweepConfig:
    c_min: float = 1.1
    c_max: float = 8.0
    step: float = 0.05
    tol: float = 1e-12


def route_values(c: float, tol: float) -> dict[str, float]:
    p = ParameterC(c)
    closed = dxi_dc_closed_integer(p.nearest_integer) if p.is_integer else dxi_dc_closed_noninteger(c)
    return {
        "integral": dxi_dc_integral(c, tol).value,
        "sector": dxi_dc_sector(c, tol).value,
        "closed": closed.value,
    }


def run(cfg: RouteSweepConfig, out=sys.stdout) -> float:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["c", "integral", "sector", "closed", "spread"])
    worst = 0.0
    for c in np.arange(cfg.c_min, cfg.c_max + 0.5 * cfg.step, cfg.step):
        c = round(float(c), 12)
        vals = route_values(c, cfg.tol)
        spread = max(vals.values()) - min(vals.values())
        worst = max(worst, spread)
        writer.writerow([f"{c:.6g}"] + [f"{v:.17g}" for v in vals.values()] + [f"{spread:.3e}"])
    print(f"# max spread {worst:.3e}", file=sys.stderr)
    return worst


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--c-min", type=float, default=RouteSweepConfig.c_min)
    ap.add_argument("--c-max", type=float, default=RouteSweepConfig.c_max)
    ap.add_argument("--step", type=float, default=RouteSweepConfig.step)
    ap.add_argument("--tol", type=float, default=RouteSweepConfig.tol)
    a = ap.parse_args()
    run(RouteSweepConfig(a.c_min, a.c_max, a.step, a.tol))


if __name__ == "__main__":
    main()
