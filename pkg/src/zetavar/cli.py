"""Command-line front end: ``zetavar compute|verify|sweep|zeros``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Sequence

from .barnes import (
    ParameterC,
    dzeta_c_prime0_dc_estimate,
    dzeta_c_prime0_dc_integer,
    zeta_c_at0,
    zeta_c_prime0_estimate,
)
from .bessel import j0_zero
from .bessel_zeta import SectorAngle, dxi_dc, xi0_estimate, xi_c_prime0_estimate
from .errors import ConvergenceError, DomainError, ZetaVarError
from .identities import ToleranceProfile, run_all, run_cross_methods, run_identities
from .quadrature import DEFAULT_ABS_TOL

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_NUMERICAL = 3

QUANTITIES = (
    "zeta-c-prime0",
    "dzeta-dc",
    "zeta-c-at0",
    "xi-c-prime0",
    "dxi-dc",
    "xi0",
    "sector-variation",
)
METHODS = ("auto", "integral", "sector", "closed")
FORMATS = ("json", "csv")
FIELDS = ("quantity", "c", "s", "method", "value", "error_estimate", "evaluations", "status")


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class SweepSpec:
    quantity: str
    c_min: float
    c_max: float
    step: float
    method: str = "auto"
    format: str = "json"
    tol: float = DEFAULT_ABS_TOL

    def __post_init__(self) -> None:
        if self.quantity not in QUANTITIES:
            raise UsageError(f"unknown quantity {self.quantity!r}")
        if self.method not in METHODS:
            raise UsageError(f"unknown method {self.method!r}")
        if self.format not in FORMATS:
            raise UsageError(f"unknown format {self.format!r}")
        if not self.c_min <= self.c_max:
            raise UsageError("c_min must not exceed c_max")
        if not self.step > 0.0:
            raise UsageError("step must be positive")
        if not self.tol > 0.0:
            raise UsageError("tol must be positive")

    def grid(self) -> list[float]:
        count = int(math.floor((self.c_max - self.c_min) / self.step + 1e-9)) + 1
        return [round(self.c_min + i * self.step, 12) for i in range(count)]


# --- evaluation -----------------------------------------------------------------


def _record(quantity, c, s, method, value, error, evaluations, status="ok") -> dict:
    return {
        "quantity": quantity,
        "c": c,
        "s": s,
        "method": method,
        "value": value,
        "error_estimate": error,
        "evaluations": evaluations,
        "status": status,
    }


def evaluate(quantity: str, c: float | None, s: float | None, method: str = "auto", tol: float = DEFAULT_ABS_TOL) -> dict:
    """Compute one quantity and return a record; raises UsageError or ZetaVarError."""
    if quantity == "xi0":
        if s is None:
            raise UsageError("xi0 needs --s")
        if method not in ("auto", "integral"):
            raise UsageError("xi0 has only the integral representation")
        q = xi0_estimate(s, tol)
        return _record(quantity, None, s, "integral", q.value, q.error_estimate, q.evaluations)
    if c is None:
        raise UsageError(f"{quantity} needs --c")
    p = ParameterC(c)

    if quantity == "zeta-c-at0":
        if method not in ("auto", "closed"):
            raise UsageError("zeta-c-at0 is available in closed form only")
        return _record(quantity, c, None, "closed", zeta_c_at0(p), 0.0, 0)
    if quantity in ("zeta-c-prime0", "xi-c-prime0"):
        if method not in ("auto", "integral"):
            raise UsageError(f"{quantity} is available by the integral route only")
        fn = zeta_c_prime0_estimate if quantity == "zeta-c-prime0" else xi_c_prime0_estimate
        q = fn(p, tol)
        return _record(quantity, c, None, "integral", q.value, q.error_estimate, q.evaluations)
    if quantity == "dzeta-dc":
        use_closed = method == "closed" or (method == "auto" and p.is_integer)
        if use_closed:
            if not p.is_integer:
                raise UsageError("dzeta-dc closed form needs integer c")
            return _record(quantity, c, None, "closed_integer", dzeta_c_prime0_dc_integer(p.nearest_integer), 0.0, 0)
        if method == "sector":
            raise UsageError("dzeta-dc has no sector route")
        q = dzeta_c_prime0_dc_estimate(p, tol)
        return _record(quantity, c, None, "integral", q.value, q.error_estimate, q.evaluations)
    if quantity in ("dxi-dc", "sector-variation"):
        if method == "closed" and p.is_integer and p.nearest_integer < 2:
            raise UsageError("closed forms need c > 1")
        r = dxi_dc(p, method, tol)
        if quantity == "dxi-dc":
            return _record(quantity, c, None, r.method, r.value, r.error_estimate, r.evaluations)
        factor = -2.0 * c * c / math.pi
        SectorAngle.from_c(c)  # validates the angle
        return _record(quantity, c, None, r.method, factor * r.value, abs(factor) * r.error_estimate, r.evaluations)
    raise UsageError(f"unknown quantity {quantity!r}")


def _sweep_point(args: tuple) -> dict:
    quantity, c, method, tol = args
    try:
        return evaluate(quantity, c, None, method, tol)
    except (ZetaVarError, UsageError) as exc:
        rec = _record(quantity, c, None, method, None, None, 0, "error")
        rec["message"] = str(exc)
        return rec


def run_sweep(sweep: SweepSpec, jobs: int = 1) -> list[dict]:
    tasks = [(sweep.quantity, c, sweep.method, sweep.tol) for c in sweep.grid()]
    if jobs <= 1 or len(tasks) <= 1:
        rows = [_sweep_point(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_sweep_point, tasks))
    return sorted(rows, key=lambda r: r["c"])


# --- formatting -------------------------------------------------------------------


def _number(v) -> str:
    if v is None:
        return "null"
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, int):
        return str(v)
    if not math.isfinite(v):
        return "null"
    return "%.17g" % v


def _json_value(v) -> str:
    return json.dumps(v) if isinstance(v, str) else _number(v)


def format_json_record(rec: dict) -> str:
    keys = list(FIELDS) + [k for k in rec if k not in FIELDS]
    return "{" + ", ".join(f"{json.dumps(k)}: {_json_value(rec.get(k))}" for k in keys) + "}"


def format_records(records: Sequence[dict], fmt: str, single: bool = False) -> str:
    if fmt == "json":
        if single:
            return format_json_record(records[0]) + "\n"
        return "[\n" + ",\n".join("  " + format_json_record(r) for r in records) + "\n]\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(FIELDS)
    for r in records:
        writer.writerow(["" if r.get(k) is None else (_number(r[k]) if not isinstance(r[k], str) else r[k]) for k in FIELDS])
    return buf.getvalue()


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# --- commands ---------------------------------------------------------------------


def cmd_compute(args: argparse.Namespace) -> int:
    rec = evaluate(args.quantity, args.c, args.s, args.method, args.tol)
    _emit(format_records([rec], args.format, single=True), args.out)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    profile = ToleranceProfile().tightened(args.tol) if args.tol is not None else ToleranceProfile()
    runner = {"all": run_all, "identities": run_identities, "cross-methods": run_cross_methods}[args.suite]
    reports = runner(profile)
    lines = [r.line() for r in reports]
    failed = sum(not r.passed for r in reports)
    lines.append(f"{len(reports) - failed}/{len(reports)} passed")
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK if failed == 0 else EXIT_VERIFY_FAILED


def cmd_sweep(args: argparse.Namespace) -> int:
    sweep = SweepSpec(args.quantity, args.c_min, args.c_max, args.step, args.method, args.format, args.tol)
    rows = run_sweep(sweep, args.jobs)
    _emit(format_records(rows, sweep.format), args.out)
    return EXIT_OK if all(r["status"] == "ok" for r in rows) else EXIT_VERIFY_FAILED


def cmd_zeros(args: argparse.Namespace) -> int:
    if args.count < 1:
        raise UsageError("count must be at least 1")
    zeros = [j0_zero(n) for n in range(1, args.count + 1)]
    if args.format == "json":
        text = "[\n" + ",\n".join(f'  {{"n": {z.index}, "value": {_number(z.value)}}}' for z in zeros) + "\n]\n"
    else:
        text = "n,value\n" + "".join(f"{z.index},{_number(z.value)}\n" for z in zeros)
    _emit(text, args.out)
    return EXIT_OK


def _default_jobs() -> int:
    env = os.environ.get("ZVAR_JOBS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return os.cpu_count() or 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="zetavar", description="Barnes and Bessel zeta values and their c-variation.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, fmt=True):
        if fmt:
            p.add_argument("--format", choices=FORMATS, default="json")
        p.add_argument("--out", metavar="FILE", help="write output to FILE instead of stdout")

    p = sub.add_parser("compute", help="compute a single value")
    p.add_argument("--quantity", choices=QUANTITIES, required=True)
    p.add_argument("--c", type=float)
    p.add_argument("--s", type=float)
    p.add_argument("--method", choices=METHODS, default="auto")
    p.add_argument("--tol", type=float, default=DEFAULT_ABS_TOL)
    common(p)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("verify", help="run the identity and cross-method checks")
    p.add_argument("--suite", choices=("all", "identities", "cross-methods"), default="all")
    p.add_argument("--tol", type=float, help="override every tolerance")
    common(p, fmt=False)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="evaluate a quantity over a grid of c")
    p.add_argument("--quantity", choices=QUANTITIES, required=True)
    p.add_argument("--c-min", type=float, required=True)
    p.add_argument("--c-max", type=float, required=True)
    p.add_argument("--step", type=float, required=True)
    p.add_argument("--method", choices=METHODS, default="auto")
    p.add_argument("--tol", type=float, default=DEFAULT_ABS_TOL)
    p.add_argument("--jobs", type=int, default=_default_jobs())
    common(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("zeros", help="list the first positive zeros of J_0")
    p.add_argument("--count", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_zeros)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_USAGE
    try:
        return args.func(args)
    except (UsageError, DomainError) as exc:
        print(f"zetavar: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ConvergenceError, ZetaVarError, ArithmeticError) as exc:
        print(f"zetavar: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
