"""Batch command-line front end.

Three subcommands, all emitting deterministic text/CSV (17 significant
digits, locale-independent):

* ``eval``         - point evaluation of logk / logk-scaled / logi;
* ``region-map``   - analytic and empirical overflow/underflow frontiers;
* ``student-demo`` - the Student-t pdf accuracy comparison.

Exit codes: 0 success, 2 flag parsing, 3 domain errors, 4 convergence
failures.
"""

from __future__ import annotations

import argparse
import math
import sys

import numpy as np

from .exceptions import ConvergenceError, DomainError
from .floatsys import parse_float_system
from .logk import log_i, log_k, log_k_scaled
from .regions import (
    FrontierKind,
    _overflow_necessary_from_log,
    _overflow_sufficient_from_log,
    _underflow_necessary_from_log,
    _underflow_sufficient_from_log,
    frontier_search,
)
from .studentcf import CFMethod, error_report


def _fmt(value: float) -> str:
    return f"{value:.17g}"


_EVAL_FUNCTIONS = {
    "logk": log_k,
    "logk-scaled": log_k_scaled,
    "logi": log_i,
}

_METHOD_FLAGS = {
    "direct": CFMethod.DIRECT,
    "logdirect": CFMethod.LOG_DIRECT,
    "logrec": CFMethod.LOG_RECURSION,
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="logbessel",
        description="log-domain K-Bessel evaluation, floating-point range "
                    "maps, and the Student-t inversion experiment")
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate one function at (nu, z)")
    p_eval.add_argument("--nu", type=float, required=True)
    p_eval.add_argument("--z", type=float, required=True)
    p_eval.add_argument("--function", choices=sorted(_EVAL_FUNCTIONS),
                        default="logk")
    p_eval.add_argument("--output", choices=["text", "csv"], default="text")

    p_map = sub.add_parser("region-map",
                           help="frontier curves for one system and kind")
    p_map.add_argument("--float-system", default="double",
                       help="single | double | custom:P,L,U")
    p_map.add_argument("--kind", choices=["overflow", "underflow"],
                       required=True)
    p_map.add_argument("--z-min", type=float, required=True)
    p_map.add_argument("--z-max", type=float, required=True)
    p_map.add_argument("--z-steps", type=int, required=True)
    p_map.add_argument("--out", default=None, help="CSV path (default stdout)")

    p_demo = sub.add_parser("student-demo",
                            help="pdf accuracy comparison over a grid")
    p_demo.add_argument("--nu-list", default="1,10,100,1000,10000",
                        help="comma-separated degrees of freedom")
    p_demo.add_argument("--x-min", type=float, default=-5.0)
    p_demo.add_argument("--x-max", type=float, default=5.0)
    p_demo.add_argument("--x-steps", type=int, default=101)
    p_demo.add_argument("--methods", default="direct,logdirect,logrec")
    p_demo.add_argument("--float-system", default="double",
                        choices=["single", "double"],
                        help="single emulates binary32 round-trips")
    p_demo.add_argument("--out", default=None, help="CSV path (default stdout)")
    return parser


def _emit(lines: list[str], path: str | None) -> None:
    text = "\n".join(lines) + "\n"
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", newline="") as fh:
            fh.write(text)


def _run_eval(args) -> None:
    fn = _EVAL_FUNCTIONS[args.function]
    value = fn(args.nu, args.z)
    if args.output == "csv":
        print("nu,z,value")
        print(f"{_fmt(args.nu)},{_fmt(args.z)},{_fmt(value)}")
    else:
        print(_fmt(value))


def _run_region_map(args) -> None:
    sys_ = parse_float_system(args.float_system)
    if args.z_steps < 1 or args.z_min <= 0.0 or args.z_max <= args.z_min:
        raise DomainError("need 0 < z-min < z-max and z-steps >= 1")
    grid = list(np.geomspace(args.z_min, args.z_max, args.z_steps))
    kind = FrontierKind(args.kind)
    curve = frontier_search(sys_, kind, grid)
    lines = []
    if kind is FrontierKind.OVERFLOW:
        logb = sys_.log_overflow_level
        lines.append("z,nu_sufficient,nu_empirical,nu_necessary")
        for z, nu_star in curve.samples:
            lines.append(",".join(_fmt(v) for v in (
                z, _overflow_sufficient_from_log(logb, z), nu_star,
                _overflow_necessary_from_log(logb, z))))
    else:
        # the searched variable is z here, so the grid enumerates orders
        logb = sys_.log_underflow_level
        z_suff = _underflow_sufficient_from_log(logb)
        lines.append("nu,z_sufficient,z_empirical,z_necessary")
        for z_star, nu in curve.samples:
            lines.append(",".join(_fmt(v) for v in (
                nu, z_suff, z_star,
                _underflow_necessary_from_log(logb, nu))))
    _emit(lines, args.out)


def _run_student_demo(args) -> None:
    try:
        nu_list = [float(v) for v in args.nu_list.split(",") if v]
        methods = [_METHOD_FLAGS[m] for m in args.methods.split(",") if m]
    except (ValueError, KeyError) as exc:
        raise DomainError(f"bad flag value: {exc}") from exc
    if args.x_steps < 1:
        raise DomainError("x-steps must be >= 1")
    if args.x_steps == 1:
        xs = [args.x_min]
    else:
        xs = list(np.linspace(args.x_min, args.x_max, args.x_steps))
    rows = error_report(nu_list, xs, methods,
                        single_precision=(args.float_system == "single"))
    lines = ["nu,x,method,pdf_gilpelaez,pdf_closed,abs_error,overflow_flag"]
    for r in rows:
        lines.append(",".join([
            _fmt(r.nu), _fmt(r.x), r.method.value,
            _fmt(r.pdf_gil_pelaez), _fmt(r.pdf_closed), _fmt(r.abs_error),
            "1" if r.cf_overflowed else "0"]))
    _emit(lines, args.out)


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "eval":
            _run_eval(args)
        elif args.command == "region-map":
            _run_region_map(args)
        else:
            _run_student_demo(args)
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return 3
    except ConvergenceError as exc:
        print(f"convergence failure: {exc}", file=sys.stderr)
        return 4
    return 0


if __name__ == "__main__":
    sys.exit(main())
