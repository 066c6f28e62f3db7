"""Command-line front end.

Every successful run prints one JSON envelope on stdout::

    {"schema_version": "1", "command": ..., "inputs": {...},
     "results": ..., "warnings": [...]}

Failures print a JSON error object on stderr and exit with

    2  bad arguments
    3  domain / branch / degeneracy errors
    4  non-convergence
    5  I/O failure
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
import tempfile
from pathlib import Path

import numpy as np

from . import errors
from .expo import Y_ZERO_NOTE, fibonacci_sweep, solve_fermat, solve_fibonacci
from .trinomial import RootSet, Trinomial, solve_trinomial
from .wq_core import (
    PRINCIPAL,
    RESIDUAL_TOL,
    SECONDARY,
    branch_point,
    wq_eval_complex,
    wq_eval_real,
)

SCHEMA_VERSION = "1"

EXIT_ARGS = 2
EXIT_DOMAIN = 3
EXIT_CONVERGENCE = 4
EXIT_IO = 5

FIGURE_Y_RANGE = {3: (-500, 500), 4: (-20, 20)}
FIGURE2_Q = (0.75, 5.0 / 3.0)


class CliError(Exception):
    def __init__(self, code: int, kind: str, message: str):
        super().__init__(message)
        self.code = code
        self.kind = kind


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise CliError(EXIT_ARGS, "ArgumentError", message)


def _num(v):
    if v is None:
        return None
    v = float(v) + 0.0
    return v if math.isfinite(v) else None


def _fmt(v) -> str:
    """Fixed 12-significant-digit CSV cell; empty for missing values."""
    if v is None or not math.isfinite(v):
        return ""
    return f"{v:#.12g}"


def _wq_payload(res) -> dict:
    return {
        "w": {"re": _num(res.w.real), "im": _num(res.w.imag)},
        "branch": str(res.branch),
        "iterations": res.iterations,
        "residual": _num(res.residual),
    }


def _roots_payload(rs: RootSet) -> dict:
    return {
        "count": len(rs),
        "roots": [
            {
                "re": _num(r.x.real),
                "im": _num(r.x.imag),
                "residual": _num(r.residual),
                "formula": r.formula.value,
                "branch": None if r.wq_branch is None else str(r.wq_branch),
                "is_real": r.is_real,
            }
            for r in rs
        ],
    }


def _cmd_eval(args):
    if len(args.z) not in (1, 2):
        raise CliError(EXIT_ARGS, "ArgumentError", "--z takes RE or RE IM")
    z = complex(args.z[0], args.z[1] if len(args.z) == 2 else 0.0)
    tol = RESIDUAL_TOL if args.tol is None else args.tol
    inputs = {"q": args.q, "z": {"re": z.real, "im": z.imag}, "branch": args.branch, "tol": tol}
    if args.branch == "all":
        results = [_wq_payload(r) for r in wq_eval_complex(args.q, z, tol=tol)]
    else:
        if z.imag != 0.0:
            raise CliError(EXIT_ARGS, "ArgumentError",
                           "complex z needs --branch all (real branches take real z)")
        br = PRINCIPAL if args.branch == "principal" else SECONDARY
        results = [_wq_payload(wq_eval_real(args.q, z.real, br, tol=tol))]
    return inputs, {"values": results}, []


def _cmd_solve(args):
    if args.kind == "trinomial":
        inputs = {"a": args.a, "alpha": args.alpha, "b": args.b, "beta": args.beta, "c": args.c}
        try:
            t = Trinomial(args.a, args.alpha, args.b, args.beta, args.c)
        except ValueError as exc:
            raise CliError(EXIT_ARGS, "ArgumentError", str(exc)) from exc
        rs = solve_trinomial(t)
    elif args.kind == "fermat":
        inputs = {"A": args.A, "B": args.B, "C": args.C}
        rs = solve_fermat(args.A, args.B, args.C)
    else:
        inputs = {"y": args.y}
        rs = solve_fibonacci(args.y)
    return inputs, _roots_payload(rs), list(rs.warnings)


def _figure_rows(args):
    fig = args.figure
    n = args.points
    if fig == 1:
        z_b = branch_point(1.0).z_b
        zs = np.linspace(z_b if args.z_min is None else args.z_min,
                         6.0 if args.z_max is None else args.z_max, n)
        header = ["z", "w0", "wm1"]
        rows = []
        for z in zs:
            z = float(z)
            rows.append([_fmt(z), _fmt(_try_real(1.0, z, PRINCIPAL)),
                         _fmt(_try_real(1.0, z, SECONDARY) if z < 0 else None)])
        return header, rows, []
    if fig == 2:
        qs = tuple(args.q) if args.q else FIGURE2_Q
        z_min = args.z_min
        if z_min is None:
            lows = [bp.z_b for bp in map(branch_point, qs) if bp.exists]
            z_min = min(lows) if lows else -0.5
        zs = np.linspace(z_min, 6.0 if args.z_max is None else args.z_max, n)
        header = ["z"] + [f"w_q{_qlabel(q)}" for q in qs]
        rows = [[_fmt(float(z))] + [_fmt(_try_real(q, float(z), PRINCIPAL)) for q in qs] for z in zs]
        return header, rows, []
    lo, hi = FIGURE_Y_RANGE[fig]
    lo = lo if args.y_min is None else args.y_min
    hi = hi if args.y_max is None else args.y_max
    warnings = []
    sweep = fibonacci_sweep(lo, hi, include_zero=args.include_zero)
    if args.include_zero and lo <= 0 <= hi:
        warnings.append(Y_ZERO_NOTE)
    bad = [r.y for r in sweep if not r.ok]
    if bad:
        warnings.append(f"no verified real root for y in {bad}")
    header = ["y", "x"]
    rows = [[str(r.y), _fmt(r.x)] for r in sweep]
    return header, rows, warnings


def _qlabel(q: float) -> str:
    return f"{q:.4f}".rstrip("0").rstrip(".")


def _try_real(q, z, branch):
    try:
        return wq_eval_real(q, z, branch).w.real
    except (errors.DomainError, errors.BranchUnavailable):
        return None


def _write_atomic(path: Path, text: str):
    directory = path.parent if str(path.parent) else Path(".")
    fd, tmp = tempfile.mkstemp(prefix=f".{path.name}.", suffix=".tmp", dir=directory)
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _cmd_plot_data(args):
    header, rows, warnings = _figure_rows(args)
    text = ",".join(header) + "\n" + "".join(",".join(r) + "\n" for r in rows)
    path = Path(args.out)
    try:
        _write_atomic(path, text)
    except OSError as exc:
        raise CliError(EXIT_IO, type(exc).__name__, str(exc)) from exc
    inputs = {"figure": args.figure, "out": str(path), "include_zero": args.include_zero}
    return inputs, {"path": str(path), "rows": len(rows), "columns": header}, warnings


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="lambert-tsallis", description="Lambert-Tsallis W_q evaluation and equation solving.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    pe = sub.add_parser("eval", help="evaluate W_q(z)")
    pe.add_argument("--q", type=float, required=True)
    pe.add_argument("--z", type=float, nargs="+", required=True, metavar="RE [IM]")
    pe.add_argument("--branch", choices=["principal", "secondary", "all"], default="principal")
    pe.add_argument("--tol", type=float, default=None, help="residual tolerance override")
    pe.set_defaults(func=_cmd_eval)

    ps = sub.add_parser("solve", help="solve a trinomial, Fermat or Fibonacci equation")
    kinds = ps.add_subparsers(dest="kind", required=True, parser_class=_Parser)
    pt = kinds.add_parser("trinomial")
    for name in ("a", "alpha", "b", "beta", "c"):
        pt.add_argument(f"--{name}", type=float, required=True)
    pf = kinds.add_parser("fermat")
    for name in ("A", "B", "C"):
        pf.add_argument(f"--{name}", type=float, required=True)
    pb = kinds.add_parser("fibonacci")
    pb.add_argument("--y", type=float, required=True)
    ps.set_defaults(func=_cmd_solve)

    pp = sub.add_parser("plot-data", help="write figure data as CSV")
    pp.add_argument("--figure", type=int, choices=[1, 2, 3, 4], required=True)
    pp.add_argument("--out", required=True)
    pp.add_argument("--points", type=int, default=601, help="grid size for figures 1-2")
    pp.add_argument("--z-min", type=float, default=None)
    pp.add_argument("--z-max", type=float, default=None)
    pp.add_argument("--q", type=float, action="append", help="figure 2 q values (repeatable)")
    pp.add_argument("--y-min", type=int, default=None)
    pp.add_argument("--y-max", type=int, default=None)
    zero = pp.add_mutually_exclusive_group()
    zero.add_argument("--include-zero", dest="include_zero", action="store_true")
    zero.add_argument("--skip-zero", dest="include_zero", action="store_false")
    pp.set_defaults(func=_cmd_plot_data, include_zero=False)
    return p


def _emit_error(code: int, kind: str, message: str):
    err = {"schema_version": SCHEMA_VERSION, "error": {"type": kind, "message": message},
           "exit_code": code}
    sys.stderr.write(json.dumps(err) + "\n")
    return code


_EXIT_FOR = (
    ((errors.NoConvergence, errors.EmptyResult), EXIT_CONVERGENCE),
    ((errors.DomainError, errors.BranchUnavailable, errors.DegenerateError,
      errors.NoSolution, errors.UnsupportedQ, errors.RangeError, OverflowError), EXIT_DOMAIN),
)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        inputs, results, warnings = args.func(args)
    except CliError as exc:
        return _emit_error(exc.code, exc.kind, str(exc))
    except Exception as exc:  # noqa: BLE001 - mapped to exit codes
        for types, code in _EXIT_FOR:
            if isinstance(exc, types):
                return _emit_error(code, type(exc).__name__, str(exc))
        if isinstance(exc, ValueError):
            return _emit_error(EXIT_ARGS, type(exc).__name__, str(exc))
        raise
    envelope = {
        "schema_version": SCHEMA_VERSION,
        "command": args.command if args.command != "solve" else f"solve {args.kind}",
        "inputs": inputs,
        "results": results,
        "warnings": warnings,
    }
    sys.stdout.write(json.dumps(envelope) + "\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
