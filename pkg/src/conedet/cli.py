"""Command line front end.

Subcommands:

* det     evaluate one log-determinant (det D = exp(-zeta'(0, D)))
* table   evaluate a kind over one or two parameter grids (csv or json)
* asympt  compare the orbifold determinant against its small-radius
          expansions on an eta grid
* verify  run the cross-formula identity suite

Exit codes: 0 success, 1 bad arguments or invalid parameter values,
2 identity verification failures, 3 quadrature failure.  All numbers are
printed with up to 17 significant digits, enough to round-trip a double,
and output for a given invocation is byte-for-byte deterministic.
"""

from __future__ import annotations

import argparse
import math
import sys
from typing import Callable

from .determinants import (
    ConeGeometry,
    CurvedDiskGeometry,
    fp_asymptotics_reference,
    logdet_flat_disk,
    logdet_hyperbolic_cone,
    logdet_orbifold_cone,
    logdet_poincare_cap,
    small_eta_asymptotics,
    verify_identities,
    zeta_prime0_spherical_cone,
    zeta_prime0_spindle,
    zeta_prime0_unit_disk_cone,
)
from .quadrature import QuadratureError
from .special_functions import EvalResult

__all__ = ["main", "run"]


class _ArgError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad usage; we reserve 2 for identity
    # failures, so route usage problems through the normal error path
    def error(self, message: str) -> None:  # type: ignore[override]
        raise _ArgError(message)


def _fmt(x: object) -> str:
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, int):
        return str(x)
    return format(float(x), ".17g")


def _json(obj: object) -> str:
    if isinstance(obj, dict):
        body = ", ".join(f'"{k}": {_json(v)}' for k, v in obj.items())
        return "{" + body + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(_json(v) for v in obj) + "]"
    if isinstance(obj, str):
        return '"' + obj.replace("\\", "\\\\").replace('"', '\\"') + '"'
    return _fmt(obj)


def _negated(res: EvalResult, tag: str) -> EvalResult:
    return EvalResult(-res.value, res.abs_err, tag)


def _closed(value: float, tag: str) -> EvalResult:
    return EvalResult(value, 2e-14 * (1.0 + abs(value)), tag)


_KINDS: dict[str, tuple[tuple[str, ...], Callable[[dict], EvalResult]]] = {
    "hyperbolic": (
        ("a", "eta"),
        lambda p: logdet_hyperbolic_cone(ConeGeometry(p["a"], p["eta"])),
    ),
    "orbifold": (("w", "eta"), lambda p: logdet_orbifold_cone(p["w"], p["eta"])),
    "spindle": (
        ("a", "K"),
        lambda p: _negated(zeta_prime0_spindle(p["a"], p["K"]), "spindle-logdet"),
    ),
    "sphericalcone": (
        ("a", "K"),
        lambda p: _negated(zeta_prime0_spherical_cone(p["a"], p["K"]), "spherical-cone-logdet"),
    ),
    "diskcone": (
        ("a", "K"),
        lambda p: _negated(
            zeta_prime0_unit_disk_cone(CurvedDiskGeometry(p["a"], p["K"])), "disk-cone-logdet"
        ),
    ),
    "flatdisk": (("r",), lambda p: _closed(logdet_flat_disk(p["r"]), "flat-disk-logdet")),
    "poincarecap": (
        ("eta",),
        lambda p: _closed(logdet_poincare_cap(p["eta"]), "poincare-cap-logdet"),
    ),
}


def _parse_grid(spec: str) -> list[float]:
    parts = [p.strip() for p in spec.split(",")]
    if len(parts) not in (3, 4):
        raise ValueError(f"grid must be start,stop,count[,log], got {spec!r}")
    is_log = False
    if len(parts) == 4:
        if parts[3] != "log":
            raise ValueError(f"fourth grid field must be 'log', got {parts[3]!r}")
        is_log = True
    start, stop = float(parts[0]), float(parts[1])
    count = int(parts[2])
    if not (math.isfinite(start) and math.isfinite(stop)):
        raise ValueError(f"grid endpoints must be finite, got {spec!r}")
    if count < 1:
        raise ValueError(f"grid count must be >= 1, got {count}")
    if count == 1:
        return [start]
    if start >= stop:
        raise ValueError(f"grid needs start < stop for count > 1, got {spec!r}")
    if is_log:
        if start <= 0.0 or stop <= 0.0:
            raise ValueError("log grids need positive endpoints")
        ratio = stop / start
        vals = [start * ratio ** (k / (count - 1)) for k in range(count)]
    else:
        vals = [start + (stop - start) * k / (count - 1) for k in range(count)]
    vals[-1] = stop
    return vals


def _parse_named_grid(spec: str) -> tuple[str, list[float]]:
    name, eq, rest = spec.partition("=")
    if not eq or not name.strip():
        raise ValueError(f"grid must be name=start,stop,count[,log], got {spec!r}")
    return name.strip(), _parse_grid(rest)


def _cast_param(name: str, value: float) -> float | int:
    if name != "w":
        return float(value)
    nearest = round(value)
    if abs(value - nearest) > 1e-9:
        raise ValueError(f"w must take integer values, grid produced {value!r}")
    return int(nearest)


def _build_parser() -> _Parser:
    parser = _Parser(prog="conedet", description="log-determinants on constant-curvature cones")
    sub = parser.add_subparsers(dest="command", required=True)
    kinds = sorted(_KINDS)

    det = sub.add_parser("det", help="evaluate one log-determinant")
    det.add_argument("kind", choices=kinds)
    det.add_argument("--a", type=float, help="cone angle over 2*pi")
    det.add_argument("--eta", type=float, help="geodesic radius")
    det.add_argument("--w", type=int, help="orbifold order (angle 2*pi/w)")
    det.add_argument("--K", type=float, help="curvature")
    det.add_argument("--r", type=float, help="flat disk radius")
    det.add_argument("--format", choices=("plain", "json", "csv"), default="plain")

    table = sub.add_parser("table", help="tabulate a kind over parameter grids")
    table.add_argument("kind", choices=kinds)
    table.add_argument(
        "--grid",
        action="append",
        default=[],
        metavar="NAME=START,STOP,COUNT[,log]",
        help="parameter grid; repeat for a second axis (first grid is the outer loop)",
    )
    table.add_argument("--a", type=float)
    table.add_argument("--eta", type=float)
    table.add_argument("--w", type=int)
    table.add_argument("--K", type=float)
    table.add_argument("--r", type=float)
    table.add_argument("--format", choices=("csv", "json"), default="csv")

    asympt = sub.add_parser("asympt", help="orbifold determinant vs small-radius expansion")
    asympt.add_argument("--w", type=int, required=True)
    asympt.add_argument("--grid", required=True, metavar="START,STOP,COUNT[,log]")
    asympt.add_argument(
        "--compare-fp",
        action="store_true",
        help="also tabulate the previously published expansion",
    )
    asympt.add_argument("--format", choices=("csv", "json"), default="csv")

    verify = sub.add_parser("verify", help="run the cross-formula identity suite")
    verify.add_argument("--tol", type=float, default=1e-8)
    verify.add_argument("--format", choices=("plain", "csv", "json"), default="plain")
    return parser


def _collect_params(args: argparse.Namespace, names: tuple[str, ...]) -> dict:
    params = {}
    for name in names:
        value = getattr(args, name)
        if value is None:
            raise ValueError(f"{args.kind} requires --{name}")
        params[name] = value
    for name in ("a", "eta", "w", "K", "r"):
        if name not in names and getattr(args, name, None) is not None:
            raise ValueError(f"{args.kind} does not take --{name}")
    return params


def _record(res: EvalResult, params: dict) -> dict:
    return {
        "formula_tag": res.formula_tag,
        "params": params,
        "value": res.value,
        "abs_err": res.abs_err,
    }


def _cmd_det(args: argparse.Namespace) -> str:
    names, evaluate = _KINDS[args.kind]
    params = _collect_params(args, names)
    res = evaluate(params)
    if args.format == "json":
        return _json(_record(res, params)) + "\n"
    if args.format == "csv":
        header = ",".join(list(names) + ["value", "abs_err"])
        row = ",".join(_fmt(v) for v in [params[n] for n in names] + [res.value, res.abs_err])
        return header + "\n" + row + "\n"
    return (
        f"logdet = {_fmt(res.value)}\n"
        f"abs_err = {_fmt(res.abs_err)}\n"
        f"formula = {res.formula_tag}\n"
    )


def _cmd_table(args: argparse.Namespace) -> str:
    names, evaluate = _KINDS[args.kind]
    if not args.grid:
        raise ValueError("table requires at least one --grid")
    if len(args.grid) > 2:
        raise ValueError("table takes at most two --grid axes")

    grids: list[tuple[str, list[float]]] = []
    for spec in args.grid:
        name, values = _parse_named_grid(spec)
        if name not in names:
            raise ValueError(f"{args.kind} has no parameter {name!r}")
        if any(name == seen for seen, _ in grids):
            raise ValueError(f"parameter {name!r} gridded twice")
        grids.append((name, values))

    fixed = {}
    for name in names:
        if any(name == g for g, _ in grids):
            if getattr(args, name, None) is not None:
                raise ValueError(f"--{name} conflicts with its grid")
            continue
        value = getattr(args, name)
        if value is None:
            raise ValueError(f"{args.kind} requires --{name} or a grid for it")
        fixed[name] = value
    for name in ("a", "eta", "w", "K", "r"):
        if name not in names and getattr(args, name, None) is not None:
            raise ValueError(f"{args.kind} does not take --{name}")

    outer = grids[0]
    inner = grids[1] if len(grids) > 1 else None
    results: list[tuple[dict, EvalResult]] = []
    for ov in outer[1]:
        point = dict(fixed)
        point[outer[0]] = _cast_param(outer[0], ov)
        if inner is None:
            results.append((dict(point), evaluate(point)))
        else:
            for iv in inner[1]:
                point[inner[0]] = _cast_param(inner[0], iv)
                results.append((dict(point), evaluate(point)))

    if args.format == "json":
        return _json([_record(res, {n: point[n] for n in names}) for point, res in results]) + "\n"
    lines = [",".join(list(names) + ["value", "abs_err"])]
    lines.extend(
        ",".join(_fmt(v) for v in [point[n] for n in names] + [res.value, res.abs_err])
        for point, res in results
    )
    return "\n".join(lines) + "\n"


def _cmd_asympt(args: argparse.Namespace) -> str:
    etas = _parse_grid(args.grid)
    for eta in etas:
        if not 0.0 < eta <= 1.0:
            raise ValueError(f"asympt eta grid must lie in (0, 1], got {eta!r}")
    columns = ["eta", "exact", "asympt", "residual"]
    if args.compare_fp:
        columns += ["fp", "fp_residual"]
    rows = []
    for eta in etas:
        exact = logdet_orbifold_cone(args.w, eta).value
        approx = small_eta_asymptotics(args.w, eta)
        row = [eta, exact, approx, exact - approx]
        if args.compare_fp:
            fp = fp_asymptotics_reference(args.w, eta)
            row += [fp, exact - fp]
        rows.append(row)
    if args.format == "json":
        return _json([dict(zip(columns, row)) for row in rows]) + "\n"
    lines = [",".join(columns)]
    lines.extend(",".join(_fmt(v) for v in row) for row in rows)
    return "\n".join(lines) + "\n"


def _cmd_verify(args: argparse.Namespace) -> tuple[str, bool]:
    reports = verify_identities(tol=args.tol)
    ok = all(r.passed for r in reports)
    if args.format == "json":
        payload = [
            {
                "identity": r.identity_name,
                "lhs": r.lhs,
                "rhs": r.rhs,
                "abs_diff": r.abs_diff,
                "tolerance": r.tolerance,
                "passed": r.passed,
            }
            for r in reports
        ]
        return _json(payload) + "\n", ok
    if args.format == "csv":
        lines = ["identity,lhs,rhs,abs_diff,tolerance,passed"]
        lines.extend(
            f"{r.identity_name},{_fmt(r.lhs)},{_fmt(r.rhs)},{_fmt(r.abs_diff)},"
            f"{_fmt(r.tolerance)},{_fmt(r.passed)}"
            for r in reports
        )
        return "\n".join(lines) + "\n", ok
    lines = [
        f"{'PASS' if r.passed else 'FAIL'} {r.identity_name} "
        f"(abs_diff = {_fmt(r.abs_diff)}, tol = {_fmt(r.tolerance)})"
        for r in reports
    ]
    lines.append(f"{sum(r.passed for r in reports)}/{len(reports)} identities passed")
    return "\n".join(lines) + "\n", ok


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "det":
            sys.stdout.write(_cmd_det(args))
        elif args.command == "table":
            sys.stdout.write(_cmd_table(args))
        elif args.command == "asympt":
            sys.stdout.write(_cmd_asympt(args))
        else:
            out, ok = _cmd_verify(args)
            sys.stdout.write(out)
            if not ok:
                return 2
    except _ArgError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    except QuadratureError as exc:
        sys.stderr.write(f"numerical failure: {exc}\n")
        return 3
    return 0


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
