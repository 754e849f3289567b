"""Command-line interface: bound, solve, verify and table subcommands.

Numbers are printed with 12 significant digits, infinities as the string
"inf"; JSON goes to stdout, diagnostics to stderr.  Exit codes: 0 success,
1 verification failure, 2 usage or regime error.
"""

from __future__ import annotations

import argparse
import csv
import math
import sys

from .bounds import bound_report, explicit_bound_k0, explicit_bound_kneg1, main_lower_bound
from .errors import (
    InvalidDomainError,
    PreconditionError,
    UnsupportedRegimeError,
)
from .eigensolver import Cylinder, cylinder_q1, solve_domain
from .geometry2d import ConvexPolygon, Disk, Ellipse, domain_metrics
from .spaceform import ThetaProfile, ball_geometry, sk_eval, theta_first_zero
from .verify import SUITES, run_suite

_USAGE_ERRORS = (InvalidDomainError, PreconditionError, UnsupportedRegimeError, ValueError)


# ---------------------------------------------------------------------------
# deterministic formatting

def format_number(value) -> str:
    """12 significant digits; infinities become inf/-inf."""
    value = float(value)
    if math.isinf(value):
        return "inf" if value > 0 else "-inf"
    if math.isnan(value):
        return "nan"
    return format(value, ".12g")


def render_json(value, indent: int = 0) -> str:
    """Deterministic JSON with 12-significant-digit numbers.

    Infinities are serialized as the string "inf" so the output stays valid
    JSON; re-rendering a parsed document reproduces it byte for byte.
    """
    pad = "  " * indent
    if isinstance(value, dict):
        if not value:
            return "{}"
        items = ",\n".join(f'{pad}  "{key}": {render_json(val, indent + 1)}'
                           for key, val in value.items())
        return "{\n" + items + "\n" + pad + "}"
    if isinstance(value, (list, tuple)):
        if not value:
            return "[]"
        items = ", ".join(render_json(val, indent) for val in value)
        return "[" + items + "]"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, str):
        return '"' + value.replace("\\", "\\\\").replace('"', '\\"') + '"'
    if value is None:
        return "null"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float) and (math.isinf(value) or math.isnan(value)):
        return '"' + format_number(value) + '"'
    return format_number(value)


# ---------------------------------------------------------------------------
# domain spec grammar: disk:R | ellipse:a,b | polygon:x1,y1;x2,y2;... | cylinder:L,R

def parse_domain_spec(text: str):
    kind, sep, rest = text.partition(":")
    kind = kind.strip().lower()
    if not sep:
        raise InvalidDomainError(f"domain spec {text!r} is missing parameters")
    try:
        if kind == "disk":
            return Disk(float(rest))
        if kind == "ellipse":
            a, b = (float(v) for v in rest.split(","))
            return Ellipse(a, b)
        if kind == "polygon":
            vertices = [tuple(float(v) for v in chunk.split(","))
                        for chunk in rest.split(";") if chunk.strip()]
            if any(len(v) != 2 for v in vertices):
                raise InvalidDomainError(f"polygon vertices must be x,y pairs: {text!r}")
            return ConvexPolygon(vertices)
        if kind == "cylinder":
            length, radius = (float(v) for v in rest.split(","))
            return Cylinder(length, radius)
    except ValueError as exc:
        raise InvalidDomainError(f"cannot parse domain spec {text!r}: {exc}") from exc
    raise InvalidDomainError(
        f"unknown shape {kind!r}; expected disk, ellipse, polygon or cylinder")


# ---------------------------------------------------------------------------
# subcommands

def _cmd_bound(args) -> int:
    n, K, H, R = args.dim, args.ricci, args.mean_curv, args.inner_radius
    area, perimeter, width = args.area, args.perimeter, args.width
    caveats: list[str] = []
    if args.domain:
        shape = parse_domain_spec(args.domain)
        if isinstance(shape, Cylinder):
            fill = (2, 0.0, 0.0, shape.half_height)
            extras = (2.0 * shape.half_height * shape.circumference,
                      2.0 * shape.circumference, None)
        else:
            metrics = domain_metrics(shape)
            fill = (2, 0.0, metrics.min_curvature, metrics.inner_radius)
            extras = (metrics.area, metrics.perimeter, metrics.min_width)
            if isinstance(shape, ConvexPolygon):
                caveats.append("polygon boundary is only piecewise smooth; treated "
                               "as the mean-convex limit with H = 0")
        n = fill[0] if n is None else n
        K = fill[1] if K is None else K
        H = fill[2] if H is None else H
        R = fill[3] if R is None else R
        area = extras[0] if area is None else area
        perimeter = extras[1] if perimeter is None else perimeter
        width = extras[2] if width is None else width
    missing = [flag for flag, value in
               (("--dim", n), ("--ricci", K), ("--mean-curv", H), ("--inner-radius", R))
               if value is None]
    if missing:
        raise PreconditionError(f"missing {' '.join(missing)} (or provide --domain)")
    report = bound_report(ThetaProfile(n, K, H), R, area=area, perimeter=perimeter,
                          width=width, caveats=tuple(caveats))
    print(render_json(report.to_dict()))
    return 0


def _cmd_solve(args) -> int:
    shape = parse_domain_spec(args.domain)
    if isinstance(shape, Cylinder):
        spectrum = cylinder_q1(shape.circumference, shape.half_height, args.modes)
        out = {
            "q1": spectrum.q1,
            "lower": 1.0 / shape.half_height,
            "upper": 1.0 / shape.half_height,
            "degree": spectrum.mode_count,
            "residual": 0.0,
        }
    else:
        metrics = domain_metrics(shape)
        degree = args.degree
        order = args.order if args.order is not None else max(4, degree + 2)
        model = solve_domain(shape, degree, order=order)
        previous = solve_domain(model.domain, max(0, degree - 5), order=order)
        out = {
            "q1": model.q1,
            "lower": main_lower_bound(ThetaProfile(2, 0.0, metrics.min_curvature),
                                      metrics.inner_radius),
            "upper": metrics.perimeter / metrics.area,
            "degree": degree,
            "residual": abs(model.q1 - previous.q1),
        }
    print(render_json(out))
    return 0


def _cmd_verify(args) -> int:
    results = run_suite(args.suite)
    failures = 0
    for res in results:
        status = "PASS" if res.passed else "FAIL"
        failures += 0 if res.passed else 1
        tag = f" [criterion {res.acceptance}]" if res.acceptance is not None else ""
        print(f"{status}  {res.suite:<9}  {res.name}{tag}  ({res.seconds:.2f}s)")
        print(f"      {res.detail}")
    print(f"RESULT: {len(results) - failures} passed, {failures} failed")
    return 0 if failures == 0 else 1


def _parse_grid_values(key: str, text: str):
    text = text.strip()
    if key == "H" and text.lower() == "ball":
        return "ball"
    if ":" in text:
        parts = text.split(":")
        if len(parts) != 3:
            raise PreconditionError(f"range for {key} must be start:stop:step, got {text!r}")
        start, stop, step = (float(v) for v in parts)
        if step <= 0 or stop < start:
            raise PreconditionError(f"bad range {text!r} for {key}")
        count = int(round((stop - start) / step)) + 1
        return [start + i * step for i in range(count)]
    return [float(v) for v in text.split(",") if v.strip()]


def _table_columns():
    return {
        "mainBound": lambda n, K, H, R: main_lower_bound(ThetaProfile(n, K, H), R),
        "ballRatio": lambda n, K, H, R: ball_geometry(n, K, R).isoperimetric_ratio,
        "wangXia": lambda n, K, H, R: n * H,
        "mckean": lambda n, K, H, R: float(n - 1),
        "explicitK0": lambda n, K, H, R: explicit_bound_k0(n, H, R),
        "explicitKneg1": lambda n, K, H, R: explicit_bound_kneg1(n, H, R),
        "oneOverR": lambda n, K, H, R: 1.0 / R,
        "thetaFirstZero": lambda n, K, H, R: theta_first_zero(ThetaProfile(n, K, H)),
    }


def _cmd_table(args) -> int:
    grids: dict[str, object] = {}
    for item in args.grid:
        key, sep, value = item.partition("=")
        key = key.strip()
        if not sep or key not in ("n", "K", "H", "R"):
            raise PreconditionError(f"grid entries must look like n=...|K=...|H=...|R=..., got {item!r}")
        grids[key] = _parse_grid_values(key, value)
    missing = [key for key in ("n", "K", "H", "R") if key not in grids or grids[key] == []]
    if missing:
        raise PreconditionError(f"empty grid: missing values for {', '.join(missing)}")
    available = _table_columns()
    columns = [c.strip() for c in args.columns.split(",") if c.strip()]
    unknown = [c for c in columns if c not in available]
    if not columns or unknown:
        raise PreconditionError(
            f"unknown columns {unknown}; available: {', '.join(sorted(available))}")

    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["n", "K", "H", "R"] + columns)
    rows = 0
    for n in grids["n"]:
        n = int(n)
        for K in grids["K"]:
            for H_spec in (grids["H"] if grids["H"] != "ball" else ["ball"]):
                for R in grids["R"]:
                    H = sk_eval(K, R)[1] / sk_eval(K, R)[0] if H_spec == "ball" else H_spec
                    values = [available[c](n, K, H, R) for c in columns]
                    writer.writerow([format_number(v) for v in (n, K, H, R)]
                                    + [format_number(v) for v in values])
                    rows += 1
    if rows == 0:
        raise PreconditionError("empty grid: no rows generated")
    return 0


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bisteklov",
        description="Bounds and planar solver for the first biharmonic Steklov eigenvalue.")
    sub = parser.add_subparsers(dest="command", required=True)

    bound = sub.add_parser("bound", help="report every bound for curvature data (n, K, H, R)")
    bound.add_argument("--dim", type=int, help="dimension n >= 2")
    bound.add_argument("--ricci", type=float, help="Ricci lower-bound constant K")
    bound.add_argument("--mean-curv", type=float, help="boundary mean-curvature lower bound H")
    bound.add_argument("--inner-radius", type=float, help="inner radius R")
    bound.add_argument("--area", type=float, help="domain volume |Omega|")
    bound.add_argument("--perimeter", type=float, help="boundary volume |dOmega|")
    bound.add_argument("--width", type=float, help="minimal slab width (convex Euclidean)")
    bound.add_argument("--domain", help="planar spec filling unspecified values, "
                                        "e.g. ellipse:2,1")

    solve = sub.add_parser("solve", help="compute q1 numerically for a planar domain")
    solve.add_argument("--domain", required=True,
                       help="disk:R | ellipse:a,b | polygon:x1,y1;x2,y2;... | cylinder:L,R")
    solve.add_argument("--degree", type=int, default=20, help="harmonic basis degree")
    solve.add_argument("--order", type=int, help="quadrature order (default degree + 2)")
    solve.add_argument("--modes", type=int, default=16, help="circle modes for cylinders")

    verify = sub.add_parser("verify", help="run invariants and the acceptance gate")
    verify.add_argument("--suite", required=True, choices=list(SUITES) + ["all"])

    table = sub.add_parser("table", help="CSV of bounds over an (n, K, H, R) grid")
    table.add_argument("--grid", action="append", required=True, metavar="KEY=VALUES",
                       help="n=2,3 | K=0 | H=1 or H=ball | R=0.1:1.0:0.1")
    table.add_argument("--columns", required=True,
                       help="comma list, e.g. mainBound,wangXia,oneOverR")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    handlers = {"bound": _cmd_bound, "solve": _cmd_solve,
                "verify": _cmd_verify, "table": _cmd_table}
    try:
        return handlers[args.command](args)
    except _USAGE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
