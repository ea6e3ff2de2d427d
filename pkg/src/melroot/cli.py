"""Command-line interface.

Subcommands::

    table1             stage-by-stage integrand table on a circular contour
    count              roots-minus-poles count (direct or pipeline method)
    sign-map           grid of the complex sign of zeta over a rectangle
    expsum-error       grids of the reciprocal-approximation error
    convolution-check  3-fold convolution vs direct third power of Z

Exit codes: 0 success, 1 unreliable count, 2 domain error, 3 quadrature
non-convergence. All commands are deterministic: identical arguments give
byte-identical output.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from typing import Optional

from .contour import (
    CircularContour,
    CountResult,
    PipelineConfig,
    count_direct,
    count_pipeline,
    integrand_direct,
    integrand_stage1,
    integrand_stage2,
    kernel_mellin,
)
from .errors import DomainError, NonConvergenceError, PoleError
from .expsum import PRESETS, ExpSumTable, error_grid
from .mellin import power_transform, transform
from .numerics import csgn
from .quadrature import QuadratureConfig
from .zeta import build_zeta_factored, zeta_reference

TABLE_DECIMALS = 7
CHECK_SIGDIGITS = 10


def _add_contour_args(p: argparse.ArgumentParser, center=(0.57, 1.57), radius=0.1, nodes=64):
    p.add_argument("--center-re", type=float, default=center[0])
    p.add_argument("--center-im", type=float, default=center[1])
    p.add_argument("--radius", type=float, default=radius)
    p.add_argument("--nodes", type=int, default=nodes)


def _add_pipeline_args(p: argparse.ArgumentParser):
    p.add_argument("--preset", choices=sorted(PRESETS), default="appendixC")
    p.add_argument("--coeff-file", default=None, help="coefficient file overriding --preset")
    p.add_argument("--order-n", type=int, default=1)
    p.add_argument("--eps", type=float, default=None, help="smooth-csgn width (default: exact reference sign)")


def _add_output_args(p: argparse.ArgumentParser):
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", default=None, help="output path (default: stdout)")


def _add_grid_args(p: argparse.ArgumentParser):
    p.add_argument("--re-min", type=float, required=True)
    p.add_argument("--re-max", type=float, required=True)
    p.add_argument("--im-min", type=float, required=True)
    p.add_argument("--im-max", type=float, required=True)
    p.add_argument("--grid-nx", type=int, default=64)
    p.add_argument("--grid-ny", type=int, default=64)


def _coeff_table(args) -> ExpSumTable:
    if args.coeff_file:
        return ExpSumTable.from_file(args.coeff_file)
    return PRESETS[args.preset]


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _fmt(x: float) -> str:
    return f"{x:.{TABLE_DECIMALS}f}"


def _cnum(v: complex) -> dict:
    return {"re": round(v.real, TABLE_DECIMALS), "im": round(v.imag, TABLE_DECIMALS)}


def cmd_table1(args) -> int:
    ff = build_zeta_factored()
    c = CircularContour(complex(args.center_re, args.center_im), args.radius)
    table = _coeff_table(args)
    cfg = PipelineConfig(
        table=table,
        series_order=args.order_n,
        csgn_mode="smooth" if args.eps else "reference",
        eps=args.eps,
    )
    rows = []
    for i in range(9):
        phi = 2.0 * math.pi * i / 8.0
        rows.append(
            (
                i / 8.0,
                integrand_direct(ff, c, phi),
                integrand_stage1(ff, c, phi, table),
                integrand_stage2(ff, c, phi, table, args.order_n),
                kernel_mellin(ff, c, phi, cfg),
            )
        )
    columns = ("direct", "stage1", "stage2", "kernel")
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf)
        header = ["phi_over_2pi"]
        for name in columns:
            header += [f"{name}_re", f"{name}_im"]
        w.writerow(header)
        for frac, *vals in rows:
            row = [_fmt(frac)]
            for v in vals:
                row += [_fmt(v.real), _fmt(v.imag)]
            w.writerow(row)
        _emit(buf.getvalue(), args.out)
    else:
        payload = [
            {"phi_over_2pi": frac, **{n: _cnum(v) for n, v in zip(columns, vals)}}
            for frac, *vals in rows
        ]
        _emit(json.dumps(payload, indent=2) + "\n", args.out)
    return 0


def cmd_count(args) -> int:
    ff = build_zeta_factored()
    c = CircularContour(complex(args.center_re, args.center_im), args.radius, args.nodes)
    if args.method == "direct":
        result = count_direct(ff, c)
    else:
        cfg = PipelineConfig(
            table=_coeff_table(args),
            series_order=args.order_n,
            csgn_mode="smooth" if args.eps else "reference",
            eps=args.eps,
        )
        result = count_pipeline(ff, c, cfg)
    report = {
        "method": args.method,
        "center": {"re": args.center_re, "im": args.center_im},
        "radius": args.radius,
        "nodes": c.nodes,
        "value": {"re": result.value.real, "im": result.value.imag},
        "rounded": result.rounded,
        "residual": result.residual,
        "reliable": result.reliable,
    }
    if args.format == "json":
        _emit(json.dumps(report, indent=2) + "\n", args.out)
    else:
        lines = [
            f"value    {result.value.real:+.12e} {result.value.imag:+.12e}i",
            f"rounded  {result.rounded}",
            f"residual {result.residual:.3e}",
        ]
        _emit("\n".join(lines) + "\n", args.out)
    return 0 if result.reliable else 1


def _grid_axes(args):
    import numpy as np

    xs = np.linspace(args.re_min, args.re_max, args.grid_nx)
    ys = np.linspace(args.im_min, args.im_max, args.grid_ny)
    return xs, ys


def cmd_sign_map(args) -> int:
    xs, ys = _grid_axes(args)
    grid = []
    for y in ys:
        row = []
        for x in xs:
            s = complex(x, y)
            try:
                row.append(csgn(zeta_reference(s)))
            except PoleError:
                row.append(0)  # pole marker
        grid.append(row)
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf)
        w.writerow(["im\\re"] + [f"{x:.6g}" for x in xs])
        for y, row in zip(ys, grid):
            w.writerow([f"{y:.6g}"] + row)
        _emit(buf.getvalue(), args.out)
    else:
        payload = {"re_axis": list(map(float, xs)), "im_axis": list(map(float, ys)), "sign": grid}
        _emit(json.dumps(payload, indent=2) + "\n", args.out)
    return 0


def cmd_expsum_error(args) -> int:
    table = _coeff_table(args)
    xs, ys, grid = error_grid(
        table,
        (args.re_min, args.re_max),
        (args.im_min, args.im_max),
        (args.grid_nx, args.grid_ny),
        flag_origin=True,
    )
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf)
        for name, part in (("real", grid.real), ("imag", grid.imag)):
            buf.write(f"# {name} part of approximation error\n")
            w.writerow(["im\\re"] + [f"{x:.6g}" for x in xs])
            for y, row in zip(ys, part):
                w.writerow([f"{y:.6g}"] + [_fmt(v) for v in row])
        _emit(buf.getvalue(), args.out)
    else:
        payload = {
            "re_axis": list(map(float, xs)),
            "im_axis": list(map(float, ys)),
            "real": [[round(float(v), TABLE_DECIMALS) for v in row] for row in grid.real],
            "imag": [[round(float(v), TABLE_DECIMALS) for v in row] for row in grid.imag],
        }
        _emit(json.dumps(payload, indent=2) + "\n", args.out)
    return 0


def cmd_convolution_check(args) -> int:
    ff = build_zeta_factored()
    quad = QuadratureConfig(rel_tol=1e-9, abs_tol=1e-13)
    if args.s_re is not None:
        points = [complex(args.s_re, args.s_im or 0.0)]
    else:
        points = [0.4 + 0j, 0.4 - 0.3j]
    lines = []
    records = []
    for s in points:
        threefold = power_transform(ff.zf, 3, s, quad).value
        cubed = transform(ff.zf, s, quad).value ** 3
        diff = abs(threefold - cubed)
        g = CHECK_SIGDIGITS
        lines.append(f"s = {s.real:.{g}g} + {s.imag:.{g}g}i")
        lines.append(f"  threefold convolution  {threefold.real:.{g}g} + {threefold.imag:.{g}g}i")
        lines.append(f"  direct third power     {cubed.real:.{g}g} + {cubed.imag:.{g}g}i")
        lines.append(f"  |difference|           {diff:.3e}")
        records.append(
            {
                "s": {"re": s.real, "im": s.imag},
                "threefold": {"re": threefold.real, "im": threefold.imag},
                "cubed": {"re": cubed.real, "im": cubed.imag},
                "difference": diff,
            }
        )
    if args.format == "json":
        _emit(json.dumps(records, indent=2) + "\n", args.out)
    else:
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="melroot",
        description="Count roots minus poles of functions given as Mellin transforms.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table1", help="stage-by-stage integrand table on a circular contour")
    _add_contour_args(p)
    _add_pipeline_args(p)
    _add_output_args(p)
    p.set_defaults(func=cmd_table1)

    p = sub.add_parser("count", help="count roots minus poles inside a circle")
    _add_contour_args(p)
    p.add_argument("--method", choices=("direct", "pipeline"), default="direct")
    _add_pipeline_args(p)
    _add_output_args(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("sign-map", help="complex sign of zeta on a rectangular grid")
    _add_grid_args(p)
    _add_output_args(p)
    p.set_defaults(func=cmd_sign_map)

    p = sub.add_parser("expsum-error", help="error grids of the reciprocal approximation")
    _add_grid_args(p)
    _add_pipeline_args(p)
    _add_output_args(p)
    p.set_defaults(func=cmd_expsum_error)

    p = sub.add_parser("convolution-check", help="threefold convolution vs direct third power")
    p.add_argument("--s-re", type=float, default=None)
    p.add_argument("--s-im", type=float, default=None)
    _add_output_args(p)
    p.set_defaults(func=cmd_convolution_check)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DomainError as exc:  # includes PoleError
        print(f"domain error: {exc}", file=sys.stderr)
        return 2
    except NonConvergenceError as exc:
        print(f"quadrature did not converge: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
