"""Command-line front end.

Every subcommand prints exactly one JSON object on stdout.  Exit codes:
0 success, 1 internal error, 2 certification failed, 3 invalid plan or
arguments.  Angles on the command line are radians unless suffixed with
`deg` (e.g. `--resolution 0.01deg`).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace

from .bounds import (
    METHOD_BRANCH_AND_BOUND,
    METHOD_FULL_GRID,
    certify_theorem,
    grid_error_bound,
)
from .configuration import Config, config_points, mu
from .errors import CsvFormatError, InputError, PlanError, WormboundError
from .geometry import convex_hull
from .output import (
    load_plan,
    parse_angle,
    parse_box,
    read_surface_csv,
    render_heatmap_svg,
    to_json,
    write_surface_csv,
)
from .search import (
    SearchStage,
    SurfaceGrid,
    _auto_box,
    _grid_axis,
    conjecture_search,
    grid_search,
    run_plan,
    surface_min,
)

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_NOT_CERTIFIED = 2
EXIT_BAD_INPUT = 3


class _Parser(argparse.ArgumentParser):
    """argparse that raises instead of exiting, so bad usage maps to exit 3."""

    def error(self, message):
        raise PlanError(message)


def _parse_config(text: str) -> Config:
    parts = [t.strip() for t in text.split(",")]
    if len(parts) != 6:
        raise InputError(f"--config needs 6 comma-separated values, got {len(parts)}")
    try:
        vals = [float(parts[0]), float(parts[1]), parse_angle(parts[2]),
                float(parts[3]), float(parts[4]), parse_angle(parts[5])]
    except ValueError as exc:
        raise InputError(f"bad --config value: {exc}") from exc
    return Config(*vals)


def _cmd_hull(args) -> int:
    cfg = _parse_config(args.config)
    poly = convex_hull(config_points(cfg))
    print(to_json({
        "config": _config_dict(cfg),
        "area": mu(cfg),
        "hull": [[p.x, p.y] for p in poly.vertices],
    }))
    return EXIT_OK


def _config_dict(c: Config) -> dict:
    return {"x1": c.x1, "y1": c.y1, "alpha": c.alpha,
            "x2": c.x2, "y2": c.y2, "beta": c.beta}


def _cmd_verify(args) -> int:
    method = {"grid": METHOD_FULL_GRID, "bnb": METHOD_BRANCH_AND_BOUND,
              METHOD_FULL_GRID: METHOD_FULL_GRID,
              METHOD_BRANCH_AND_BOUND: METHOD_BRANCH_AND_BOUND}.get(args.method)
    if method is None:
        raise InputError(f"unknown method {args.method!r}")
    resolution = parse_angle(args.resolution) if args.resolution else None
    cert = certify_theorem(args.target, method, resolution)
    print(to_json(cert.to_dict()))
    return EXIT_OK if cert.certified else EXIT_NOT_CERTIFIED


def _cmd_error_bound(args) -> int:
    print(to_json(grid_error_bound(args.d1, parse_angle(args.d2)).to_dict()))
    return EXIT_OK


def _cmd_search(args) -> int:
    plan = load_plan(args.plan)
    if not args.surface_out:
        print(to_json(run_plan(plan).to_dict()))
        return EXIT_OK
    # same stage sequencing as run_plan, but the final stage feeds a
    # surface accumulator whose cells match its (x2, y2) node grid
    result = None
    surface = None
    d1_prev = d2_prev = 0.0
    for idx, st in enumerate(plan.stages):
        if st.auto:
            st = SearchStage(box=_auto_box(result.best, d1_prev, d2_prev),
                             d1=st.d1, d2=st.d2)
        if idx == len(plan.stages) - 1:
            nx = int(_grid_axis(*st.box.x2, st.d1).size)
            ny = int(_grid_axis(*st.box.y2, st.d1).size)
            surface = SurfaceGrid(st.box.x2, st.box.y2, nx, ny)
        result = replace(grid_search(st, surface=surface), stage_index=idx)
        d1_prev, d2_prev = st.d1, st.d2
    rows = write_surface_csv(surface, args.surface_out)
    payload = result.to_dict()
    payload["surface_csv"] = args.surface_out
    payload["surface_rows"] = rows
    print(to_json(payload))
    return EXIT_OK


def _cmd_conjecture(args) -> int:
    result = conjecture_search(parse_angle(args.coarse), parse_angle(args.final))
    print(to_json(result.to_dict()))
    return EXIT_OK


def _cmd_surface(args) -> int:
    try:
        raw = json.loads(args.box)
    except json.JSONDecodeError as exc:
        raise PlanError(f"--box is not valid JSON: {exc}") from exc
    box = parse_box(raw)
    try:
        nx, ny = (int(t) for t in args.cells.split(","))
    except ValueError as exc:
        raise InputError(f"--cells must be nx,ny: {exc}") from exc
    surface = surface_min(box, (nx, ny), args.d1, parse_angle(args.d2))
    rows = write_surface_csv(surface, args.out)
    area, best = surface.global_min()
    payload = {
        "csv": args.out,
        "rows": rows,
        "min_area": area,
        "argmin": _config_dict(best) if best is not None else None,
    }
    print(to_json(payload))
    return EXIT_OK


def _cmd_heatmap(args) -> int:
    rows = read_surface_csv(args.csv)
    render_heatmap_svg(args.csv, args.svg)
    vs = [r["min_area"] for r in rows]
    print(to_json({"svg": args.svg, "cells": len(rows),
                   "min_area": min(vs), "max_area": max(vs)}))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    top = _Parser(prog="wormbound",
                  description="Lower-bound machinery for small covers of "
                              "segment, triangle and square configurations.")
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hull", help="hull area of one configuration")
    p.add_argument("--config", required=True,
                   help="x1,y1,alpha,x2,y2,beta (angles radians or Ndeg)")
    p.set_defaults(fn=_cmd_hull)

    p = sub.add_parser("verify", help="certify the area lower bound")
    p.add_argument("--target", type=float, required=True)
    p.add_argument("--method", default="bnb", help="bnb or grid")
    p.add_argument("--resolution", default=None,
                   help="cell size in radians (or Ndeg)")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("error-bound", help="grid-step error bound")
    p.add_argument("--d1", type=float, required=True)
    p.add_argument("--d2", required=True)
    p.set_defaults(fn=_cmd_error_bound)

    p = sub.add_parser("search", help="run a JSON search plan")
    p.add_argument("--plan", required=True)
    p.add_argument("--surface-out", default=None,
                   help="also accumulate the final stage into a surface CSV")
    p.set_defaults(fn=_cmd_search)

    p = sub.add_parser("conjecture", help="two-angle pivot search")
    p.add_argument("--coarse", default="1e-3")
    p.add_argument("--final", default="1e-7")
    p.set_defaults(fn=_cmd_conjecture)

    p = sub.add_parser("surface", help="per-(x2,y2) minimum surface")
    p.add_argument("--box", required=True, help="JSON box object")
    p.add_argument("--cells", required=True, help="nx,ny")
    p.add_argument("--d1", type=float, required=True)
    p.add_argument("--d2", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(fn=_cmd_surface)

    p = sub.add_parser("heatmap", help="render a surface CSV as SVG")
    p.add_argument("--csv", required=True)
    p.add_argument("--svg", required=True)
    p.set_defaults(fn=_cmd_heatmap)
    return top


def dispatch(argv: list[str]) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.fn(args)
    except (InputError, PlanError, CsvFormatError) as exc:
        print(to_json({"error": str(exc)}))
        return EXIT_BAD_INPUT
    except WormboundError as exc:
        print(to_json({"error": str(exc)}))
        return EXIT_INTERNAL
    except Exception as exc:  # pragma: no cover - defensive
        print(to_json({"error": f"{type(exc).__name__}: {exc}"}))
        return EXIT_INTERNAL


def main() -> None:
    sys.exit(dispatch(sys.argv[1:]))


if __name__ == "__main__":
    main()
