#!/usr/bin/env python3
"""Desk-scale surface reproduction: per-(x2, y2) minima around the
optimal region, written as CSV and rendered as an SVG heatmap.

    python scripts/run_desk_surface.py --out surface.csv --svg surface.svg

Defaults scan (x2, y2) in [0.6, 0.9] x [0.0, 0.25] against the square
window [0.6, 0.72] x [0.14, 0.24] at grid step 0.005 (10-15 minutes on
one core).  Narrow the box or raise the step for a quicker look.
"""

import argparse
import math
import time

from wormbound import DomainBox, surface_min
from wormbound.output import render_heatmap_svg, to_json, write_surface_csv


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default="surface.csv")
    ap.add_argument("--svg", default=None)
    ap.add_argument("--d1", type=float, default=0.005)
    ap.add_argument("--d2", type=float, default=0.005)
    ap.add_argument("--x2", nargs=2, type=float, default=(0.6, 0.9))
    ap.add_argument("--y2", nargs=2, type=float, default=(0.0, 0.25))
    args = ap.parse_args()

    rad = math.radians
    box = DomainBox(x1=(0.6, 0.72), y1=(0.14, 0.24), alpha=(rad(45), rad(78)),
                    x2=tuple(args.x2), y2=tuple(args.y2),
                    beta=(rad(83), rad(97)))
    nx = int(round((box.x2[1] - box.x2[0]) / args.d1)) + 1
    ny = int(round((box.y2[1] - box.y2[0]) / args.d1)) + 1
    t0 = time.time()
    surface = surface_min(box, (nx, ny), args.d1, args.d2)
    rows = write_surface_csv(surface, args.out)
    area, best = surface.global_min()
    print(to_json({"csv": args.out, "rows": rows, "min_area": area,
                   "argmin": dict(zip(("x1", "y1", "alpha", "x2", "y2", "beta"),
                                      best.as_tuple()))}))
    if args.svg:
        render_heatmap_svg(args.out, args.svg)
        print(to_json({"svg": args.svg}))
    print("elapsed: %.1fs" % (time.time() - t0))


if __name__ == "__main__":
    main()
