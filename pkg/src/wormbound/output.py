"""File formats: result JSON, search plans, surface CSV, heatmap SVG.

All numeric output is printed with 17 significant digits so identical
runs produce byte-identical files and stdout.
"""

from __future__ import annotations

import csv
import json
import math
from pathlib import Path
from typing import Any

from .configuration import DomainBox
from .errors import CsvFormatError, PlanError
from .search import SearchPlan, SearchStage, SurfaceGrid

__all__ = [
    "fmt17",
    "to_json",
    "parse_angle",
    "parse_box",
    "parse_plan",
    "load_plan",
    "write_surface_csv",
    "read_surface_csv",
    "render_heatmap_svg",
]

SURFACE_COLUMNS = ("x2", "y2", "min_area", "x1", "y1", "alpha",
                   "x2_arg", "y2_arg", "beta")


def fmt17(x: float) -> str:
    return format(float(x), ".17g")


def _json_fragments(obj: Any, out: list[str]) -> None:
    if isinstance(obj, bool) or obj is None:
        out.append(json.dumps(obj))
    elif isinstance(obj, float):
        out.append(fmt17(obj))
    elif isinstance(obj, int):
        out.append(str(obj))
    elif isinstance(obj, str):
        out.append(json.dumps(obj))
    elif isinstance(obj, dict):
        out.append("{")
        for i, (k, v) in enumerate(obj.items()):
            if i:
                out.append(", ")
            out.append(json.dumps(str(k)))
            out.append(": ")
            _json_fragments(v, out)
        out.append("}")
    elif isinstance(obj, (list, tuple)):
        out.append("[")
        for i, v in enumerate(obj):
            if i:
                out.append(", ")
            _json_fragments(v, out)
        out.append("]")
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}")


def to_json(obj: Any) -> str:
    """Deterministic one-line JSON with 17-significant-digit floats."""
    out: list[str] = []
    _json_fragments(obj, out)
    return "".join(out)


def parse_angle(token: str | float) -> float:
    """Angle in radians; strings may carry a `deg` suffix (e.g. '45deg')."""
    if isinstance(token, (int, float)):
        return float(token)
    t = token.strip()
    if t.lower().endswith("deg"):
        return math.radians(float(t[:-3]))
    return float(t)


def parse_box(raw: dict) -> DomainBox:
    """Box from {"x1": [lo, hi], ..., "beta": [lo, hi]}; angle entries may
    be 'deg'-suffixed strings."""
    if not isinstance(raw, dict):
        raise PlanError(f"box must be an object, got {type(raw).__name__}")
    fields = {}
    for name in ("x1", "y1", "alpha", "x2", "y2", "beta"):
        if name not in raw:
            raise PlanError(f"box is missing interval {name!r}")
        iv = raw[name]
        if not (isinstance(iv, (list, tuple)) and len(iv) == 2):
            raise PlanError(f"box interval {name!r} must be [lo, hi]")
        try:
            if name in ("alpha", "beta"):
                fields[name] = (parse_angle(iv[0]), parse_angle(iv[1]))
            else:
                fields[name] = (float(iv[0]), float(iv[1]))
        except (TypeError, ValueError) as exc:
            raise PlanError(f"bad bound in interval {name!r}: {exc}") from exc
    extra = set(raw) - set(fields)
    if extra:
        raise PlanError(f"unknown box fields {sorted(extra)}")
    try:
        return DomainBox(**fields)
    except ValueError as exc:
        raise PlanError(str(exc)) from exc


def parse_plan(raw: dict) -> SearchPlan:
    """Plan from {"stages": [{"box": {...}|, "auto": true, "d1": , "d2": }]}."""
    if not isinstance(raw, dict) or "stages" not in raw:
        raise PlanError('plan must be an object with a "stages" array')
    if not isinstance(raw["stages"], list) or not raw["stages"]:
        raise PlanError('plan "stages" must be a non-empty array')
    stages = []
    for i, st in enumerate(raw["stages"]):
        if not isinstance(st, dict):
            raise PlanError(f"stage {i} must be an object")
        if "d1" not in st or "d2" not in st:
            raise PlanError(f"stage {i} needs d1 and d2")
        try:
            d1 = float(st["d1"])
            d2 = parse_angle(st["d2"])
        except (TypeError, ValueError) as exc:
            raise PlanError(f"stage {i}: bad step: {exc}") from exc
        auto = bool(st.get("auto", False))
        box = parse_box(st["box"]) if "box" in st else None
        if auto and box is not None:
            raise PlanError(f"stage {i}: auto stages take no box")
        try:
            stages.append(SearchStage(box=box, d1=d1, d2=d2, auto=auto))
        except ValueError as exc:
            raise PlanError(f"stage {i}: {exc}") from exc
    try:
        return SearchPlan(stages=tuple(stages))
    except ValueError as exc:
        raise PlanError(str(exc)) from exc


def load_plan(path: str | Path) -> SearchPlan:
    try:
        raw = json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise PlanError(f"cannot read plan {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise PlanError(f"plan {path} is not valid JSON: {exc}") from exc
    return parse_plan(raw)


def write_surface_csv(surface: SurfaceGrid, path: str | Path) -> int:
    """Write non-empty cells (row-major); returns the number of rows."""
    rows = 0
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(",".join(SURFACE_COLUMNS) + "\n")
        for ix, iy, area, cfg in surface.cells():
            cx, cy = surface.cell_center(ix, iy)
            vals = (cx, cy, area, cfg.x1, cfg.y1, cfg.alpha,
                    cfg.x2, cfg.y2, cfg.beta)
            fh.write(",".join(fmt17(v) for v in vals) + "\n")
            rows += 1
    return rows


def read_surface_csv(path: str | Path) -> list[dict[str, float]]:
    """Rows of a surface CSV; raises CsvFormatError with the 1-based line
    number of the first malformed row (an empty file counts as row 1)."""
    with open(path, "r", encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise CsvFormatError("empty file, expected a surface header", 1)
        header = [h.strip() for h in header]
        for col in ("x2", "y2", "min_area"):
            if col not in header:
                raise CsvFormatError(f"missing column {col!r}", 1)
        rows = []
        for lineno, rec in enumerate(reader, start=2):
            if not rec:
                continue
            if len(rec) != len(header):
                raise CsvFormatError(
                    f"expected {len(header)} fields, got {len(rec)}", lineno)
            try:
                rows.append({h: float(v) for h, v in zip(header, rec)})
            except ValueError as exc:
                raise CsvFormatError(str(exc), lineno) from None
        if not rows:
            raise CsvFormatError("no data rows", 2)
    return rows


# five-stop blue-to-yellow ramp, interpolated linearly
_RAMP = ((68, 1, 84), (59, 82, 139), (33, 145, 140), (94, 201, 98), (253, 231, 37))


def _color(t: float) -> str:
    t = min(1.0, max(0.0, t))
    pos = t * (len(_RAMP) - 1)
    i = min(int(pos), len(_RAMP) - 2)
    frac = pos - i
    r, g, b = (round(a + (b2 - a) * frac) for a, b2 in zip(_RAMP[i], _RAMP[i + 1]))
    return f"rgb({r},{g},{b})"


def _spacing(values: list[float]) -> float:
    uniq = sorted(set(values))
    if len(uniq) < 2:
        return 0.01
    return min(b - a for a, b in zip(uniq, uniq[1:]))


def render_heatmap_svg(csv_in: str | Path, svg_out: str | Path) -> None:
    """Static heatmap of a surface CSV: one rectangle per cell, linear
    color scale over min_area, labeled x2/y2 axes and a legend.  Output
    bytes depend only on the CSV content."""
    rows = read_surface_csv(csv_in)
    xs = [r["x2"] for r in rows]
    ys = [r["y2"] for r in rows]
    vs = [r["min_area"] for r in rows]
    cw = _spacing(xs)
    ch = _spacing(ys)
    vmin, vmax = min(vs), max(vs)
    span = vmax - vmin

    width, height = 880.0, 640.0
    ml, mr, mt, mb = 90.0, 150.0, 40.0, 70.0
    pw, ph = width - ml - mr, height - mt - mb
    x_lo, x_hi = min(xs) - cw / 2, max(xs) + cw / 2
    y_lo, y_hi = min(ys) - ch / 2, max(ys) + ch / 2

    def sx(x: float) -> float:
        return ml + (x - x_lo) / (x_hi - x_lo) * pw

    def sy(y: float) -> float:
        return mt + (y_hi - y) / (y_hi - y_lo) * ph

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:g}" '
        f'height="{height:g}" viewBox="0 0 {width:g} {height:g}">',
        f'<rect x="0" y="0" width="{width:g}" height="{height:g}" fill="white"/>',
    ]
    for x, y, v in zip(xs, ys, vs):
        t = 0.5 if span == 0.0 else (v - vmin) / span
        parts.append(
            f'<rect class="cell" x="{sx(x - cw / 2):.3f}" y="{sy(y + ch / 2):.3f}" '
            f'width="{pw * cw / (x_hi - x_lo):.3f}" '
            f'height="{ph * ch / (y_hi - y_lo):.3f}" fill="{_color(t)}"/>')
    # frame and axis labels
    parts.append(
        f'<rect x="{ml:.3f}" y="{mt:.3f}" width="{pw:.3f}" height="{ph:.3f}" '
        'fill="none" stroke="black" stroke-width="1"/>')
    for i in range(5):
        fx = x_lo + (x_hi - x_lo) * i / 4
        fy = y_lo + (y_hi - y_lo) * i / 4
        parts.append(f'<text x="{sx(fx):.3f}" y="{height - mb + 18:.3f}" '
                     f'font-size="12" text-anchor="middle">{fx:.4g}</text>')
        parts.append(f'<text x="{ml - 8:.3f}" y="{sy(fy) + 4:.3f}" '
                     f'font-size="12" text-anchor="end">{fy:.4g}</text>')
    parts.append(f'<text x="{ml + pw / 2:.3f}" y="{height - 16:.3f}" '
                 'font-size="14" text-anchor="middle">x2</text>')
    parts.append(f'<text x="20" y="{mt + ph / 2:.3f}" font-size="14" '
                 f'text-anchor="middle" transform="rotate(-90 20 {mt + ph / 2:.3f})">y2</text>')
    # color legend
    lx = width - mr + 30
    steps = 64
    for i in range(steps):
        t = 1.0 - (i + 0.5) / steps
        parts.append(f'<rect x="{lx:.3f}" y="{mt + ph * i / steps:.3f}" '
                     f'width="18" height="{ph / steps + 0.5:.3f}" fill="{_color(t)}"/>')
    parts.append(f'<rect x="{lx:.3f}" y="{mt:.3f}" width="18" height="{ph:.3f}" '
                 'fill="none" stroke="black" stroke-width="0.5"/>')
    parts.append(f'<text x="{lx + 24:.3f}" y="{mt + 10:.3f}" font-size="12">'
                 f'{fmt17(vmax)}</text>')
    parts.append(f'<text x="{lx + 24:.3f}" y="{mt + ph:.3f}" font-size="12">'
                 f'{fmt17(vmin)}</text>')
    parts.append(f'<text x="{lx:.3f}" y="{mt - 10:.3f}" font-size="12">min area</text>')
    parts.append('</svg>')
    Path(svg_out).write_text("\n".join(parts) + "\n", encoding="utf-8")
