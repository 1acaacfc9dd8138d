"""Planar primitives shared by the whole package.

Everything is measured against the fixed unit segment L from (0, 0) to
(1, 0).  All operations are pure functions of their inputs, use plain
double precision, and keep hulls in a canonical form (counterclockwise,
no collinear vertices, ring starts at the lexicographically smallest
vertex) so that equal hulls compare equal bit for bit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import InputError

__all__ = [
    "MAX_HULL_POINTS",
    "Point",
    "ConvexPolygon",
    "convex_hull",
    "polygon_area",
    "height",
    "point_segment_distance",
    "segment_polygon_intersects",
]

MAX_HULL_POINTS = 64

XY = tuple  # raw (x, y) tuples used on hot paths


@dataclass(frozen=True)
class Point:
    """Immutable planar point; construction rejects NaN and infinities."""

    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise InputError(f"non-finite point ({self.x!r}, {self.y!r})")


@dataclass(frozen=True)
class ConvexPolygon:
    """Counterclockwise convex vertex ring in canonical form.

    Rings of 0, 1 or 2 vertices are permitted (area 0).  For three or
    more vertices every consecutive triple must make a strict left turn
    and the ring must start at the lexicographically smallest vertex.
    """

    vertices: tuple[Point, ...]

    def __post_init__(self):
        vs = [(p.x, p.y) for p in self.vertices]
        n = len(vs)
        if n >= 2 and min(vs) != vs[0]:
            raise InputError("polygon ring must start at its smallest vertex")
        if n < 3:
            return
        for i in range(n):
            if _cross(vs[i], vs[(i + 1) % n], vs[(i + 2) % n]) <= 0.0:
                raise InputError("polygon ring must make strict left turns")


def _cross(o: XY, a: XY, b: XY) -> float:
    """Twice the signed area of triangle (o, a, b); > 0 for a left turn."""
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _hull_ring(pts: list[XY]) -> list[XY]:
    """Andrew monotone chain; strict turns only, so collinear boundary
    points are dropped.  Returns the ccw ring starting at the smallest
    point (sorted order guarantees the canonical start)."""
    pts = sorted(set(pts))
    if len(pts) <= 2:
        return pts
    lower: list[XY] = []
    for p in pts:
        while len(lower) > 1 and _cross(lower[-2], lower[-1], p) <= 0.0:
            lower.pop()
        lower.append(p)
    upper: list[XY] = []
    for p in reversed(pts):
        while len(upper) > 1 and _cross(upper[-2], upper[-1], p) <= 0.0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def _ring_area(ring: Sequence[XY]) -> float:
    """Shoelace area of a ccw ring; 0 for fewer than 3 vertices."""
    n = len(ring)
    if n < 3:
        return 0.0
    s = 0.0
    x0, y0 = ring[n - 1]
    for x1, y1 in ring:
        s += x0 * y1 - x1 * y0
        x0, y0 = x1, y1
    return 0.5 * s


def convex_hull(points: Sequence[Point]) -> ConvexPolygon:
    """Canonical convex hull of at most MAX_HULL_POINTS points.

    Interior points and collinear boundary midpoints are discarded.
    """
    if len(points) > MAX_HULL_POINTS:
        raise InputError(f"convex_hull limited to {MAX_HULL_POINTS} points")
    ring = _hull_ring([(p.x, p.y) for p in points])
    # The chain tests turns with its own pivot ordering; triples within a
    # rounding error of collinear can still fail the ring contract, which
    # evaluates the cyclic triples directly.  Drop offending midpoints
    # until the contract holds.
    changed = len(ring) >= 3
    while changed:
        changed = False
        n = len(ring)
        if n < 3:
            break
        for i in range(n):
            if _cross(ring[i], ring[(i + 1) % n], ring[(i + 2) % n]) <= 0.0:
                del ring[(i + 1) % n]
                changed = True
                break
    if len(ring) >= 2:
        start = ring.index(min(ring))
        ring = ring[start:] + ring[:start]
    return ConvexPolygon(tuple(Point(x, y) for x, y in ring))


def polygon_area(poly: ConvexPolygon) -> float:
    """Shoelace area of a canonical convex polygon (0 for < 3 vertices)."""
    return _ring_area([(p.x, p.y) for p in poly.vertices])


def height(u, v) -> float:
    """Height of vector v with respect to u: |v| sin(theta) = |u x v| / |u|.

    Accepts Point or any (x, y) pair; raises for a zero reference vector.
    """
    ux, uy = (u.x, u.y) if isinstance(u, Point) else (u[0], u[1])
    vx, vy = (v.x, v.y) if isinstance(v, Point) else (v[0], v[1])
    norm = math.hypot(ux, uy)
    if norm == 0.0:
        raise InputError("height undefined for zero reference vector")
    return abs(ux * vy - uy * vx) / norm


def point_segment_distance(p: Point) -> float:
    """Euclidean distance from p to the closed segment (0,0)-(1,0)."""
    t = min(1.0, max(0.0, p.x))
    return math.hypot(p.x - t, p.y)


def _between(a: XY, b: XY, p: XY) -> bool:
    """p within the closed bounding box of a, b (use with collinear p)."""
    return (min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
            and min(a[1], b[1]) <= p[1] <= max(a[1], b[1]))


def _segments_meet(p: XY, q: XY, a: XY, b: XY) -> bool:
    """Closed-segment intersection with exact sign tests; touching counts."""
    d1 = _cross(a, b, p)
    d2 = _cross(a, b, q)
    d3 = _cross(p, q, a)
    d4 = _cross(p, q, b)
    if ((d1 > 0 and d2 < 0) or (d1 < 0 and d2 > 0)) and \
       ((d3 > 0 and d4 < 0) or (d3 < 0 and d4 > 0)):
        return True
    if d1 == 0.0 and _between(a, b, p):
        return True
    if d2 == 0.0 and _between(a, b, q):
        return True
    if d3 == 0.0 and _between(p, q, a):
        return True
    if d4 == 0.0 and _between(p, q, b):
        return True
    return False


def _point_in_convex(ring: Sequence[XY], p: XY) -> bool:
    """Closed containment test for a ccw convex ring."""
    n = len(ring)
    for i in range(n):
        if _cross(ring[i], ring[(i + 1) % n], p) < 0.0:
            return False
    return True


def _ring_meets_unit_segment(ring: Sequence[XY]) -> bool:
    e, f = (0.0, 0.0), (1.0, 0.0)
    if _point_in_convex(ring, e) or _point_in_convex(ring, f):
        return True
    n = len(ring)
    for i in range(n):
        if _segments_meet(ring[i], ring[(i + 1) % n], e, f):
            return True
    return False


def segment_polygon_intersects(poly: ConvexPolygon) -> bool:
    """True iff the closed polygon meets the closed unit segment L.

    Touching at a single point counts; decided by exact orientation
    signs with no tolerance, so the predicate describes a closed set.
    """
    if len(poly.vertices) < 3:
        raise InputError("segment_polygon_intersects needs >= 3 vertices")
    return _ring_meets_unit_segment([(p.x, p.y) for p in poly.vertices])
