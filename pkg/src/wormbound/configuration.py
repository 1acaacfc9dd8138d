"""Configurations of the unit segment, the side-1/2 triangle and the
side-1/3 square.

A configuration is the 6-tuple (x1, y1, alpha, x2, y2, beta): square
center, square rotation, triangle centroid, triangle rotation.  The
segment is fixed from (0, 0) to (1, 0).  Angles are radians everywhere
in the library; the CLI accepts a ``deg`` suffix for convenience.

The square has circumradius sqrt(2)/6 (side 1/3) and vertex k sits at
angle alpha + k*pi/2 from the center; the triangle has circumradius
sqrt(3)/6 (side 1/2) and vertex k at angle beta + 2k*pi/3 from the
centroid.  Rotational symmetry makes alpha periodic mod pi/2 and beta
periodic mod 2*pi/3.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import InputError
from .geometry import Point, _hull_ring, _ring_area, _ring_meets_unit_segment

__all__ = [
    "SQUARE_CIRCUMRADIUS",
    "TRIANGLE_CIRCUMRADIUS",
    "ALPHA_PERIOD",
    "BETA_PERIOD",
    "Config",
    "SymmetryKind",
    "DomainBox",
    "square_vertices",
    "triangle_vertices",
    "config_points",
    "mu",
    "apply_symmetry",
    "canonicalize",
    "in_K1",
    "in_K2",
    "search_domain",
]

SQUARE_CIRCUMRADIUS = math.sqrt(2.0) / 6.0    # half diagonal of a side-1/3 square
TRIANGLE_CIRCUMRADIUS = math.sqrt(3.0) / 6.0  # circumradius of a side-1/2 triangle
ALPHA_PERIOD = math.pi / 2.0
BETA_PERIOD = 2.0 * math.pi / 3.0

# Angle window outside which the height bounds already force area > 0.23.
K1_ALPHA = (math.radians(45.0), math.radians(78.0))
K1_BETA = (math.radians(83.0), math.radians(97.0))

# Normalization set: every shape vertex within distance 1 of the segment
# and |y| <= 0.46, both shapes meeting the segment.
K2_Y_LIMIT = 0.46


@dataclass(frozen=True)
class Config:
    """Placement parameters; all finite, angles stored raw (not reduced)."""

    x1: float
    y1: float
    alpha: float
    x2: float
    y2: float
    beta: float

    def __post_init__(self):
        for name, v in self.__dict__.items():
            if not math.isfinite(v):
                raise InputError(f"non-finite config field {name}={v!r}")

    def as_tuple(self) -> tuple[float, float, float, float, float, float]:
        return (self.x1, self.y1, self.alpha, self.x2, self.y2, self.beta)


class SymmetryKind(Enum):
    """Isometries of the plane that fix the unit segment as a set."""

    REFLECT_HALF_X = "ReflectHalfX"   # reflection across the line x = 1/2
    HALF_TURN = "HalfTurn"            # rotation by pi about (1/2, 0)
    REFLECT_X_AXIS = "ReflectXAxis"   # reflection across the x-axis


@dataclass(frozen=True)
class DomainBox:
    """Per-parameter closed intervals (lo, hi) for the six coordinates."""

    x1: tuple[float, float]
    y1: tuple[float, float]
    alpha: tuple[float, float]
    x2: tuple[float, float]
    y2: tuple[float, float]
    beta: tuple[float, float]

    def __post_init__(self):
        for name, (lo, hi) in self.intervals().items():
            if not (math.isfinite(lo) and math.isfinite(hi)):
                raise InputError(f"non-finite interval for {name}")
            if lo > hi:
                raise InputError(f"empty interval for {name}: ({lo}, {hi})")
        if self.alpha[1] - self.alpha[0] > ALPHA_PERIOD + 1e-12:
            raise InputError("alpha interval exceeds one canonical period")
        if self.beta[1] - self.beta[0] > BETA_PERIOD + 1e-12:
            raise InputError("beta interval exceeds one canonical period")

    def intervals(self) -> dict[str, tuple[float, float]]:
        return {
            "x1": self.x1, "y1": self.y1, "alpha": self.alpha,
            "x2": self.x2, "y2": self.y2, "beta": self.beta,
        }

    def contains(self, c: Config, slack: float = 0.0) -> bool:
        for (lo, hi), v in zip(self.intervals().values(), c.as_tuple()):
            if v < lo - slack or v > hi + slack:
                return False
        return True


def _square_xy(x1: float, y1: float, alpha: float) -> list[tuple[float, float]]:
    r = SQUARE_CIRCUMRADIUS
    return [(x1 + r * math.cos(alpha + k * (math.pi / 2.0)),
             y1 + r * math.sin(alpha + k * (math.pi / 2.0))) for k in range(4)]


def _triangle_xy(x2: float, y2: float, beta: float) -> list[tuple[float, float]]:
    r = TRIANGLE_CIRCUMRADIUS
    return [(x2 + r * math.cos(beta + k * (2.0 * math.pi / 3.0)),
             y2 + r * math.sin(beta + k * (2.0 * math.pi / 3.0))) for k in range(3)]


def square_vertices(x1: float, y1: float, alpha: float) -> tuple[Point, ...]:
    """Vertices A, B, C, D counterclockwise; A at angle alpha from the center."""
    return tuple(Point(x, y) for x, y in _square_xy(x1, y1, alpha))


def triangle_vertices(x2: float, y2: float, beta: float) -> tuple[Point, ...]:
    """Vertices P, Q, R counterclockwise; P at angle beta from the centroid."""
    return tuple(Point(x, y) for x, y in _triangle_xy(x2, y2, beta))


def _points_raw(c: Config) -> list[tuple[float, float]]:
    return ([(0.0, 0.0), (1.0, 0.0)]
            + _square_xy(c.x1, c.y1, c.alpha)
            + _triangle_xy(c.x2, c.y2, c.beta))


def config_points(c: Config) -> list[Point]:
    """The nine defining points [E, F, A, B, C, D, P, Q, R]."""
    return [Point(x, y) for x, y in _points_raw(c)]


def _mu_raw(x1: float, y1: float, a: float,
            x2: float, y2: float, b: float) -> float:
    pts = [(0.0, 0.0), (1.0, 0.0)]
    pts += _square_xy(x1, y1, a)
    pts += _triangle_xy(x2, y2, b)
    return _ring_area(_hull_ring(pts))


def mu(c: Config) -> float:
    """Area of the convex hull of the configuration's nine points."""
    return _mu_raw(c.x1, c.y1, c.alpha, c.x2, c.y2, c.beta)


def _mod_period(angle: float, period: float) -> float:
    r = math.fmod(angle, period)
    if r < 0.0:
        r += period
    if r >= period:  # fmod can return exactly `period` after the shift
        r -= period
    return r


_ISOMETRY = {
    SymmetryKind.REFLECT_HALF_X: lambda x, y: (1.0 - x, y),
    SymmetryKind.HALF_TURN: lambda x, y: (1.0 - x, -y),
    SymmetryKind.REFLECT_X_AXIS: lambda x, y: (x, -y),
}


def apply_symmetry(c: Config, s: SymmetryKind) -> Config:
    """Parameters of the configuration transformed by a segment-fixing isometry.

    One code path serves all three maps: transform the shapes' vertex
    sets, take the transformed centers, and recover each canonical angle
    from a transformed vertex direction modulo the shape's rotational
    symmetry.  The hull area is invariant because the segment is fixed.
    """
    iso = _ISOMETRY[s]
    sx, sy = iso(c.x1, c.y1)
    ax, ay = iso(*_square_xy(c.x1, c.y1, c.alpha)[0])
    alpha = _mod_period(math.atan2(ay - sy, ax - sx), ALPHA_PERIOD)
    tx, ty = iso(c.x2, c.y2)
    px, py = iso(*_triangle_xy(c.x2, c.y2, c.beta)[0])
    beta = _mod_period(math.atan2(py - ty, px - tx), BETA_PERIOD)
    return Config(sx, sy, alpha, tx, ty, beta)


def canonicalize(c: Config) -> Config:
    """Reduce alpha into [0, pi/2) and beta into [0, 2*pi/3); centers unchanged.

    The vertex sets are preserved (up to relabeling) by rotational symmetry.
    """
    return Config(c.x1, c.y1, _mod_period(c.alpha, ALPHA_PERIOD),
                  c.x2, c.y2, _mod_period(c.beta, BETA_PERIOD))


def in_K1(c: Config) -> bool:
    """True iff alpha in [45 deg, 78 deg] and beta in [83 deg, 97 deg] (closed).

    Assumes c is canonical; raw angles are not reduced here.
    """
    return (K1_ALPHA[0] <= c.alpha <= K1_ALPHA[1]
            and K1_BETA[0] <= c.beta <= K1_BETA[1])


def _dist2_to_segment(x: float, y: float) -> float:
    t = min(1.0, max(0.0, x))
    return (x - t) * (x - t) + y * y


def in_K2(c: Config) -> bool:
    """Membership in the normalization set that contains some minimizer.

    Checks, on the seven shape vertices (sufficient by convexity):
    distance to the segment at most 1 and |y| <= 0.46; plus both shapes
    meeting the closed segment.
    """
    sq = _square_xy(c.x1, c.y1, c.alpha)
    tr = _triangle_xy(c.x2, c.y2, c.beta)
    for x, y in sq:
        if _dist2_to_segment(x, y) > 1.0 or abs(y) > K2_Y_LIMIT:
            return False
    for x, y in tr:
        if _dist2_to_segment(x, y) > 1.0 or abs(y) > K2_Y_LIMIT:
            return False
    return _ring_meets_unit_segment(sq) and _ring_meets_unit_segment(tr)


def search_domain() -> DomainBox:
    """Box certain to contain every canonical configuration in K1 and K2.

    Both shapes must meet the segment, which keeps each center within its
    circumradius of the segment; the angle windows are the K1 intervals.
    """
    rs = SQUARE_CIRCUMRADIUS
    rt = TRIANGLE_CIRCUMRADIUS
    return DomainBox(
        x1=(-rs, 1.0 + rs), y1=(-rs, rs), alpha=K1_ALPHA,
        x2=(-rt, 1.0 + rt), y2=(-rt, rt), beta=K1_BETA,
    )


def canonical_envelope() -> DomainBox:
    """Permissive validation box for grid stages.

    Searches may scan full angle periods (needed e.g. for symmetric
    surface scans) and any centers that could conceivably satisfy the
    normalization set: vertices within distance 1 of the segment keep
    centers inside x in [-1, 2], |y| <= 0.46.  Nodes that fail the set
    are skipped during search; this box only rejects absurd stages.
    """
    return DomainBox(
        x1=(-1.0, 2.0), y1=(-K2_Y_LIMIT, K2_Y_LIMIT), alpha=(0.0, ALPHA_PERIOD),
        x2=(-1.0, 2.0), y2=(-K2_Y_LIMIT, K2_Y_LIMIT), beta=(0.0, BETA_PERIOD),
    )
