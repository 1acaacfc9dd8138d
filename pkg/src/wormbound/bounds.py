"""Analytic lower bounds on the hull area and their certified minimization.

Four closed-form bounds as functions of the two angles (radians):

    g(alpha)      = (sqrt(2)/6) sin(alpha)
    h(beta)       = max{ sin(beta - 30deg)/4, sin(beta + 30deg)/4 }
    f(alpha,beta) = (cos(alpha - beta + 15deg)/2 + cos(alpha - 45deg)) / 6
    p             = max(f, g, h)

g and h come from heights of shape diagonals over the segment and hold
on the canonical angle ranges; f holds for configurations in K1 and K2.
The certifier establishes min p >= target over the K1 angle box
[45deg, 78deg] x [83deg, 97deg] using the Lipschitz constant of p,
which is at most 1/4 per radian in each coordinate:

    |df/dalpha| <= (1/2 + 1)/6 = 1/4,   |df/dbeta| <= 1/12,
    |dg'| <= sqrt(2)/6 < 1/4,           |dh'| <= 1/4,

and a max of L-Lipschitz functions is L-Lipschitz.  A cell of size
(sa, sb) evaluated at its center c therefore satisfies
min_cell p >= p(c) - (sa + sb)/8, which is the slack used by both
certification methods.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .configuration import K1_ALPHA, K1_BETA
from .errors import InputError

__all__ = [
    "LIPSCHITZ_P",
    "D_PERIMETER_CONSTANT",
    "BoundBreakdown",
    "Certificate",
    "ErrorBound",
    "f_bound",
    "g_bound",
    "h_bound",
    "p_bound",
    "bound_breakdown",
    "certify_theorem",
    "grid_error_bound",
    "domain_D_perimeter",
    "circle_point_hull_area",
    "safe_center_radius",
]

LIPSCHITZ_P = 0.25  # per radian, per coordinate (derivation in module docstring)

# Perimeter constant used inside the grid error bound (the published
# value; domain_D_perimeter() reports the closed form, which agrees to
# within 2e-5).
D_PERIMETER_CONSTANT = 3.46364

_SQRT2_6 = math.sqrt(2.0) / 6.0
_DEG15 = math.pi / 12.0
_DEG30 = math.pi / 6.0
_DEG45 = math.pi / 4.0

METHOD_FULL_GRID = "FullGrid"
METHOD_BRANCH_AND_BOUND = "BranchAndBound"
STATUS_CERTIFIED = "Certified"
STATUS_FAILED = "Failed"


def g_bound(alpha: float) -> float:
    """Height bound from the square's diagonal."""
    return _SQRT2_6 * math.sin(alpha)


def h_bound(beta: float) -> float:
    """Height bound from the triangle's two segment-spanning quadrilaterals."""
    return max(0.25 * math.sin(beta - _DEG30), 0.25 * math.sin(beta + _DEG30))


def f_bound(alpha: float, beta: float) -> float:
    """Strip bound valid on K1 and K2 configurations."""
    return (0.5 * math.cos(alpha - beta + _DEG15) + math.cos(alpha - _DEG45)) / 6.0


def p_bound(alpha: float, beta: float) -> float:
    return max(f_bound(alpha, beta), g_bound(alpha), h_bound(beta))


@dataclass(frozen=True)
class BoundBreakdown:
    f: float
    g: float
    h: float
    p: float


def bound_breakdown(alpha: float, beta: float) -> BoundBreakdown:
    """All four bound values at (alpha, beta), with p = max(f, g, h) exactly.

    alpha must lie in [0, pi/2] and beta in [60deg, 120deg], the ranges
    on which the formulas are valid.
    """
    if not (0.0 <= alpha <= math.pi / 2.0):
        raise InputError(f"alpha {alpha!r} outside [0, pi/2]")
    if not (math.pi / 3.0 <= beta <= 2.0 * math.pi / 3.0):
        raise InputError(f"beta {beta!r} outside [pi/3, 2*pi/3]")
    f = f_bound(alpha, beta)
    g = g_bound(alpha)
    h = h_bound(beta)
    return BoundBreakdown(f=f, g=g, h=h, p=max(f, g, h))


@dataclass(frozen=True)
class Certificate:
    """Machine-checkable record of a lower-bound certification run."""

    target: float
    certified_min: float
    cells_examined: int
    max_depth: int
    method: str
    status: str

    @property
    def certified(self) -> bool:
        return self.status == STATUS_CERTIFIED

    def to_dict(self) -> dict:
        return {
            "target": self.target,
            "certified_min": self.certified_min,
            "cells_examined": self.cells_examined,
            "max_depth": self.max_depth,
            "method": self.method,
            "status": self.status,
        }


def worker_count() -> int:
    """Worker cap from WORMBOUND_THREADS (default: CPU count)."""
    raw = os.environ.get("WORMBOUND_THREADS")
    if raw is None:
        return os.cpu_count() or 1
    try:
        n = int(raw)
    except ValueError:
        raise InputError(f"WORMBOUND_THREADS must be a positive integer, got {raw!r}")
    if n < 1:
        raise InputError(f"WORMBOUND_THREADS must be a positive integer, got {raw!r}")
    return n


def _p_vectorized(alpha: np.ndarray, beta: np.ndarray) -> np.ndarray:
    f = (0.5 * np.cos(alpha - beta + _DEG15) + np.cos(alpha - _DEG45)) / 6.0
    g = _SQRT2_6 * np.sin(alpha)
    h = np.maximum(0.25 * np.sin(beta - _DEG30), 0.25 * np.sin(beta + _DEG30))
    return np.maximum(np.maximum(f, g), h)


def _certify_full_grid(target: float, resolution: float) -> Certificate:
    alo, ahi = K1_ALPHA
    blo, bhi = K1_BETA
    na = max(1, math.ceil((ahi - alo) / resolution))
    nb = max(1, math.ceil((bhi - blo) / resolution))
    sa = (ahi - alo) / na
    sb = (bhi - blo) / nb
    slack = LIPSCHITZ_P * 0.5 * (sa + sb)
    centers_b = blo + (np.arange(nb) + 0.5) * sb

    def row_chunk_min(lo: int, hi: int) -> float:
        a = alo + (np.arange(lo, hi) + 0.5) * sa
        return float(_p_vectorized(a[:, None], centers_b[None, :]).min())

    workers = min(worker_count(), na)
    chunk = max(1, math.ceil(na / (workers * 4)))
    spans = [(i, min(i + chunk, na)) for i in range(0, na, chunk)]
    if workers == 1:
        mins = [row_chunk_min(lo, hi) for lo, hi in spans]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            mins = list(pool.map(lambda s: row_chunk_min(*s), spans))
    certified_min = min(mins) - slack
    status = STATUS_CERTIFIED if certified_min >= target else STATUS_FAILED
    return Certificate(target=target, certified_min=certified_min,
                       cells_examined=na * nb, max_depth=0,
                       method=METHOD_FULL_GRID, status=status)


def _certify_branch_and_bound(target: float, resolution: float,
                              max_depth: int) -> Certificate:
    alo, ahi = K1_ALPHA
    blo, bhi = K1_BETA
    # Depth-first, low cell first; the coordinate with the larger slack
    # contribution is split, ties split alpha.  The traversal order is
    # deterministic so certificates are reproducible.
    stack = [(alo, ahi, blo, bhi, 0)]
    cells = 0
    deepest = 0
    certified_min = math.inf
    while stack:
        a0, a1, b0, b1, depth = stack.pop()
        cells += 1
        deepest = max(deepest, depth)
        sa = a1 - a0
        sb = b1 - b0
        bound = p_bound(0.5 * (a0 + a1), 0.5 * (b0 + b1)) \
            - LIPSCHITZ_P * 0.5 * (sa + sb)
        if bound >= target:
            certified_min = min(certified_min, bound)
            continue
        if depth >= max_depth or max(sa, sb) <= resolution:
            return Certificate(target=target,
                               certified_min=min(certified_min, bound),
                               cells_examined=cells, max_depth=deepest,
                               method=METHOD_BRANCH_AND_BOUND,
                               status=STATUS_FAILED)
        if sa >= sb:
            mid = 0.5 * (a0 + a1)
            stack.append((mid, a1, b0, b1, depth + 1))
            stack.append((a0, mid, b0, b1, depth + 1))
        else:
            mid = 0.5 * (b0 + b1)
            stack.append((a0, a1, mid, b1, depth + 1))
            stack.append((a0, a1, b0, mid, depth + 1))
    return Certificate(target=target, certified_min=certified_min,
                       cells_examined=cells, max_depth=deepest,
                       method=METHOD_BRANCH_AND_BOUND, status=STATUS_CERTIFIED)


def certify_theorem(target: float, method: str = METHOD_BRANCH_AND_BOUND,
                    resolution: float | None = None,
                    max_depth: int = 60) -> Certificate:
    """Certify min p >= target over the K1 angle box, or fail honestly.

    FullGrid evaluates p at the centers of a uniform grid with cells no
    wider than `resolution` and subtracts the Lipschitz slack.
    BranchAndBound splits cells whose center value minus slack falls
    below the target, failing once a cell reaches `resolution` (or
    `max_depth`) without clearing.
    """
    if not (0.0 < target <= 0.25):
        raise InputError(f"target {target!r} outside (0, 0.25]")
    if method not in (METHOD_FULL_GRID, METHOD_BRANCH_AND_BOUND):
        raise InputError(f"unknown certification method {method!r}")
    if resolution is None:
        resolution = 2e-4 if method == METHOD_FULL_GRID else 1e-7
    if not (resolution > 0.0 and math.isfinite(resolution)):
        raise InputError(f"resolution {resolution!r} must be positive")
    if method == METHOD_FULL_GRID:
        return _certify_full_grid(target, resolution)
    return _certify_branch_and_bound(target, resolution, max_depth)


@dataclass(frozen=True)
class ErrorBound:
    """Bound on the area error of a grid search with steps d1 (coords)
    and d2 (angles)."""

    d1: float
    d2: float
    delta: float          # max vertex displacement between adjacent nodes
    exact_bound: float    # delta * perimeter + pi * delta^2
    linear_bound: float   # published first-order constants

    def to_dict(self) -> dict:
        return {
            "d1": self.d1, "d2": self.d2, "delta": self.delta,
            "exact_bound": self.exact_bound, "linear_bound": self.linear_bound,
        }


def grid_error_bound(d1: float, d2: float) -> ErrorBound:
    """How far the grid optimum can sit above the true minimum.

    Moving every parameter by at most (d1/2, d2/2) displaces each shape
    vertex by at most delta = d1/sqrt(2) + sin(d2/4)/sqrt(3), and for a
    hull inside the K2 region |mu' - mu| <= delta*perimeter + pi*delta^2.
    The linear form 2.44916*d1 + 0.49993*d2 drops the quadratic term.
    """
    if not (d1 >= 0.0 and d2 >= 0.0 and math.isfinite(d1) and math.isfinite(d2)):
        raise InputError(f"grid steps must be non-negative, got ({d1!r}, {d2!r})")
    delta = d1 / math.sqrt(2.0) + math.sin(d2 / 4.0) / math.sqrt(3.0)
    exact = delta * D_PERIMETER_CONSTANT + math.pi * delta * delta
    linear = 2.44916 * d1 + 0.49993 * d2
    return ErrorBound(d1=d1, d2=d2, delta=delta,
                      exact_bound=exact, linear_bound=linear)


def domain_D_perimeter() -> float:
    """Perimeter of D = {|y| <= 0.46} cut by the two unit disks around
    (0, 0) and (1, 0): two horizontal chords plus four equal arcs.

    Closed form: 2*(2*sqrt(1 - 0.46^2) - 1) + 4*arcsin(0.46).
    """
    return 2.0 * (2.0 * math.sqrt(1.0 - 0.46 ** 2) - 1.0) + 4.0 * math.asin(0.46)


def circle_point_hull_area(d: float, r: float) -> float:
    """Area of the convex hull of a radius-r disk and a point at distance d
    from its center: tangent kite r*sqrt(d^2 - r^2) plus the circular
    sector of angle 2*(pi - arccos(r/d)).  Equals pi*r^2 at d = r.
    """
    if not (r > 0.0 and math.isfinite(r) and math.isfinite(d)):
        raise InputError(f"need r > 0 and finite d, got d={d!r} r={r!r}")
    if d < r:
        raise InputError(f"point inside the disk: d={d!r} < r={r!r}")
    return r * math.sqrt(d * d - r * r) + r * r * (math.pi - math.acos(r / d))


def safe_center_radius(r: float, target_area: float) -> float:
    """Smallest center distance d with circle_point_hull_area(d, r) >=
    target_area, by bisection to 1e-9.  Monotone in target_area."""
    if not (r > 0.0 and math.isfinite(r)):
        raise InputError(f"need r > 0, got {r!r}")
    if not (target_area > math.pi * r * r):
        raise InputError(
            f"target area {target_area!r} not above the disk area {math.pi * r * r!r}")
    lo, hi = r, 2.0 * r
    while circle_point_hull_area(hi, r) < target_area:
        lo, hi = hi, 2.0 * hi
    while hi - lo > 1e-9:
        mid = 0.5 * (lo + hi)
        if circle_point_hull_area(mid, r) >= target_area:
            hi = mid
        else:
            lo = mid
    return hi
