"""Grid search over configurations, per-cell surface accumulation, and
the two-angle pivot search.

The 6-parameter grid is factored into square slices (x1, y1, alpha) and
triangle slices (x2, y2, beta).  Each slice carries the hull area of the
segment with that single shape, which is a lower bound on the full area
by hull monotonicity, so node pairs whose slice bounds exceed the
incumbent can be skipped without changing the minimum.  A second, much
tighter bound comes from sampled hull silhouettes: the vertical extent
of a hull is a concave function of x, chords sampled under it stay under
it, and the pair hull's extent dominates the pointwise maximum of the
two single-shape extents.  The trapezoid sum of the sampled maxima is
therefore a sound lower bound on the pair area and prunes pairs whose
shapes sit far apart along the segment.

When a surface accumulator is attached, pruning is done against each
(x2, y2) cell's own incumbent, which keeps every cell minimum exact.
Results carry a deterministic tie-break: among equal areas the
lexicographically smallest parameter 6-tuple wins, so outcomes do not
depend on evaluation order or worker scheduling.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Iterator, Optional

import numpy as np

from .configuration import (
    ALPHA_PERIOD,
    BETA_PERIOD,
    Config,
    DomainBox,
    _square_xy,
    _triangle_xy,
    canonical_envelope,
    mu,
    search_domain,
)
from .errors import InputError, PlanError
from .geometry import _hull_ring, _ring_area

__all__ = [
    "SearchStage",
    "SearchPlan",
    "SearchResult",
    "SurfaceGrid",
    "PivotParams",
    "grid_search",
    "run_plan",
    "surface_min",
    "pivot_config",
    "conjecture_search",
]

_PROFILE_SAMPLES = 24  # x-samples per hull silhouette

PSI_RANGE = (math.pi / 2.0, 5.0 * math.pi / 6.0)   # closed
PHI_RANGE = (math.pi, 1.5 * math.pi)               # open


@dataclass(frozen=True)
class SearchStage:
    """One grid stage: either an explicit box or an auto-zoom marker."""

    box: Optional[DomainBox]
    d1: float
    d2: float
    auto: bool = False

    def __post_init__(self):
        if not (self.d1 > 0.0 and math.isfinite(self.d1)
                and self.d2 > 0.0 and math.isfinite(self.d2)):
            raise PlanError(f"grid steps must be positive, got ({self.d1!r}, {self.d2!r})")
        if self.auto == (self.box is not None):
            raise PlanError("stage needs exactly one of: explicit box, auto=True")


@dataclass(frozen=True)
class SearchPlan:
    stages: tuple[SearchStage, ...]

    def __post_init__(self):
        if not self.stages:
            raise PlanError("plan has no stages")
        if self.stages[0].auto:
            raise PlanError("first stage cannot be auto (no previous best)")


@dataclass(frozen=True)
class SearchResult:
    best: Config
    area: float
    evaluations: int
    pruned: int
    stage_index: int

    def to_dict(self) -> dict:
        return {
            "best": {
                "x1": self.best.x1, "y1": self.best.y1, "alpha": self.best.alpha,
                "x2": self.best.x2, "y2": self.best.y2, "beta": self.best.beta,
            },
            "area": self.area,
            "evaluations": self.evaluations,
            "pruned": self.pruned,
            "stage_index": self.stage_index,
        }


class SurfaceGrid:
    """Per-(x2, y2) cell minima of the hull area over all other parameters.

    Cells never reached stay at +inf with argmin None and are omitted
    from CSV output.
    """

    def __init__(self, x2_range: tuple[float, float], y2_range: tuple[float, float],
                 nx: int, ny: int):
        if nx < 1 or ny < 1:
            raise InputError(f"cell counts must be positive, got ({nx}, {ny})")
        if not (x2_range[0] < x2_range[1] and y2_range[0] < y2_range[1]):
            raise InputError("surface box must have positive extent")
        self.x2_range = (float(x2_range[0]), float(x2_range[1]))
        self.y2_range = (float(y2_range[0]), float(y2_range[1]))
        self.nx = int(nx)
        self.ny = int(ny)
        self.min_area = np.full((self.nx, self.ny), math.inf)
        self.argmin: list[list[Optional[Config]]] = \
            [[None] * self.ny for _ in range(self.nx)]

    @property
    def cell_width(self) -> float:
        return (self.x2_range[1] - self.x2_range[0]) / self.nx

    @property
    def cell_height(self) -> float:
        return (self.y2_range[1] - self.y2_range[0]) / self.ny

    def cell_index(self, x2: float, y2: float) -> Optional[tuple[int, int]]:
        """Half-open binning [lo + i*w, lo + (i+1)*w); the top boundary
        joins the last cell.  None when (x2, y2) is outside the box."""
        ix = math.floor((x2 - self.x2_range[0]) / self.cell_width)
        iy = math.floor((y2 - self.y2_range[0]) / self.cell_height)
        if ix == self.nx and x2 <= self.x2_range[1]:
            ix = self.nx - 1
        if iy == self.ny and y2 <= self.y2_range[1]:
            iy = self.ny - 1
        if 0 <= ix < self.nx and 0 <= iy < self.ny:
            return ix, iy
        return None

    def cell_center(self, ix: int, iy: int) -> tuple[float, float]:
        return (self.x2_range[0] + (ix + 0.5) * self.cell_width,
                self.y2_range[0] + (iy + 0.5) * self.cell_height)

    def update(self, ix: int, iy: int, area: float, config: Config) -> None:
        cur = self.argmin[ix][iy]
        if cur is None or (area, config.as_tuple()) < (self.min_area[ix, iy],
                                                       cur.as_tuple()):
            self.min_area[ix, iy] = area
            self.argmin[ix][iy] = config

    def cells(self) -> Iterator[tuple[int, int, float, Config]]:
        """Non-empty cells in row-major (ix, iy) order."""
        for ix in range(self.nx):
            for iy in range(self.ny):
                c = self.argmin[ix][iy]
                if c is not None:
                    yield ix, iy, float(self.min_area[ix, iy]), c

    def global_min(self) -> tuple[float, Optional[Config]]:
        best_area = math.inf
        best: Optional[Config] = None
        for _, _, area, cfg in self.cells():
            if best is None or (area, cfg.as_tuple()) < (best_area, best.as_tuple()):
                best_area, best = area, cfg
        return best_area, best


def _grid_axis(lo: float, hi: float, step: float) -> np.ndarray:
    """Nodes lo + k*step up to hi; a box narrower than one step yields
    the single corner node."""
    if hi < lo:
        raise PlanError(f"empty axis ({lo}, {hi})")
    n = int(math.floor((hi - lo) / step + 1e-9)) + 1
    return lo + np.arange(max(n, 1)) * step


def _validate_stage_box(box: DomainBox) -> None:
    env = canonical_envelope()
    for name, (lo, hi) in box.intervals().items():
        elo, ehi = env.intervals()[name]
        if lo < elo - 1e-9 or hi > ehi + 1e-9:
            raise PlanError(
                f"stage interval {name}=({lo}, {hi}) outside the admissible "
                f"domain ({elo}, {ehi})")


class _SliceSet:
    """Admissible one-shape slices of a stage grid, sorted by hull area."""

    __slots__ = ("params", "area", "upper", "lower", "support", "verts",
                 "xmin", "xmax", "count")

    def __init__(self, params: list[tuple[float, float, float]],
                 verts: list[list[tuple[float, float]]],
                 area: np.ndarray, xmin: float, xmax: float):
        self.params = params
        self.verts = verts
        self.area = area
        self.upper: Optional[np.ndarray] = None
        self.lower: Optional[np.ndarray] = None
        self.support: Optional[np.ndarray] = None
        self.xmin = xmin
        self.xmax = xmax
        self.count = len(params)


def _square_mask(X: np.ndarray, Y: np.ndarray, A: np.ndarray) -> np.ndarray:
    return _shape_mask(X, Y, A, math.sqrt(2.0) / 6.0, math.pi / 2.0, 4)


def _triangle_mask(X: np.ndarray, Y: np.ndarray, A: np.ndarray) -> np.ndarray:
    return _shape_mask(X, Y, A, math.sqrt(3.0) / 6.0, 2.0 * math.pi / 3.0, 3)


def _shape_mask(X: np.ndarray, Y: np.ndarray, A: np.ndarray,
                radius: float, spacing: float, nv: int) -> np.ndarray:
    """Vectorized mirror of in_K2's per-shape conditions."""
    vx = [X + radius * np.cos(A + k * spacing) for k in range(nv)]
    vy = [Y + radius * np.sin(A + k * spacing) for k in range(nv)]
    ok = np.ones(X.shape, dtype=bool)
    for k in range(nv):
        t = np.clip(vx[k], 0.0, 1.0)
        ok &= (vx[k] - t) ** 2 + vy[k] ** 2 <= 1.0
        ok &= np.abs(vy[k]) <= 0.46
    # closed intersection with the unit segment: the polygon's section at
    # y = 0 must overlap [0, 1]
    xlo = np.full(X.shape, np.inf)
    xhi = np.full(X.shape, -np.inf)
    for k in range(nv):
        x0, y0 = vx[k], vy[k]
        x1, y1 = vx[(k + 1) % nv], vy[(k + 1) % nv]
        on_line = y0 == 0.0
        xlo = np.where(on_line, np.minimum(xlo, x0), xlo)
        xhi = np.where(on_line, np.maximum(xhi, x0), xhi)
        crossing = (y0 * y1) < 0.0
        denom = np.where(crossing, y1 - y0, 1.0)
        xc = x0 - y0 * (x1 - x0) / denom
        xlo = np.where(crossing, np.minimum(xlo, xc), xlo)
        xhi = np.where(crossing, np.maximum(xhi, xc), xhi)
    ok &= (xhi >= 0.0) & (xlo <= 1.0)
    return ok


def _build_slices(box: DomainBox, d1: float, d2: float, shape: str) -> _SliceSet:
    if shape == "square":
        axes = (_grid_axis(*box.x1, d1), _grid_axis(*box.y1, d1),
                _grid_axis(*box.alpha, d2))
        mask_fn, verts_fn = _square_mask, _square_xy
    else:
        axes = (_grid_axis(*box.x2, d1), _grid_axis(*box.y2, d1),
                _grid_axis(*box.beta, d2))
        mask_fn, verts_fn = _triangle_mask, _triangle_xy
    X, Y, A = (m.ravel() for m in np.meshgrid(*axes, indexing="ij"))
    keep = mask_fn(X, Y, A)
    X, Y, A = X[keep], Y[keep], A[keep]

    params: list[tuple[float, float, float]] = []
    verts: list[list[tuple[float, float]]] = []
    areas = np.empty(X.size)
    xmin, xmax = math.inf, -math.inf
    base = [(0.0, 0.0), (1.0, 0.0)]
    for i in range(X.size):
        trip = (float(X[i]), float(Y[i]), float(A[i]))
        vs = verts_fn(*trip)
        ring = _hull_ring(base + vs)
        params.append(trip)
        verts.append(vs)
        areas[i] = _ring_area(ring)
        xmin = min(xmin, ring[0][0])
        xmax = max(xmax, max(p[0] for p in ring))
    order = np.argsort(areas, kind="stable")
    params = [params[i] for i in order]
    verts = [verts[i] for i in order]
    return _SliceSet(params, verts, areas[order], xmin, xmax)


def _chains(ring: list[tuple[float, float]], xs: np.ndarray
            ) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Chord samples of a hull's upper and lower boundary chains.

    Upper samples never exceed the concave upper chain and lower samples
    never fall below the convex lower chain.  Outside the hull's x-range
    the pads (-1 for upper, +1 for lower) keep the samples dominated by
    any other hull's real chains, which all live inside |y| <= 0.5.
    """
    imax = max(range(len(ring)), key=lambda i: ring[i])
    low = ring[:imax + 1]
    up = ring[imax:] + ring[:1]
    lx = np.array([p[0] for p in low])
    ly = np.array([p[1] for p in low])
    ux = np.array([p[0] for p in up][::-1])
    uy = np.array([p[1] for p in up][::-1])
    supp = (xs >= lx[0]) & (xs <= lx[-1])
    u = np.where(supp, np.interp(xs, ux, uy), -1.0)
    lo = np.where(supp, np.interp(xs, lx, ly), 1.0)
    return u, lo, supp


def _attach_chains(slices: _SliceSet, xs: np.ndarray) -> None:
    base = [(0.0, 0.0), (1.0, 0.0)]
    n = slices.count
    slices.upper = np.empty((n, xs.size))
    slices.lower = np.empty((n, xs.size))
    slices.support = np.empty((n, xs.size), dtype=bool)
    for i in range(n):
        u, lo, supp = _chains(_hull_ring(base + slices.verts[i]), xs)
        slices.upper[i] = u
        slices.lower[i] = lo
        slices.support[i] = supp


def _pair_area(sq: _SliceSet, si: int, tr: _SliceSet, tj: int) -> float:
    """Hull area of segment + square slice + triangle slice.

    Inlined monotone chain over the nine points; produces bit-identical
    values to mu() on the same configuration.
    """
    pts = [(0.0, 0.0), (1.0, 0.0)]
    pts += sq.verts[si]
    pts += tr.verts[tj]
    pts.sort()
    lower: list[tuple[float, float]] = []
    for p in pts:
        px, py = p
        while len(lower) > 1:
            ax, ay = lower[-1]
            ox, oy = lower[-2]
            if (ax - ox) * (py - oy) - (ay - oy) * (px - ox) <= 0.0:
                lower.pop()
            else:
                break
        lower.append(p)
    upper: list[tuple[float, float]] = []
    for p in reversed(pts):
        px, py = p
        while len(upper) > 1:
            ax, ay = upper[-1]
            ox, oy = upper[-2]
            if (ax - ox) * (py - oy) - (ay - oy) * (px - ox) <= 0.0:
                upper.pop()
            else:
                break
        upper.append(p)
    ring = lower[:-1] + upper[:-1]
    if len(ring) < 3:
        return 0.0
    s = 0.0
    x0, y0 = ring[-1]
    for x1, y1 in ring:
        s += x0 * y1 - x1 * y0
        x0, y0 = x1, y1
    return 0.5 * s


_ENVELOPE_SPANS = (1, 2, 4, 8, 16, 8, 4, 2, 1)


def _envelope_passes(m: np.ndarray, support: np.ndarray) -> np.ndarray:
    """Tighten sampled silhouettes toward their concave envelope.

    Each pass lifts samples to chord midpoints of the current estimate.
    The pair profile is concave only on its support interval, so lifts
    are restricted to chords whose endpoints both lie in the support;
    every intermediate value then stays a chord value of points under
    the profile and the result remains a sound lower bound.
    """
    n = m.shape[-1]
    for s in _ENVELOPE_SPANS:
        if 2 * s >= n:
            continue
        mid = m[..., : -2 * s] + m[..., 2 * s:]
        mid *= 0.5
        # invalid chords collapse to 0, a no-op under maximum since the
        # samples are non-negative after edge zeroing
        mid *= support[..., : -2 * s] & support[..., 2 * s:]
        seg = m[..., s:-s]
        np.maximum(seg, mid, out=seg)
    return m


def _pair_key(sq: _SliceSet, si: int, tr: _SliceSet, tj: int, area: float):
    s = sq.params[si]
    t = tr.params[tj]
    return (area, s[0], s[1], s[2], t[0], t[1], t[2])


def _run_stage(box: DomainBox, d1: float, d2: float,
               surface: Optional[SurfaceGrid], prune: bool) -> SearchResult:
    _validate_stage_box(box)
    sq = _build_slices(box, d1, d2, "square")
    tr = _build_slices(box, d1, d2, "triangle")
    if sq.count == 0 or tr.count == 0:
        raise PlanError("stage has no nodes satisfying the normalization set")

    # group triangle slices by surface cell (index ncells = outside box)
    if surface is not None:
        ncells = surface.nx * surface.ny + 1
        cell_of: list[int] = []
        for (x2v, y2v, _b) in tr.params:
            idx = surface.cell_index(x2v, y2v)
            cell_of.append(idx[0] * surface.ny + idx[1] if idx is not None
                           else ncells - 1)
    else:
        ncells = 1
        cell_of = [0] * tr.count
    cell_js: list[list[int]] = [[] for _ in range(ncells)]
    for j in range(tr.count):  # already ascending by single-shape area
        cell_js[cell_of[j]].append(j)

    evaluations = 0
    best_key = [None] * ncells

    if prune:
        xs = np.linspace(min(sq.xmin, tr.xmin), max(sq.xmax, tr.xmax),
                         _PROFILE_SAMPLES)
        _attach_chains(sq, xs)
        _attach_chains(tr, xs)
        w = np.full(xs.size, xs[1] - xs[0])
        w[0] *= 0.5
        w[-1] *= 0.5
        m_buf = np.empty_like(sq.upper)
        l_buf = np.empty_like(sq.upper)
        s_buf = np.empty_like(sq.support)
        i_buf = np.empty_like(sq.support)

    for cell in range(ncells):
        js = cell_js[cell]
        if not js:
            continue
        if not prune:
            for j in js:
                for i in range(sq.count):
                    area = _pair_area(sq, i, tr, j)
                    evaluations += 1
                    key = _pair_key(sq, i, tr, j, area)
                    if best_key[cell] is None or key < best_key[cell]:
                        best_key[cell] = key
            continue
        # seed the incumbent with the smallest-area square slice
        js0 = js[0]
        area = _pair_area(sq, 0, tr, js0)
        evaluations += 1
        best_key[cell] = _pair_key(sq, 0, tr, js0, area)
        limit = best_key[cell][0]
        # one aggregated pass for the whole cell: the pointwise min of
        # the cell's upper chains and max of its lower chains bound every
        # triangle slice in the cell from below, so square slices
        # filtered here are gone for every j of the cell
        k0 = int(np.searchsorted(sq.area, limit, side="right"))
        if k0 == 0:
            continue
        u_cell = tr.upper[js].min(axis=0)
        l_cell = tr.lower[js].max(axis=0)
        s_cell = tr.support[js].all(axis=0)
        m = np.maximum(sq.upper[:k0], u_cell, out=m_buf[:k0])
        m -= np.minimum(sq.lower[:k0], l_cell, out=l_buf[:k0])
        supp = np.logical_or(sq.support[:k0], s_cell, out=s_buf[:k0])
        inner = i_buf[:k0]
        inner[:] = supp
        inner[:, 1:] &= supp[:, :-1]
        inner[:, :-1] &= supp[:, 1:]
        m *= inner
        cell_lb = m @ w
        np.maximum(cell_lb, sq.area[:k0], out=cell_lb)
        np.maximum(cell_lb, tr.area[js0], out=cell_lb)
        idx0 = np.nonzero(cell_lb <= limit)[0]
        if idx0.size == 0:
            continue
        cell_lb = cell_lb[idx0]
        sq_upper = sq.upper[idx0]
        sq_lower = sq.lower[idx0]
        sq_support = sq.support[idx0]
        sq_area = sq.area[idx0]
        for j in js:
            limit = best_key[cell][0]
            if tr.area[j] > limit:
                break  # ascending single-shape areas: the rest cannot win
            live = np.nonzero((cell_lb <= limit) & (sq_area <= limit))[0]
            if live.size == 0:
                continue
            if live.size == sq_area.size:
                up, lo, sp = sq_upper, sq_lower, sq_support
            else:
                up, lo, sp = sq_upper[live], sq_lower[live], sq_support[live]
            # pair-extent samples (cross-combined upper minus lower
            # chains), zeroed at and outside the union-support edge
            # samples so the trapezoid sum never exceeds the true pair
            # area; then a concave-envelope refinement on survivors
            m = np.maximum(up, tr.upper[j])
            m -= np.minimum(lo, tr.lower[j])
            supp = sp | tr.support[j]
            inner = supp.copy()
            inner[:, 1:] &= supp[:, :-1]
            inner[:, :-1] &= supp[:, 1:]
            m *= inner
            lb = m @ w
            np.maximum(lb, sq_area[live], out=lb)
            np.maximum(lb, tr.area[j], out=lb)
            sel = np.nonzero(lb <= limit)[0]
            if sel.size == 0:
                continue
            ref = _envelope_passes(m[sel], supp[sel]) @ w
            np.maximum(ref, lb[sel], out=ref)
            keep = np.nonzero(ref <= limit)[0]
            if keep.size == 0:
                continue
            order = np.argsort(ref[keep], kind="stable")
            chosen = idx0[live[sel[keep][order]]]
            lbs = ref[keep][order]
            for pos in range(chosen.size):
                limit = best_key[cell][0]
                if lbs[pos] > limit:
                    break
                i = int(chosen[pos])
                if i == 0 and j == js0:
                    continue  # already evaluated as the seed
                area = _pair_area(sq, i, tr, j)
                evaluations += 1
                key = _pair_key(sq, i, tr, j, area)
                if key < best_key[cell]:
                    best_key[cell] = key

    best = None
    for cell in range(ncells):
        key = best_key[cell]
        if key is None:
            continue
        if surface is not None and cell < ncells - 1:
            cfg = Config(*key[1:])
            surface.update(cell // surface.ny, cell % surface.ny, key[0], cfg)
        if best is None or key < best:
            best = key
    if best is None:
        raise PlanError("stage has no nodes satisfying the normalization set")
    cfg = Config(*best[1:])
    return SearchResult(best=cfg, area=best[0], evaluations=evaluations,
                        pruned=sq.count * tr.count - evaluations, stage_index=0)


def grid_search(stage: SearchStage, surface: Optional[SurfaceGrid] = None,
                prune: bool = True) -> SearchResult:
    """Minimize the hull area over one grid stage.

    Evaluates every admissible grid node (lower box corner plus integer
    multiples of d1/d2), skipping nodes outside the normalization set;
    pruning never changes the result.  With a surface accumulator, each
    (x2, y2) cell's exact minimum and argmin are recorded as well.
    """
    if stage.auto or stage.box is None:
        raise PlanError("grid_search needs a stage with an explicit box")
    return _run_stage(stage.box, stage.d1, stage.d2, surface, prune)


def _clamp_interval(lo: float, hi: float, bound: tuple[float, float]) -> tuple[float, float]:
    lo = min(max(lo, bound[0]), bound[1])
    hi = max(min(hi, bound[1]), bound[0])
    return (lo, hi) if lo <= hi else (hi, hi)


def _auto_box(best: Config, d1_prev: float, d2_prev: float) -> DomainBox:
    dom = search_domain().intervals()
    vals = best.as_tuple()
    spans = (2.0 * d1_prev, 2.0 * d1_prev, 2.0 * d2_prev,
             2.0 * d1_prev, 2.0 * d1_prev, 2.0 * d2_prev)
    ivs = {name: _clamp_interval(v - s, v + s, dom[name])
           for (name, _), v, s in zip(dom.items(), vals, spans)}
    return DomainBox(**ivs)


def run_plan(plan: SearchPlan) -> SearchResult:
    """Run the stages of a plan in order and return the final result.

    An auto stage searches a box centered on the previous best with
    half-width twice the previous stage's steps, clamped to the default
    search domain.
    """
    result: Optional[SearchResult] = None
    d1_prev = d2_prev = 0.0
    for idx, st in enumerate(plan.stages):
        if st.auto:
            assert result is not None  # guaranteed by SearchPlan validation
            stage = SearchStage(box=_auto_box(result.best, d1_prev, d2_prev),
                                d1=st.d1, d2=st.d2)
        else:
            stage = st
        result = replace(grid_search(stage), stage_index=idx)
        d1_prev, d2_prev = st.d1, st.d2
    assert result is not None
    return result


def surface_min(box: DomainBox, cells: tuple[int, int], d1: float,
                d2: float) -> SurfaceGrid:
    """Grid search with per-(x2, y2) accumulation into cells over the
    box's (x2, y2) range; returns the filled surface."""
    surface = SurfaceGrid(box.x2, box.y2, cells[0], cells[1])
    grid_search(SearchStage(box=box, d1=d1, d2=d2), surface=surface)
    return surface


@dataclass(frozen=True)
class PivotParams:
    """Angles of the two-hinge family: the triangle pivots on (1, 0) with
    edge direction psi, the square hangs from the triangle's top vertex
    with edge direction phi."""

    psi: float
    phi: float

    def __post_init__(self):
        if not (PSI_RANGE[0] <= self.psi <= PSI_RANGE[1]):
            raise InputError(
                f"psi {self.psi!r} outside [{PSI_RANGE[0]}, {PSI_RANGE[1]}]")
        if not (PHI_RANGE[0] < self.phi < PHI_RANGE[1]):
            raise InputError(
                f"phi {self.phi!r} outside ({PHI_RANGE[0]}, {PHI_RANGE[1]})")


def _pivot_points(psi: float, phi: float) -> list[tuple[float, float]]:
    v1 = (1.0 + 0.5 * math.cos(psi), 0.5 * math.sin(psi))
    v2 = (1.0 + 0.5 * math.cos(psi + math.pi / 3.0),
          0.5 * math.sin(psi + math.pi / 3.0))
    top = max(((1.0, 0.0), v1, v2), key=lambda v: (v[1], v[0]))
    e1 = (math.cos(phi) / 3.0, math.sin(phi) / 3.0)
    e2 = (math.cos(phi + math.pi / 2.0) / 3.0, math.sin(phi + math.pi / 2.0) / 3.0)
    return [(0.0, 0.0), (1.0, 0.0), v1, v2,
            top,
            (top[0] + e1[0], top[1] + e1[1]),
            (top[0] + e1[0] + e2[0], top[1] + e1[1] + e2[1]),
            (top[0] + e2[0], top[1] + e2[1])]


def pivot_config(p: PivotParams) -> Config:
    """Assemble the configuration pinned by the conjectured contact
    structure: one triangle vertex exactly at (1, 0) and the square's
    top vertex exactly at the triangle's top vertex."""
    pts = _pivot_points(p.psi, p.phi)
    (v1, v2) = pts[2], pts[3]
    cx2 = (1.0 + v1[0] + v2[0]) / 3.0
    cy2 = (0.0 + v1[1] + v2[1]) / 3.0
    beta = math.atan2(0.0 - cy2, 1.0 - cx2) % BETA_PERIOD
    s0, s1, s2, s3 = pts[4], pts[5], pts[6], pts[7]
    cx1 = 0.25 * (s0[0] + s1[0] + s2[0] + s3[0])
    cy1 = 0.25 * (s0[1] + s1[1] + s2[1] + s3[1])
    alpha = math.atan2(s0[1] - cy1, s0[0] - cx1) % ALPHA_PERIOD
    return Config(cx1, cy1, alpha, cx2, cy2, beta)


def _pivot_area(psi: float, phi: float) -> float:
    return _ring_area(_hull_ring(_pivot_points(psi, phi)))


def conjecture_search(coarse_step: float, final_step: float) -> SearchResult:
    """Multiresolution scan of the pivot family down to final_step.

    A full scan of the valid (psi, phi) ranges at coarse_step is refined
    by repeated zooming: a window of +/-10 previous steps around the
    incumbent, rescanned with the step divided by 10, until the step
    reaches final_step.  Ties prefer the smaller (psi, phi) pair.
    """
    if not (0.0 < final_step <= coarse_step and math.isfinite(coarse_step)):
        raise InputError(
            f"need 0 < final_step <= coarse_step, got ({coarse_step!r}, {final_step!r})")
    if coarse_step >= PHI_RANGE[1] - PHI_RANGE[0]:
        raise InputError(f"coarse step {coarse_step!r} wider than the phi range")

    evaluations = 0
    best: Optional[tuple[float, float, float]] = None

    def scan(psis, phis) -> None:
        nonlocal evaluations, best
        for psi in psis:
            for phi in phis:
                area = _pivot_area(psi, phi)
                evaluations += 1
                key = (area, psi, phi)
                if best is None or key < best:
                    best = key

    def window(center: float, step: float, lo: float, hi: float,
               closed: bool) -> list[float]:
        vals = set()
        for k in range(-100, 101):
            v = center + k * step
            if closed:
                vals.add(min(max(v, lo), hi))
            elif lo < v < hi:
                vals.add(v)
        return sorted(vals)

    step = coarse_step
    n_psi = int(math.floor((PSI_RANGE[1] - PSI_RANGE[0]) / step + 1e-9)) + 1
    psis = [min(PSI_RANGE[0] + k * step, PSI_RANGE[1]) for k in range(n_psi)]
    phis = []
    k = 1
    while PHI_RANGE[0] + k * step < PHI_RANGE[1] - 1e-15:
        phis.append(PHI_RANGE[0] + k * step)
        k += 1
    scan(psis, phis)

    stages = 1
    while step > final_step * (1.0 + 1e-9):
        step /= 10.0
        assert best is not None
        psis = window(best[1], step, *PSI_RANGE, closed=True)
        phis = window(best[2], step, *PHI_RANGE, closed=False)
        scan(psis, phis)
        stages += 1

    assert best is not None
    cfg = pivot_config(PivotParams(best[1], best[2]))
    return SearchResult(best=cfg, area=mu(cfg), evaluations=evaluations,
                        pruned=0, stage_index=stages - 1)
