"""Geometric lower-bound machinery for minimal covers of a unit segment,
a side-1/2 equilateral triangle and a side-1/3 square."""

from .bounds import (
    BoundBreakdown,
    Certificate,
    ErrorBound,
    bound_breakdown,
    certify_theorem,
    circle_point_hull_area,
    domain_D_perimeter,
    f_bound,
    g_bound,
    grid_error_bound,
    h_bound,
    p_bound,
    safe_center_radius,
)
from .configuration import (
    Config,
    DomainBox,
    SymmetryKind,
    apply_symmetry,
    canonicalize,
    config_points,
    in_K1,
    in_K2,
    mu,
    search_domain,
    square_vertices,
    triangle_vertices,
)
from .errors import CsvFormatError, InputError, PlanError, WormboundError
from .geometry import (
    ConvexPolygon,
    Point,
    convex_hull,
    height,
    point_segment_distance,
    polygon_area,
    segment_polygon_intersects,
)
from .search import (
    PivotParams,
    SearchPlan,
    SearchResult,
    SearchStage,
    SurfaceGrid,
    conjecture_search,
    grid_search,
    pivot_config,
    run_plan,
    surface_min,
)

__version__ = "0.1.0"
