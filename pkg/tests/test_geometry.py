import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wormbound import (
    ConvexPolygon,
    InputError,
    Point,
    convex_hull,
    height,
    point_segment_distance,
    polygon_area,
    segment_polygon_intersects,
)
from wormbound.configuration import square_vertices

from .properties import check_hull_oracle_equivalence

finite = st.floats(min_value=-10.0, max_value=10.0, allow_nan=False)
points = st.tuples(finite, finite).map(lambda t: Point(*t))


def test_point_rejects_non_finite():
    with pytest.raises(InputError):
        Point(math.nan, 0.0)
    with pytest.raises(InputError):
        Point(0.0, math.inf)


def test_hull_drops_interior_point():
    pts = [Point(0, 0), Point(1, 0), Point(0, 1), Point(0.25, 0.25)]
    hull = convex_hull(pts)
    assert [(p.x, p.y) for p in hull.vertices] == [(0, 0), (1, 0), (0, 1)]


def test_hull_of_segment_is_degenerate():
    hull = convex_hull([Point(0, 0), Point(1, 0)])
    assert len(hull.vertices) == 2
    assert polygon_area(hull) == 0.0


def test_hull_drops_collinear_boundary_midpoint():
    pts = [Point(0, 0), Point(2, 0), Point(1, 0), Point(1, 1)]
    hull = convex_hull(pts)
    assert [(p.x, p.y) for p in hull.vertices] == [(0, 0), (2, 0), (1, 1)]


def test_hull_size_limit():
    pts = [Point(math.cos(i), math.sin(i)) for i in range(65)]
    with pytest.raises(InputError):
        convex_hull(pts)


def test_hull_canonical_start_and_orientation():
    rng = random.Random(5)
    for _ in range(300):
        pts = [Point(rng.uniform(-2, 2), rng.uniform(-2, 2)) for _ in range(8)]
        ring = [(p.x, p.y) for p in convex_hull(pts).vertices]
        assert ring[0] == min(ring)


def test_hull_oracle_equivalence_sample():
    check_hull_oracle_equivalence(2000)


def test_polygon_area_unit_square():
    sq = convex_hull([Point(0, 0), Point(1, 0), Point(1, 1), Point(0, 1)])
    assert polygon_area(sq) == 1.0


def test_polygon_area_hexagon():
    ring = [(0, 0), (1 / 3, -1 / 6), (2 / 3, -1 / 6), (1, 0), (2 / 3, 1 / 6),
            (1 / 3, 1 / 6)]
    hull = convex_hull([Point(x, y) for x, y in ring])
    assert polygon_area(hull) == pytest.approx(2.0 / 9.0, abs=1e-15)


def test_polygon_area_matches_fan_oracle():
    from .oracles import fan_area, gift_wrap_hull
    rng = random.Random(17)
    for _ in range(2000):
        pts = [(rng.uniform(-1, 1), rng.uniform(-1, 1))
               for _ in range(rng.randint(3, 9))]
        hull = convex_hull([Point(x, y) for x, y in pts])
        assert polygon_area(hull) == pytest.approx(fan_area(gift_wrap_hull(pts)),
                                                   abs=1e-12)


def test_polygon_ring_validation():
    with pytest.raises(InputError):
        ConvexPolygon((Point(0, 0), Point(1, 0), Point(2, 0)))  # collinear
    with pytest.raises(InputError):
        ConvexPolygon((Point(1, 0), Point(0, 0), Point(0.5, 1)))  # bad start


@given(st.lists(points, min_size=1, max_size=9))
@settings(max_examples=300, deadline=None)
def test_hull_idempotent(pts):
    hull = convex_hull(pts)
    again = convex_hull(list(hull.vertices))
    assert again == hull
    assert polygon_area(again) == polygon_area(hull)


def test_hull_insertion_invariance():
    rng = random.Random(23)
    for _ in range(500):
        pts = [Point(rng.uniform(-2, 2), rng.uniform(-2, 2)) for _ in range(6)]
        hull = convex_hull(pts)
        if len(hull.vertices) < 3:
            continue
        # strictly interior point: positive-weight combination of vertices
        ws = [rng.uniform(0.2, 1.0) for _ in hull.vertices]
        tot = sum(ws)
        ix = sum(w * p.x for w, p in zip(ws, hull.vertices)) / tot
        iy = sum(w * p.y for w, p in zip(ws, hull.vertices)) / tot
        bigger = convex_hull(pts + [Point(ix, iy)])
        assert bigger == hull
        assert polygon_area(bigger) == polygon_area(hull)


def test_hull_monotonicity():
    rng = random.Random(29)
    for _ in range(500):
        p = [Point(rng.uniform(-2, 2), rng.uniform(-2, 2)) for _ in range(6)]
        q = [Point(rng.uniform(-2, 2), rng.uniform(-2, 2)) for _ in range(4)]
        assert polygon_area(convex_hull(p + q)) >= polygon_area(convex_hull(p)) - 1e-12


def test_height_examples():
    assert height((1, 0), (0, 1)) == 1.0
    assert height((1, 0), (5, 0)) == 0.0
    a = math.radians(60.0)
    v = (math.sqrt(2) / 3 * math.cos(a), math.sqrt(2) / 3 * math.sin(a))
    assert height((1, 0), v) == pytest.approx(math.sqrt(2) / 3 * math.sin(a), abs=1e-15)
    assert height((1, 0), v) == pytest.approx(0.40824829, abs=1e-7)


def test_height_zero_vector_rejected():
    with pytest.raises(InputError):
        height((0, 0), (1, 1))


@given(st.tuples(finite, finite), st.tuples(finite, finite),
       st.floats(min_value=0.01, max_value=100.0))
@settings(max_examples=300, deadline=None)
def test_height_symmetries(u, v, c):
    ux, uy = u
    if math.hypot(ux, uy) < 1e-9:
        return
    h1 = height(u, v)
    assert abs(h1 - height(u, (-v[0], -v[1]))) <= 1e-12
    assert abs(h1 - height((c * ux, c * uy), v)) <= 1e-12 * max(1.0, h1)


def test_point_segment_distance_examples():
    assert point_segment_distance(Point(0.5, 0.3)) == pytest.approx(0.3, abs=0)
    assert point_segment_distance(Point(-3, 4)) == pytest.approx(5.0, abs=1e-15)
    assert point_segment_distance(Point(2, 0)) == pytest.approx(1.0, abs=0)


def test_segment_intersection_straddling_square():
    poly = convex_hull(list(square_vertices(0.5, 0.0, math.pi / 4)))
    assert segment_polygon_intersects(poly)


def test_segment_intersection_square_above():
    poly = convex_hull(list(square_vertices(0.5, 0.5, math.pi / 4)))
    assert not segment_polygon_intersects(poly)


def test_segment_intersection_boundary_touch():
    # single-vertex touch exactly on the segment counts as intersecting
    poly = convex_hull([Point(0.5, 0.0), Point(1.0, 1.0), Point(0.0, 1.0)])
    assert segment_polygon_intersects(poly)
    # touching the segment's carrier line outside [0, 1] does not
    off = convex_hull([Point(1.5, 0.0), Point(2.5, 1.0), Point(1.5, 1.0)])
    assert not segment_polygon_intersects(off)


def test_segment_intersection_requires_polygon():
    with pytest.raises(InputError):
        segment_polygon_intersects(convex_hull([Point(0, 0), Point(1, 1)]))
