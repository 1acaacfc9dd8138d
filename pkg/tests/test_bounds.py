import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wormbound import (
    InputError,
    bound_breakdown,
    certify_theorem,
    circle_point_hull_area,
    domain_D_perimeter,
    f_bound,
    g_bound,
    grid_error_bound,
    h_bound,
    safe_center_radius,
)
from wormbound.bounds import (
    METHOD_BRANCH_AND_BOUND,
    METHOD_FULL_GRID,
    STATUS_CERTIFIED,
    STATUS_FAILED,
)

from .oracles import circle_point_hull_oracle, domain_perimeter_oracle
from .properties import (
    check_certificate_soundness,
    check_mu_dominates_f,
    check_mu_dominates_heights,
    check_p_lipschitz,
)

RAD = math.radians


def test_g_examples():
    assert g_bound(RAD(45)) == pytest.approx(1 / 6, abs=1e-15)
    assert g_bound(RAD(74.838)) == pytest.approx(0.2274987, abs=2e-6)


def test_h_examples():
    assert h_bound(RAD(90)) == pytest.approx(math.sqrt(3) / 8, abs=1e-15)
    # the two quadrilateral bounds swap at 90 degrees
    assert h_bound(RAD(84)) == pytest.approx(0.25 * math.sin(RAD(114)), abs=1e-15)
    assert h_bound(RAD(96)) == pytest.approx(0.25 * math.sin(RAD(66)), abs=1e-15)


def test_f_example():
    expected = (math.sqrt(3) / 4 + 1) / 6
    assert f_bound(RAD(45), RAD(90)) == pytest.approx(expected, abs=1e-15)
    assert f_bound(RAD(45), RAD(90)) == pytest.approx(0.23883545, abs=1e-8)


def test_breakdown_p_is_exact_max():
    bb = bound_breakdown(RAD(60), RAD(88))
    assert bb.p == max(bb.f, bb.g, bb.h)
    assert 0.0 <= min(bb.f, bb.g, bb.h)
    assert max(bb.f, bb.g, bb.h) <= 0.3


def test_breakdown_range_validation():
    with pytest.raises(InputError):
        bound_breakdown(RAD(91), RAD(90))
    with pytest.raises(InputError):
        bound_breakdown(RAD(45), RAD(130))


def test_theorem_reduction_chain_cross_check():
    # the analytic chain pins the same threshold from three directions:
    # g passes 0.227498 just below 74.838 deg and h just outside
    # [84.496 deg, 95.504 deg]
    assert g_bound(RAD(74.838)) >= 0.227497
    assert g_bound(RAD(74.9)) > 0.227498
    assert h_bound(RAD(84.496)) == pytest.approx(0.227498, abs=2e-6)
    assert h_bound(RAD(95.504)) == pytest.approx(0.227498, abs=2e-6)


def test_certify_full_grid():
    cert = certify_theorem(0.2274, METHOD_FULL_GRID, 2e-4)
    assert cert.status == STATUS_CERTIFIED
    assert cert.certified_min >= 0.2274
    assert cert.method == METHOD_FULL_GRID
    assert cert.cells_examined >= 1
    check_certificate_soundness(0.2274, samples=200_000)


def test_certify_branch_and_bound():
    cert = certify_theorem(0.227498, METHOD_BRANCH_AND_BOUND)
    assert cert.status == STATUS_CERTIFIED
    assert cert.certified_min >= 0.227498
    assert cert.max_depth > 0


def test_certify_unreachable_target_fails():
    cert = certify_theorem(0.25, METHOD_FULL_GRID, 1e-3)
    assert cert.status == STATUS_FAILED
    assert cert.certified_min < 0.25
    cert = certify_theorem(0.25, METHOD_BRANCH_AND_BOUND, 1e-3)
    assert cert.status == STATUS_FAILED


def test_certify_validation():
    with pytest.raises(InputError):
        certify_theorem(0.3)
    with pytest.raises(InputError):
        certify_theorem(0.2, METHOD_FULL_GRID, -1.0)
    with pytest.raises(InputError):
        certify_theorem(0.2, "Newton")


def test_certificate_json_round_trip():
    cert = certify_theorem(0.2, METHOD_FULL_GRID, 0.01)
    d = cert.to_dict()
    assert set(d) == {"target", "certified_min", "cells_examined",
                      "max_depth", "method", "status"}


def test_grid_error_bound_paper_point():
    eb = grid_error_bound(0.001, 0.0001)
    assert eb.linear_bound == 2.44916 * 0.001 + 0.49993 * 0.0001
    assert eb.linear_bound <= 0.0025


def test_grid_error_bound_zero():
    eb = grid_error_bound(0.0, 0.0)
    assert eb.delta == 0.0
    assert eb.exact_bound == 0.0
    assert eb.linear_bound == 0.0


def test_grid_error_bound_both_centi():
    eb = grid_error_bound(0.01, 0.01)
    assert eb.linear_bound == pytest.approx(0.0294909, abs=1e-10)


def test_grid_error_bound_invariants():
    eb = grid_error_bound(0.003, 0.002)
    delta = 0.003 / math.sqrt(2) + math.sin(0.002 / 4) / math.sqrt(3)
    assert eb.delta == delta
    assert eb.exact_bound == delta * 3.46364 + math.pi * delta * delta


@given(st.floats(min_value=0, max_value=0.05), st.floats(min_value=0, max_value=0.1))
@settings(max_examples=300, deadline=None)
def test_exact_bound_dominates_linear(d1, d2):
    eb = grid_error_bound(d1, d2)
    assert eb.exact_bound >= eb.linear_bound - 1e-9


def test_linear_bound_first_order_agreement():
    # at small steps the linear constants match delta * perimeter closely
    for d1, d2 in ((1e-4, 1e-4), (0.0, 1e-4), (1e-5, 1e-5), (2e-4, 0.0)):
        eb = grid_error_bound(d1, d2)
        first_order = eb.delta * 3.46364
        if eb.linear_bound > 0:
            assert abs(first_order - eb.linear_bound) / eb.linear_bound <= 2e-4


def test_grid_error_bound_rejects_negative():
    with pytest.raises(InputError):
        grid_error_bound(-0.001, 0.0)


def test_domain_perimeter_value():
    p = domain_D_perimeter()
    assert 3.4634 <= p <= 3.4640
    expected = 2 * (2 * math.sqrt(1 - 0.46 ** 2) - 1) + 4 * math.asin(0.46)
    assert p == expected


def test_domain_perimeter_matches_polyline_oracle():
    assert domain_D_perimeter() == pytest.approx(domain_perimeter_oracle(), abs=1e-6)


def test_circle_point_hull_closed_form():
    r = 1.0 / 6.0
    d = math.sqrt(1.4)
    area = circle_point_hull_area(d, r)
    assert area == pytest.approx(0.2428, abs=1e-4)
    assert area > 0.23
    kite = math.sqrt(1.4 / 36 - 1 / 1296)
    assert kite == pytest.approx(0.19524, abs=1e-5)
    assert area >= kite


def test_circle_point_hull_point_on_circle():
    r = 0.25
    assert circle_point_hull_area(r, r) == pytest.approx(math.pi * r * r, abs=1e-15)


def test_circle_point_hull_matches_dense_polygon():
    for d, r in ((math.sqrt(1.4), 1 / 6), (0.9, 0.2), (2.0, math.sqrt(3) / 12)):
        assert circle_point_hull_area(d, r) == pytest.approx(
            circle_point_hull_oracle(d, r), abs=1e-6)


def test_circle_point_hull_validation():
    with pytest.raises(InputError):
        circle_point_hull_area(0.1, 0.2)
    with pytest.raises(InputError):
        circle_point_hull_area(1.0, 0.0)


def test_safe_center_radius_square_inscribed_circle():
    d = safe_center_radius(1 / 6, 0.23)
    assert d * d < 1.4
    assert circle_point_hull_area(d, 1 / 6) >= 0.23
    assert circle_point_hull_area(d - 1e-6, 1 / 6) < 0.23


def test_safe_center_radius_triangle_inscribed_circle():
    # the side-1/2 triangle has inradius sqrt(3)/12; the tight threshold
    # sits well above 1.7, so that distance alone cannot clear 0.23
    r = math.sqrt(3) / 12
    d = safe_center_radius(r, 0.23)
    assert d * d > 1.7
    assert circle_point_hull_area(math.sqrt(1.7), r) < 0.23


def test_safe_center_radius_limit():
    r = 0.3
    prev = None
    for eps in (1e-2, 1e-4, 1e-6):
        d = safe_center_radius(r, math.pi * r * r + eps)
        assert d > r
        if prev is not None:
            assert d < prev
        prev = d
    assert prev - r < 1e-3


def test_safe_center_radius_monotone_in_target():
    assert safe_center_radius(0.2, 0.2) <= safe_center_radius(0.2, 0.25)


def test_safe_center_radius_validation():
    with pytest.raises(InputError):
        safe_center_radius(0.2, 0.1)  # below the disk area
    with pytest.raises(InputError):
        safe_center_radius(-1.0, 1.0)


def test_height_bound_soundness_sample():
    check_mu_dominates_heights(2000)


def test_f_bound_soundness_sample():
    check_mu_dominates_f(1000)


def test_p_lipschitz_sample():
    check_p_lipschitz(20000)
