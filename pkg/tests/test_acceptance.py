"""Acceptance gate: every requirement asserted at its stated tolerance.

Each criterion prints one PASS/FAIL line on the real stderr, visible in
any pytest capture mode.  The measured value is printed before asserting
so a failing criterion still reports what was computed.
"""

import math
import sys
import time

import pytest

from wormbound import (
    Config,
    DomainBox,
    SearchStage,
    certify_theorem,
    conjecture_search,
    domain_D_perimeter,
    grid_error_bound,
    grid_search,
    mu,
    surface_min,
)
from wormbound.bounds import METHOD_BRANCH_AND_BOUND, METHOD_FULL_GRID
from wormbound.output import render_heatmap_svg, write_surface_csv

from .properties import (
    check_certificate_soundness,
    check_hull_oracle_equivalence,
    check_mu_dominates_f,
    check_mu_dominates_heights,
    check_mu_matches_oracle,
    check_p_lipschitz,
    check_perturbation_bound,
    check_symmetry_invariance,
)

RAD = math.radians

# Reference values this build reproduces (see README):
COARSE_TUPLE = Config(0.6625, 0.1895, 1.30829, 0.7415, 0.1305, 1.63299)
COARSE_AREA = 0.227628
FINAL_TUPLE = Config(0.6605, 0.1878, 1.3077, 0.741, 0.1274, 1.6373)
FINAL_AREA_ROUNDED = 0.2275897
PIVOT_AREA = 0.22758966937711944
LOWER_BOUND = 0.227498


_CAPFD = None


@pytest.fixture(autouse=True)
def _live_reporting(capfd):
    """Let _report bypass output capture so every criterion's line shows."""
    global _CAPFD
    _CAPFD = capfd
    yield
    _CAPFD = None


def _report(n: int, ok: bool, detail: str) -> None:
    line = f"criterion {n}: {'PASS' if ok else 'FAIL'} - {detail}"
    if _CAPFD is not None:
        with _CAPFD.disabled():
            print(line, file=sys.stderr, flush=True)
    else:
        print(line, file=sys.stderr, flush=True)


def test_criterion_1_coarse_optimum_area():
    """The published coarse tuple evaluates to its published area.

    Note: under the documented vertex conventions (independently checked
    against a gift-wrapping oracle and scipy's Qhull) this tuple yields
    0.22864346..., 1.0e-3 away from the published 0.227628, while the
    published *final* tuple does reproduce its area (criterion 3).  The
    coarse tuple/area pair is internally inconsistent at the source; the
    criterion is asserted as stated and fails honestly.
    """
    area = mu(COARSE_TUPLE)
    ok = abs(area - COARSE_AREA) <= 5e-6
    _report(1, ok, f"mu(coarse tuple) = {area!r}, published {COARSE_AREA} +/- 5e-6")
    assert ok, (
        f"mu{COARSE_TUPLE.as_tuple()} = {area!r} differs from the published "
        f"area {COARSE_AREA} by {abs(area - COARSE_AREA):.2e} (> 5e-6); the "
        "published pair cannot both be right under the stated vertex "
        "conventions, which criterion 3 and the hull oracles validate")


def test_criterion_2_pivot_search():
    t0 = time.time()
    result = conjecture_search(1e-3, 1e-7)
    elapsed = time.time() - t0
    ok = abs(result.area - PIVOT_AREA) <= 1e-6 and result.area >= LOWER_BOUND
    _report(2, ok, f"pivot search area = {result.area!r} vs {PIVOT_AREA} "
                   f"+/- 1e-6, in {elapsed:.1f}s ({result.evaluations} evals)")
    assert abs(result.area - PIVOT_AREA) <= 1e-6
    assert result.area >= LOWER_BOUND
    assert result.area == mu(result.best)
    assert elapsed <= 600.0


def test_criterion_3_final_parameters_area():
    area = mu(FINAL_TUPLE)
    ok = abs(area - FINAL_AREA_ROUNDED) <= 1e-4
    _report(3, ok, f"mu(final tuple) = {area!r} vs {FINAL_AREA_ROUNDED} +/- 1e-4")
    assert ok


def test_criterion_4_certification():
    t0 = time.time()
    bnb = certify_theorem(LOWER_BOUND, METHOD_BRANCH_AND_BOUND)
    bnb_elapsed = time.time() - t0
    t0 = time.time()
    grid = certify_theorem(0.2274, METHOD_FULL_GRID, 2e-4)
    grid_elapsed = time.time() - t0
    ok = (bnb.certified and bnb.certified_min >= LOWER_BOUND
          and grid.certified and bnb_elapsed <= 300.0 and grid_elapsed <= 30.0)
    _report(4, ok, f"bnb {bnb.status} min={bnb.certified_min!r} "
                   f"({bnb.cells_examined} cells, {bnb_elapsed:.2f}s); "
                   f"grid {grid.status} min={grid.certified_min!r} "
                   f"({grid_elapsed:.2f}s)")
    assert bnb.certified and bnb.certified_min >= LOWER_BOUND
    assert grid.certified
    assert bnb_elapsed <= 300.0
    assert grid_elapsed <= 30.0
    # certified targets survive a large random scan
    check_certificate_soundness(LOWER_BOUND)


def test_criterion_5_grid_error_bound():
    eb = grid_error_bound(0.001, 0.0001)
    expected = 2.44916 * 0.001 + 0.49993 * 0.0001
    ok = eb.linear_bound <= 0.0025 and eb.linear_bound == expected
    _report(5, ok, f"linear_bound = {eb.linear_bound!r} (<= 0.0025, exact by construction)")
    assert eb.linear_bound == expected
    assert eb.linear_bound <= 0.0025


def test_criterion_6_domain_perimeter():
    p = domain_D_perimeter()
    ok = abs(p - 3.46364) <= 3e-4
    _report(6, ok, f"perimeter = {p!r} vs 3.46364 +/- 3e-4")
    assert ok


def test_criterion_7_property_suite():
    t0 = time.time()
    check_hull_oracle_equivalence(10_000)
    check_mu_matches_oracle(10_000)
    check_symmetry_invariance(10_000)
    check_mu_dominates_heights(10_000)
    check_mu_dominates_f(10_000)
    check_p_lipschitz(100_000)
    check_perturbation_bound(10_000)
    _report(7, True, f"hull oracle, symmetry, g/h/f domination, Lipschitz, "
                     f"perturbation checks all clean in {time.time() - t0:.1f}s")


def test_criterion_8_surface_reproduction(tmp_path):
    t0 = time.time()
    box = DomainBox(x1=(0.6, 0.72), y1=(0.14, 0.24), alpha=(RAD(45), RAD(78)),
                    x2=(0.6, 0.9), y2=(0.0, 0.25), beta=(RAD(83), RAD(97)))
    surface = surface_min(box, (61, 51), 0.005, 0.005)
    elapsed = time.time() - t0
    area, best = surface.global_min()
    min_cell = surface.cell_index(best.x2, best.y2)
    target_cell = surface.cell_index(0.7415, 0.1305)
    csv_path = tmp_path / "surface.csv"
    rows = write_surface_csv(surface, csv_path)
    svg_path = tmp_path / "surface.svg"
    render_heatmap_svg(csv_path, svg_path)
    svg_ok = svg_path.read_text().count('class="cell"') == rows
    near = (abs(min_cell[0] - target_cell[0]) <= 1
            and abs(min_cell[1] - target_cell[1]) <= 1)
    ok = near and svg_ok and elapsed <= 900.0
    _report(8, ok, f"min {area!r} in cell {min_cell} vs target cell "
                   f"{target_cell}, {rows} csv rows, svg ok={svg_ok}, "
                   f"{elapsed:.0f}s")
    assert near
    assert rows > 0 and svg_ok
    assert elapsed <= 900.0
    assert all(cell_area >= LOWER_BOUND
               for _, _, cell_area, _ in surface.cells())


def test_criterion_9_pruned_windowed_substitute():
    """The full first-pass sweep of the whole domain is out of budget by
    design; its replacement is the windowed runs above plus an exact
    pruning-equivalence check on small boxes."""
    box = DomainBox(x1=(0.55, 0.75), y1=(0.1, 0.24), alpha=(RAD(45), RAD(78)),
                    x2=(0.65, 0.85), y2=(0.05, 0.2), beta=(RAD(83), RAD(97)))
    stage = SearchStage(box=box, d1=0.05, d2=0.12)
    pruned = grid_search(stage)
    plain = grid_search(stage, prune=False)
    ok = pruned.area == plain.area and pruned.best == plain.best
    _report(9, ok, f"pruning exactness on a {plain.evaluations}-pair stage "
                   f"({pruned.evaluations} evaluated with pruning)")
    assert ok
