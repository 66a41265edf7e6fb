"""Tests for two-DSC coverage with co-channel interference."""

import dataclasses
import math

import numpy as np
import pytest

from dscplan import (URBAN, InterferenceScenario, RadioConfig, TargetArea,
                     build_scenario, effective_coverage, optimal_joint,
                     optimal_separation, phi_max, phi_min, sinr_at,
                     union_area)

PT_CAL_DBM = -13.743200862085644
RADIO = RadioConfig(fc_hz=2.0e9, pt_dbm=PT_CAL_DBM, noise_dbm=-120.0,
                    gamma_th_db=10.0, h_max_m=10000.0)
AREA = TargetArea(a_m=2000.0, b_m=700.0)


def default_scenario(d_m=1100.0):
    return build_scenario(AREA, URBAN, RADIO, d_m=d_m, h1_m=300.0,
                          h2_m=300.0)


def test_build_scenario_anchors_second_dsc_on_the_border():
    scen = default_scenario()
    assert math.isclose(scen.r_m1_m, 549.9944090843201, abs_tol=0.02)
    assert scen.r_m2_m == scen.r_m1_m
    assert math.isclose(scen.x2_m + scen.r_m2_m, 1000.0, abs_tol=1e-9)
    assert math.isclose(scen.x1_m, scen.x2_m - 1100.0, abs_tol=1e-12)
    assert scen.pt1_dbm == PT_CAL_DBM
    assert scen.pt2_dbm == PT_CAL_DBM


def test_scenario_validation():
    with pytest.raises(ValueError):
        dataclasses.replace(default_scenario(), d_m=0.0)
    with pytest.raises(ValueError):
        dataclasses.replace(default_scenario(), h1_m=-5.0)


def test_sinr_improves_away_from_the_interferer():
    scen = default_scenario()
    phis = np.linspace(0.0, math.pi, 50)
    values = sinr_at(400.0, phis, scen)
    assert np.all(np.diff(values) > 0.0)


def test_sinr_at_snr_boundary_is_dragged_below_threshold():
    # At the interference-free boundary radius the SNR alone equals the
    # threshold, so any interference pushes the SINR below it.
    scen = default_scenario()
    assert sinr_at(scen.r_m1_m, math.pi, scen, 1) < RADIO.gamma_th_db
    assert sinr_at(1.0, math.pi / 2.0, scen, 1) > RADIO.gamma_th_db


def test_sinr_frames_of_the_two_dscs_are_mirror_images():
    scen = default_scenario()
    assert math.isclose(sinr_at(250.0, 1.0, scen, 1),
                        sinr_at(250.0, 1.0, scen, 2), rel_tol=1e-12)


def test_sinr_rejects_bad_polar_coordinates():
    scen = default_scenario()
    with pytest.raises(ValueError):
        sinr_at(-1.0, 0.5, scen)
    with pytest.raises(ValueError):
        sinr_at(100.0, 3.5, scen)
    with pytest.raises(ValueError):
        sinr_at(100.0, 0.5, scen, dsc_index=3)


def test_phi_max_caps_the_first_dsc_at_the_far_border():
    # With d=1100, r_m2 forced to 550 and a=2000 the cap argument at
    # R=400 is exactly -0.875.
    scen = default_scenario()
    forced = dataclasses.replace(scen, r_m2_m=550.0)
    assert math.isclose(phi_max(400.0, forced), math.acos(-0.875),
                        rel_tol=0, abs_tol=1e-12)
    assert phi_max(100.0, forced) == math.pi
    assert phi_max(350.0, forced) == math.pi


def test_phi_max_vanishes_when_the_ring_lies_outside():
    scen = default_scenario(d_m=1800.0)
    forced = dataclasses.replace(scen, r_m2_m=550.0)
    # Center of DSC 1 sits 350 m beyond the left border, so rings with
    # radius below 350 m never intersect the area.
    assert phi_max(100.0, forced) == 0.0
    assert phi_max(349.0, forced) == 0.0
    assert 0.0 < phi_max(400.0, forced) < math.pi


def test_phi_min_is_zero_without_interference():
    scen = default_scenario()
    assert phi_min(300.0, 1, scen, interference=False) == 0.0
    assert np.all(phi_min(np.array([100.0, 300.0]), 2, scen,
                          interference=False) == 0.0)


@pytest.mark.parametrize("radius", [100.0, 300.0, 500.0])
def test_phi_min_matches_dense_angular_scan(radius):
    scen = default_scenario()
    for index in (1, 2):
        fast = phi_min(radius, index, scen, tol=1e-4)
        grid = np.linspace(0.0, math.pi, 31416)
        covered = sinr_at(radius, grid, scen, index) >= RADIO.gamma_th_db
        hits = np.nonzero(covered)[0]
        slow = grid[hits[0]] if hits.size else math.pi
        assert abs(fast - slow) < 2e-3


def test_phi_min_hits_pi_when_interference_blocks_the_ring():
    scen = default_scenario(d_m=400.0)
    assert phi_min(300.0, 1, scen) == math.pi


def test_effective_coverage_reference_value():
    # Frozen from an independent quadrature run at d=1100 before this
    # module was written; a 2 m Cartesian grid oracle agrees to 3.2e-5.
    rep = effective_coverage(default_scenario())
    assert math.isclose(rep.area_covered_m2, 1333221.563824103, rel_tol=1e-9)
    assert math.isclose(rep.ratio, rep.area_covered_m2 / 1.4e6,
                        rel_tol=1e-12)
    assert rep.d_m == 1100.0


def test_effective_coverage_is_zero_when_cells_sit_too_close():
    # Below 475 m separation mutual interference blocks every point at
    # the 10 dB threshold.
    rep = effective_coverage(default_scenario(d_m=400.0))
    assert rep.area_covered_m2 == 0.0


def test_effective_coverage_interference_toggle_recovers_union():
    # Far apart in a long area both discs lie fully inside, where the
    # quadrature must reproduce the disc union exactly.
    area = TargetArea(a_m=6000.0, b_m=1400.0)
    scen = build_scenario(area, URBAN, RADIO, d_m=1500.0, h1_m=300.0,
                          h2_m=300.0)
    rep = effective_coverage(scen, interference=False)
    expected = union_area(scen.r_m1_m, scen.r_m2_m, 1500.0)
    assert math.isclose(rep.area_covered_m2, expected, rel_tol=1e-12)
    assert math.isclose(expected,
                        math.pi * (scen.r_m1_m ** 2 + scen.r_m2_m ** 2),
                        rel_tol=1e-12)


def test_effective_coverage_never_exceeds_interference_free_case():
    scen = default_scenario()
    with_interf = effective_coverage(scen).area_covered_m2
    without = effective_coverage(scen, interference=False).area_covered_m2
    assert with_interf < without


def test_effective_coverage_rejects_dead_link():
    scen = dataclasses.replace(default_scenario(), r_m1_m=0.0)
    with pytest.raises(ValueError):
        effective_coverage(scen)


def test_optimal_separation_over_default_grid():
    d_values = np.arange(200.0, 1801.0, 25.0)
    sweep = optimal_separation(AREA, URBAN, RADIO, 300.0, 300.0, d_values)
    assert len(sweep.reports) == 65
    assert [r.d_m for r in sweep.reports] == list(d_values)
    assert sweep.best.d_m == 1225.0
    assert sweep.best_index == 41
    assert math.isclose(sweep.best.area_covered_m2, 1361275.6109726494,
                        rel_tol=1e-9)
    assert math.isclose(sweep.best.ratio, 0.972339722123321, rel_tol=1e-9)
    blocked = [r for r in sweep.reports if r.d_m <= 475.0]
    assert blocked and all(r.area_covered_m2 == 0.0 for r in blocked)


def test_optimal_separation_without_interference():
    d_values = np.arange(200.0, 1801.0, 25.0)
    sweep = optimal_separation(AREA, URBAN, RADIO, 300.0, 300.0, d_values,
                               interference=False)
    assert sweep.best.d_m == 975.0
    assert math.isclose(sweep.best.area_covered_m2, 1829623.5285457303,
                        rel_tol=1e-9)
    assert math.isclose(sweep.best.ratio, 1.306873948961236, rel_tol=1e-9)


def test_optimal_separation_is_thread_invariant():
    d_values = np.arange(900.0, 1301.0, 100.0)
    serial = optimal_separation(AREA, URBAN, RADIO, 300.0, 300.0, d_values,
                                threads=1)
    parallel = optimal_separation(AREA, URBAN, RADIO, 300.0, 300.0,
                                  d_values, threads=8)
    assert serial.reports == parallel.reports
    assert serial.best == parallel.best


def test_optimal_joint_scans_the_grid_in_order():
    d_values = [1000.0, 1100.0]
    h_values = [250.0, 300.0]
    search = optimal_joint(AREA, URBAN, RADIO, d_values, h_values, h_values)
    assert len(search.reports) == 8
    keys = [(r.d_m, r.h1_m, r.h2_m) for r in search.reports]
    assert keys == [(d, h1, h2) for d in d_values for h1 in h_values
                    for h2 in h_values]
    ratios = [r.ratio for r in search.reports]
    assert search.best.ratio == max(ratios)
    assert search.best_index == ratios.index(max(ratios))


def test_optimal_joint_reports_dead_altitudes_as_zero_coverage():
    # At the calibrated power the downlink stops closing above ~691 m,
    # so such grid points surface as zero coverage instead of an error.
    search = optimal_joint(AREA, URBAN, RADIO, [1100.0], [300.0, 900.0],
                           [300.0])
    dead = [r for r in search.reports if r.h1_m == 900.0]
    assert len(dead) == 1
    assert dead[0].area_covered_m2 == 0.0
    assert search.best.h1_m == 300.0
