"""Two interfering DSCs on a shared channel.

SINR at ground points, effective in-area coverage by polar integration
with per-radius angular limits, and grid searches for the best separation
and the best separation-plus-altitudes combination.
"""

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from typing import Optional, Tuple

import numpy as np

from .channel import mean_path_loss
from .dual_free import TargetArea
from .errors import InsufficientPowerError
from .single_dsc import max_coverage_radius
from .units import dbm_to_mw

# Linear-scan fallback step for the coverage-angle search, rad.
_PHI_FALLBACK_STEP = 1e-3


@dataclass(frozen=True)
class InterferenceScenario:
    """Frozen geometry and radio state for one two-DSC evaluation.

    DSC 2 is anchored so its no-interference disk is tangent to the area's
    +x border; DSC 1 sits a separation d further in the -x direction.  Both
    DSCs are on the area's long axis (y = 0).
    """

    area: TargetArea
    env: object          # channel.Environment
    radio: object        # channel.RadioConfig (shared fc, noise, threshold)
    d_m: float           # ground separation between the DSCs, m
    h1_m: float          # DSC 1 altitude, m
    h2_m: float          # DSC 2 altitude, m
    pt1_dbm: float       # DSC 1 transmit power, dBm
    pt2_dbm: float       # DSC 2 transmit power, dBm
    r_m1_m: float        # DSC 1 max radius without interference, m
    r_m2_m: float        # DSC 2 max radius without interference, m

    def __post_init__(self):
        if self.d_m <= 0.0:
            raise ValueError("d_m must be positive")
        if self.h1_m <= 0.0 or self.h2_m <= 0.0:
            raise ValueError("altitudes must be positive")
        if self.r_m1_m < 0.0 or self.r_m2_m < 0.0:
            raise ValueError("coverage radii must be non-negative")

    @property
    def x2_m(self):
        """DSC 2 ground x coordinate (anchor), m."""
        return self.area.a_m / 2.0 - self.r_m2_m

    @property
    def x1_m(self):
        """DSC 1 ground x coordinate, m."""
        return self.x2_m - self.d_m


@dataclass(frozen=True)
class CoverageReport:
    """Effective in-area coverage of one scenario."""

    area_covered_m2: float  # effective coverage area, m^2
    ratio: float            # area_covered / (a * b)
    d_m: float              # separation the report was evaluated at, m
    h1_m: float             # m
    h2_m: float             # m


@dataclass(frozen=True)
class SeparationSweep:
    """All reports of a separation sweep plus the first-maximum report."""

    reports: Tuple[CoverageReport, ...]
    best: CoverageReport
    best_index: int


@dataclass(frozen=True)
class JointSearch:
    """All reports of a (d, h1, h2) search plus the first-maximum report."""

    reports: Tuple[CoverageReport, ...]
    best: CoverageReport
    best_index: int


def _radius_or_zero(pt_dbm, h_m, env, radio):
    """Coverage radius at (pt, h); 0 when the link cannot close at nadir."""
    try:
        return max_coverage_radius(pt_dbm, h_m, env, radio)
    except InsufficientPowerError:
        return 0.0


def build_scenario(area, env, radio, d_m, h1_m, h2_m,
                   pt1_dbm=None, pt2_dbm=None):
    """Assemble an InterferenceScenario, computing per-DSC radii.

    Args:
        area: TargetArea.
        env: propagation Environment.
        radio: shared RadioConfig; its pt_dbm is the default per-DSC power.
        d_m: separation between the DSCs, m, > 0.
        h1_m, h2_m: altitudes, m, > 0.
        pt1_dbm, pt2_dbm: per-DSC power overrides, dBm.

    Returns:
        InterferenceScenario.  A DSC whose link budget does not close even
        at nadir gets coverage radius 0.
    """
    pt1 = radio.pt_dbm if pt1_dbm is None else pt1_dbm
    pt2 = radio.pt_dbm if pt2_dbm is None else pt2_dbm
    r1 = _radius_or_zero(pt1, h1_m, env, radio)
    r2 = _radius_or_zero(pt2, h2_m, env, radio)
    return InterferenceScenario(area=area, env=env, radio=radio, d_m=d_m,
                                h1_m=h1_m, h2_m=h2_m, pt1_dbm=pt1,
                                pt2_dbm=pt2, r_m1_m=r1, r_m2_m=r2)


def _serving_and_interferer(scenario, dsc_index):
    """(pt_s, h_s, pt_j, h_j) for the serving DSC and its interferer."""
    if dsc_index == 1:
        return (scenario.pt1_dbm, scenario.h1_m,
                scenario.pt2_dbm, scenario.h2_m)
    if dsc_index == 2:
        return (scenario.pt2_dbm, scenario.h2_m,
                scenario.pt1_dbm, scenario.h1_m)
    raise ValueError("dsc_index must be 1 or 2")


def _received_mw(pt_dbm, r, h_m, scenario):
    """Received power in mW at ground distance r from a DSC at altitude h."""
    loss = mean_path_loss(r, h_m, scenario.radio, scenario.env)
    return 10.0 ** ((pt_dbm - np.asarray(loss)) / 10.0)


def _covered(r, phi, scenario, dsc_index):
    """Boolean SINR >= threshold test, vectorized over r and phi."""
    pt_s, h_s, pt_j, h_j = _serving_and_interferer(scenario, dsc_index)
    d = scenario.d_m
    r_other = np.sqrt(r * r + d * d - 2.0 * r * d * np.cos(phi))
    # r = 0 from the interferer is impossible here since d > 0 and the
    # serving radius never reaches the interferer location in practice,
    # but guard the path-loss domain anyway.
    r_other = np.maximum(r_other, 1e-9)
    p_s = _received_mw(pt_s, r, h_s, scenario)
    p_j = _received_mw(pt_j, r_other, h_j, scenario)
    noise = float(dbm_to_mw(scenario.radio.noise_dbm))
    gamma = 10.0 ** (scenario.radio.gamma_th_db / 10.0)
    return p_s >= gamma * (p_j + noise)


def sinr_at(r_m, phi_rad, scenario, dsc_index=1):
    """SINR in dB at a ground point in the serving DSC's polar frame.

    The angle phi is measured from the ray pointing toward the other DSC,
    so phi = 0 faces the interferer and phi = pi faces away from it.

    Args:
        r_m: ground distance from the serving DSC, m (scalar or array).
        phi_rad: angle in [0, pi] (scalar or array).
        scenario: InterferenceScenario.
        dsc_index: 1 or 2, which DSC serves the point.

    Returns:
        SINR in dB.
    """
    r = np.asarray(r_m, dtype=float)
    phi = np.asarray(phi_rad, dtype=float)
    if np.any(r < 0.0):
        raise ValueError("r_m must be non-negative")
    if np.any(phi < 0.0) or np.any(phi > math.pi + 1e-12):
        raise ValueError("phi_rad must lie in [0, pi]")
    pt_s, h_s, pt_j, h_j = _serving_and_interferer(scenario, dsc_index)
    d = scenario.d_m
    r_other = np.maximum(np.sqrt(r * r + d * d - 2.0 * r * d * np.cos(phi)),
                         1e-9)
    p_s = _received_mw(pt_s, np.maximum(r, 0.0), h_s, scenario)
    p_j = _received_mw(pt_j, r_other, h_j, scenario)
    noise = float(dbm_to_mw(scenario.radio.noise_dbm))
    out = 10.0 * np.log10(p_s / (p_j + noise))
    return float(out) if out.ndim == 0 else out


def phi_max(r_m, scenario):
    """Largest covered angle keeping DSC 1 inside the area's -x border.

    Args:
        r_m: ground distance from DSC 1, m, > 0 (scalar or array).
        scenario: InterferenceScenario.

    Returns:
        Angle in [0, pi]; pi when the whole ring at radius r stays inside.
    """
    r = np.asarray(r_m, dtype=float)
    if np.any(r <= 0.0):
        raise ValueError("r_m must be positive")
    arg = (scenario.d_m + scenario.r_m2_m - scenario.area.a_m) / r
    out = np.arccos(np.clip(arg, -1.0, 1.0))
    return float(out) if out.ndim == 0 else out


def _phi_min_interference(r, dsc_index, scenario, tol):
    """Vectorized smallest covered angle per radius, interference on."""
    r = np.asarray(r, dtype=float)
    zeros = np.zeros_like(r)
    ok_zero = _covered(r, zeros, scenario, dsc_index)
    ok_pi = _covered(r, np.full_like(r, math.pi), scenario, dsc_index)
    out = np.where(ok_zero, 0.0, np.where(ok_pi, np.nan, math.pi))

    need = np.isnan(out)
    if not np.any(need):
        return out
    r_n = r[need]

    # The bisection assumes SINR is non-decreasing in phi.  Check on a
    # coarse scan and fall back to a linear scan where it fails.
    probes = np.linspace(0.0, math.pi, 9)
    sinr = sinr_at(r_n[:, None], probes[None, :], scenario, dsc_index)
    monotone = np.all(np.diff(sinr, axis=1) >= -1e-9, axis=1)

    lo = np.zeros(r_n.shape)
    hi = np.full(r_n.shape, math.pi)
    while np.any(hi - lo >= tol):
        mid = 0.5 * (lo + hi)
        good = _covered(r_n, mid, scenario, dsc_index)
        hi = np.where(good, mid, hi)
        lo = np.where(good, lo, mid)
    result = hi

    if not np.all(monotone):
        gamma_db = scenario.radio.gamma_th_db
        for i in np.flatnonzero(~monotone):
            phi = 0.0
            while phi <= math.pi:
                if sinr_at(float(r_n[i]), phi, scenario, dsc_index) >= gamma_db:
                    break
                phi += _PHI_FALLBACK_STEP
            result[i] = min(phi, math.pi)

    out[need] = result
    return out


def phi_min(r_m, dsc_index, scenario, interference=True, tol=1e-4):
    """Smallest angle at which a ring point is covered by its DSC.

    Angles are measured from the ray toward the other DSC.  Returns 0 when
    the point facing the interferer is already covered and pi when no
    angle on the ring passes the SINR test.

    Args:
        r_m: ground distance from the serving DSC, m, > 0 (scalar or array).
        dsc_index: 1 or 2.
        scenario: InterferenceScenario.
        interference: with False the interferer is silent and the whole
            ring inside the serving radius is covered (returns 0).
        tol: bisection tolerance, rad.

    Returns:
        Angle in [0, pi].
    """
    r = np.asarray(r_m, dtype=float)
    if np.any(r <= 0.0):
        raise ValueError("r_m must be positive")
    if not interference:
        out = np.zeros_like(r)
        return float(out) if out.ndim == 0 else out
    out = _phi_min_interference(r, dsc_index, scenario, tol)
    return float(out) if out.ndim == 0 else out


def _exclusion_angle(r, scenario):
    """Angle below which a DSC 1 ring point lies inside DSC 2's disk."""
    d = scenario.d_m
    arg = (r * r + d * d - scenario.r_m2_m ** 2) / (2.0 * r * d)
    return np.arccos(np.clip(arg, -1.0, 1.0))


def effective_coverage(scenario, interference=True, radial_step=2.0,
                       phi_tol=1e-4):
    """Effective in-area coverage of the two anchored DSCs.

    Integrates each DSC's covered polar slice [phi_min(R), phi_cap(R)] over
    R in (0, r_m] with a midpoint rule in R (the angular integral is exact
    once the limits are known) and doubles it for mirror symmetry about
    the DSC axis.  DSC 1's cap keeps its slice inside the area's -x border;
    DSC 2 is border-tangent by construction and is capped at pi.

    Without interference the two disks can overlap; the overlap is counted
    once by assigning it to the anchored DSC 2 and starting DSC 1's angular
    range at the rim of DSC 2's disk.

    Args:
        scenario: InterferenceScenario with positive coverage radii.
        interference: evaluate SINR limits (True) or disk union (False).
        radial_step: radial quadrature step, m.
        phi_tol: bisection tolerance for the angular limits, rad.

    Returns:
        CoverageReport.

    Raises:
        ValueError: a DSC has coverage radius <= 0 (link cannot close), or
            the quadrature parameters are invalid.
    """
    if radial_step <= 0.0:
        raise ValueError("radial_step must be positive")
    if phi_tol <= 0.0:
        raise ValueError("phi_tol must be positive")
    if scenario.r_m1_m <= 0.0 or scenario.r_m2_m <= 0.0:
        raise ValueError("configuration not coverable: a DSC has no "
                         "coverage radius (link budget does not close)")
    total = 0.0
    for idx, r_max in ((1, scenario.r_m1_m), (2, scenario.r_m2_m)):
        n = max(1, int(math.ceil(r_max / radial_step)))
        dr = r_max / n
        radii = (np.arange(n) + 0.5) * dr
        if interference:
            lo = _phi_min_interference(radii, idx, scenario, phi_tol)
        elif idx == 1:
            lo = _exclusion_angle(radii, scenario)
        else:
            lo = np.zeros_like(radii)
        cap = phi_max(radii, scenario) if idx == 1 else math.pi
        total += 2.0 * float(np.sum(np.maximum(cap - lo, 0.0) * radii)) * dr
    return CoverageReport(area_covered_m2=total,
                          ratio=total / scenario.area.area_m2,
                          d_m=scenario.d_m, h1_m=scenario.h1_m,
                          h2_m=scenario.h2_m)


def _first_maximum(reports):
    """Index of the first report attaining the maximum ratio."""
    best = 0
    for i in range(1, len(reports)):
        if reports[i].ratio > reports[best].ratio:
            best = i
    return best


def _map_ordered(fn, items, threads):
    """Apply fn preserving order, optionally on a thread pool."""
    if threads <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))


def optimal_separation(area, env, radio, h1_m, h2_m, d_values,
                       pt1_dbm=None, pt2_dbm=None, interference=True,
                       radial_step=2.0, phi_tol=1e-4, threads=1):
    """Sweep the DSC separation and report the first maximum coverage.

    Args:
        area: TargetArea.
        env: propagation Environment.
        radio: shared RadioConfig.
        h1_m, h2_m: fixed altitudes, m.
        d_values: separations to evaluate, m, non-empty.
        pt1_dbm, pt2_dbm: per-DSC power overrides, dBm.
        interference: evaluate SINR coverage or the disk union.
        radial_step, phi_tol: quadrature controls.
        threads: worker threads; results are identical for any count.

    Returns:
        SeparationSweep with one report per grid point, in grid order.
    """
    d_values = [float(d) for d in d_values]
    if not d_values:
        raise ValueError("empty separation grid")
    base = build_scenario(area, env, radio, d_values[0], h1_m, h2_m,
                          pt1_dbm, pt2_dbm)

    def evaluate(d):
        return effective_coverage(replace(base, d_m=d),
                                  interference=interference,
                                  radial_step=radial_step, phi_tol=phi_tol)

    reports = tuple(_map_ordered(evaluate, d_values, threads))
    best = _first_maximum(reports)
    return SeparationSweep(reports=reports, best=reports[best],
                           best_index=best)


def optimal_joint(area, env, radio, d_values, h1_values, h2_values,
                  pt1_dbm=None, pt2_dbm=None, interference=True,
                  radial_step=2.0, phi_tol=1e-4, threads=1):
    """Exhaustive search over separation and both altitudes.

    Grid order is d outermost, then h1, then h2; ties break to the first
    grid point.  Grid points whose link budget cannot close at nadir are
    kept in the table with zero coverage instead of aborting the search.

    Args:
        area: TargetArea.
        env: propagation Environment.
        radio: shared RadioConfig.
        d_values, h1_values, h2_values: non-empty search grids.
        pt1_dbm, pt2_dbm: per-DSC power overrides, dBm.
        interference: evaluate SINR coverage or the disk union.
        radial_step, phi_tol: quadrature controls.
        threads: worker threads; results are identical for any count.

    Returns:
        JointSearch with one report per grid point, in grid order.
    """
    d_values = [float(d) for d in d_values]
    h1_values = [float(h) for h in h1_values]
    h2_values = [float(h) for h in h2_values]
    if not d_values or not h1_values or not h2_values:
        raise ValueError("empty search grid")
    pt1 = radio.pt_dbm if pt1_dbm is None else pt1_dbm
    pt2 = radio.pt_dbm if pt2_dbm is None else pt2_dbm

    radius_cache = {}

    def radius(pt, h):
        key = (pt, h)
        if key not in radius_cache:
            radius_cache[key] = _radius_or_zero(pt, h, env, radio)
        return radius_cache[key]

    for h in h1_values:
        radius(pt1, h)
    for h in h2_values:
        radius(pt2, h)

    points = [(d, h1, h2) for d in d_values for h1 in h1_values
              for h2 in h2_values]

    def evaluate(point):
        d, h1, h2 = point
        r1 = radius(pt1, h1)
        r2 = radius(pt2, h2)
        if r1 <= 0.0 or r2 <= 0.0:
            return CoverageReport(0.0, 0.0, d, h1, h2)
        scenario = InterferenceScenario(area=area, env=env, radio=radio,
                                        d_m=d, h1_m=h1, h2_m=h2,
                                        pt1_dbm=pt1, pt2_dbm=pt2,
                                        r_m1_m=r1, r_m2_m=r2)
        return effective_coverage(scenario, interference=interference,
                                  radial_step=radial_step, phi_tol=phi_tol)

    reports = tuple(_map_ordered(evaluate, points, threads))
    best = _first_maximum(reports)
    return JointSearch(reports=reports, best=reports[best], best_index=best)
