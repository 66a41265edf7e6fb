"""Single-DSC solvers.

Optimal altitude-to-radius ratio, feasible optimal altitude under a
ceiling, minimum transmit power for a target disk, and maximum coverage
radius at a given power.
"""

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .channel import mean_path_loss, mean_path_loss_vs_elevation
from .errors import InsufficientPowerError, SolverError

# Bisection bracket for the altitude/radius ratio, expressed as elevation
# angles: the propagation model is not meant for near-grazing geometry.
_MU_LO = math.tan(math.radians(1.0))
_MU_HI = math.tan(math.radians(89.0))

# Upper bracket for coverage-radius searches, m.
_R_SEARCH_MAX = 1.0e6


@dataclass(frozen=True)
class AltitudeSolution:
    """Optimal altitude for a target coverage radius."""

    mu_opt: float        # optimal altitude/radius ratio, dimensionless
    h_opt_m: float       # unconstrained optimal altitude, m
    h_feasible_m: float  # min(h_max, h_opt), m
    clamped: bool        # True when the altitude ceiling binds


@dataclass(frozen=True)
class PowerSolution:
    """Minimum transmit power covering a target disk."""

    pt_min_dbm: float  # minimum transmit power, dBm
    h_used_m: float    # altitude the power was evaluated at, m
    r_covered_m: float # covered disk radius, m


@dataclass(frozen=True)
class DeploymentSolution:
    """Best altitude and the radius it reaches at a fixed transmit power."""

    h_m: float      # deployment altitude, m
    r_max_m: float  # coverage radius reached from h_m, m
    clamped: bool   # True when the altitude ceiling binds


@dataclass(frozen=True)
class UniqueMinimumReport:
    """Result of scanning path loss versus elevation for a unique minimum."""

    is_unique: bool                   # at most one minus-to-plus sign change
    monotone: bool                    # no interior extremum at all
    theta_star_rad: Optional[float]   # located minimizer, None when monotone
    sign_changes: int                 # sign changes of the finite differences

    def __bool__(self):
        return self.is_unique


def _ratio_equation(mu, env):
    """Stationarity residual of the mean path loss along h = mu * r."""
    theta_deg = math.degrees(math.atan(mu))
    z = env.alpha * math.exp(-env.beta * (theta_deg - env.alpha))
    gain = 180.0 * env.xi_gap_db * env.beta * z / (math.pi * (z + 1.0) ** 2)
    return gain - 20.0 * mu / math.log(10.0)


def optimal_ratio(env, tol=1e-9):
    """Altitude-to-radius ratio minimizing the mean path loss at the rim.

    Args:
        env: propagation Environment.
        tol: absolute tolerance on the ratio.

    Returns:
        The ratio mu = h / r as a float.

    Raises:
        SolverError: the stationarity equation has no root in the bracket
            (for example when the LOS/NLOS excess-loss gap is zero).
    """
    lo, hi = _MU_LO, _MU_HI
    f_lo = _ratio_equation(lo, env)
    f_hi = _ratio_equation(hi, env)
    if f_lo == 0.0:
        return lo
    if f_hi == 0.0:
        return hi
    if (f_lo > 0.0) == (f_hi > 0.0):
        raise SolverError("no interior optimum: stationarity equation has no "
                          "sign change for this environment")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if (_ratio_equation(mid, env) > 0.0) == (f_lo > 0.0):
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def optimal_altitude_for_radius(r_c_m, env, h_max_m):
    """Optimal DSC altitude for covering a disk of radius r_c.

    Args:
        r_c_m: target coverage radius, m, > 0.
        env: propagation Environment.
        h_max_m: altitude ceiling, m, > 0.

    Returns:
        AltitudeSolution with the unconstrained and feasible altitudes.
    """
    if r_c_m <= 0.0:
        raise ValueError("r_c_m must be positive")
    if h_max_m <= 0.0:
        raise ValueError("h_max_m must be positive")
    mu = optimal_ratio(env)
    h_opt = mu * r_c_m
    clamped = h_opt > h_max_m
    return AltitudeSolution(mu_opt=mu, h_opt_m=h_opt,
                            h_feasible_m=min(h_opt, h_max_m), clamped=clamped)


def min_transmit_power(r_c_m, env, radio):
    """Minimum transmit power covering a disk of radius r_c.

    Evaluates the dB link budget at the feasible optimal altitude:
    pt_min(dBm) = mean_path_loss(dB) + gamma_th(dB) + noise(dBm).

    Args:
        r_c_m: target coverage radius, m, > 0.
        env: propagation Environment.
        radio: RadioConfig with noise, threshold, and altitude ceiling.

    Returns:
        PowerSolution with pt_min and the altitude used.
    """
    sol = optimal_altitude_for_radius(r_c_m, env, radio.h_max_m)
    loss = mean_path_loss(r_c_m, sol.h_feasible_m, radio, env)
    pt_min = loss + radio.gamma_th_db + radio.noise_dbm
    return PowerSolution(pt_min_dbm=pt_min, h_used_m=sol.h_feasible_m,
                         r_covered_m=r_c_m)


def max_coverage_radius(pt_dbm, h_m, env, radio, tol=0.01):
    """Largest ground radius where the SNR threshold is still met.

    Bisects on the ground distance, relying on the mean path loss being
    increasing in r at fixed altitude.

    Args:
        pt_dbm: transmit power, dBm.
        h_m: DSC altitude, m, > 0.
        env: propagation Environment.
        radio: RadioConfig with noise and threshold.
        tol: absolute tolerance on the radius, m.

    Returns:
        The coverage radius in m.

    Raises:
        InsufficientPowerError: the link fails even at r = 0.
        ValueError: the link still closes at the search ceiling, so the
            configuration is outside the model's range.
    """
    if h_m <= 0.0:
        raise ValueError("h_m must be positive")

    def margin(r):
        return pt_dbm - mean_path_loss(r, h_m, radio, env) \
            - radio.noise_dbm - radio.gamma_th_db

    if margin(0.0) < 0.0:
        raise InsufficientPowerError(
            "insufficient power: link does not close even at nadir")
    lo, hi = 0.0, _R_SEARCH_MAX
    if margin(hi) >= 0.0:
        raise ValueError("no upper bracket: coverage radius exceeds "
                         f"{_R_SEARCH_MAX:.0e} m")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if margin(mid) >= 0.0:
            lo = mid
        else:
            hi = mid
    return lo


def max_coverage_deployment(env, radio, tol=0.01):
    """Best altitude and reach for a fixed transmit power.

    Searches along the optimal-ratio ray h = mu_opt * r, where the maximum
    of the unimodal map h -> max_coverage_radius(h) lies, then applies the
    altitude ceiling.

    Args:
        env: propagation Environment.
        radio: RadioConfig whose pt_dbm is the fixed power.

    Returns:
        DeploymentSolution with the altitude, its radius, and a clamp flag.
    """
    mu = optimal_ratio(env)

    def margin(r):
        return radio.pt_dbm - mean_path_loss(r, mu * r, radio, env) \
            - radio.noise_dbm - radio.gamma_th_db

    lo = 1e-6
    if margin(lo) < 0.0:
        raise InsufficientPowerError(
            "insufficient power: link does not close at any radius")
    hi = _R_SEARCH_MAX
    if margin(hi) >= 0.0:
        raise ValueError("no upper bracket: coverage radius exceeds "
                         f"{_R_SEARCH_MAX:.0e} m")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if margin(mid) >= 0.0:
            lo = mid
        else:
            hi = mid
    h_opt = mu * lo
    if h_opt > radio.h_max_m:
        r_clamped = max_coverage_radius(radio.pt_dbm, radio.h_max_m, env,
                                        radio, tol=tol)
        return DeploymentSolution(h_m=radio.h_max_m, r_max_m=r_clamped,
                                  clamped=True)
    return DeploymentSolution(h_m=h_opt, r_max_m=lo, clamped=False)


def verify_unique_minimum(env, r_o_m, radio, theta_step_deg=0.05):
    """Check that path loss versus elevation has at most one minimum.

    Scans theta over (5 deg, 89 deg) and inspects the sign pattern of the
    finite differences: a unique interior minimum shows exactly one change,
    from negative to positive.  A monotone profile (no interior extremum)
    is reported as monotone, not as a failure.

    Args:
        env: propagation Environment.
        r_o_m: fixed ground radius, m, > 0.
        radio: RadioConfig supplying the carrier frequency.
        theta_step_deg: scan step, degrees, <= 0.05 recommended.

    Returns:
        UniqueMinimumReport; truthy when the uniqueness property holds.
    """
    if r_o_m <= 0.0:
        raise ValueError("r_o_m must be positive")
    if theta_step_deg <= 0.0:
        raise ValueError("theta_step_deg must be positive")
    n = int(math.floor((89.0 - 5.0) / theta_step_deg)) - 1
    theta_deg = 5.0 + theta_step_deg * np.arange(1, n + 1)
    theta = np.radians(theta_deg)
    losses = mean_path_loss_vs_elevation(theta, r_o_m, radio, env)
    signs = np.sign(np.diff(losses))
    signs = signs[signs != 0.0]
    if signs.size == 0:
        return UniqueMinimumReport(True, True, None, 0)
    changes = int(np.count_nonzero(signs[:-1] != signs[1:]))
    monotone = changes == 0
    is_unique = bool(monotone or (changes == 1 and signs[0] < 0.0))
    theta_star = None
    if not monotone:
        theta_star = float(theta[int(np.argmin(losses))])
    return UniqueMinimumReport(is_unique, monotone, theta_star, changes)
