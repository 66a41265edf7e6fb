"""Air-to-ground propagation model.

Free-space path loss plus a fixed excess term for line-of-sight and
non-line-of-sight links, an elevation-dependent line-of-sight probability,
and the probability-weighted mean path loss used by all solvers.
"""

import math
from dataclasses import dataclass

import numpy as np

from .units import SPEED_OF_LIGHT


@dataclass(frozen=True)
class Environment:
    """Propagation environment for the line-of-sight probability sigmoid."""

    alpha: float        # dimensionless sigmoid parameter
    beta: float         # sigmoid slope, 1/degree
    xi_los_db: float    # excess loss over free space on LOS links, dB
    xi_nlos_db: float   # excess loss over free space on NLOS links, dB

    def __post_init__(self):
        if self.alpha <= 0.0 or self.beta <= 0.0:
            raise ValueError("alpha and beta must be positive")
        # Weak inequality: a zero excess-loss gap is a legal degenerate
        # environment (pure free-space behaviour, no interior optimum).
        if not 0.0 <= self.xi_los_db <= self.xi_nlos_db:
            raise ValueError("need 0 <= xi_los_db <= xi_nlos_db")

    @property
    def xi_gap_db(self):
        """Excess-loss gap between NLOS and LOS links, dB."""
        return self.xi_nlos_db - self.xi_los_db


#: Urban macro environment used by the default scenario file.
URBAN = Environment(alpha=9.6, beta=0.28, xi_los_db=1.0, xi_nlos_db=20.0)


@dataclass(frozen=True)
class RadioConfig:
    """Link-budget parameters shared by every DSC in a deployment."""

    fc_hz: float        # carrier frequency, Hz
    pt_dbm: float       # transmit power, dBm
    noise_dbm: float    # noise power at the receiver, dBm
    gamma_th_db: float  # SNR / SINR coverage threshold, dB
    h_max_m: float      # maximum allowed DSC altitude, m

    def __post_init__(self):
        if self.fc_hz <= 0.0:
            raise ValueError("fc_hz must be positive")
        if self.h_max_m <= 0.0:
            raise ValueError("h_max_m must be positive")


@dataclass(frozen=True)
class LinkGeometry:
    """Ground range and altitude of one air-to-ground link."""

    r_m: float  # horizontal ground distance, m
    h_m: float  # DSC altitude, m

    def __post_init__(self):
        if self.r_m < 0.0:
            raise ValueError("r_m must be non-negative")
        if self.h_m <= 0.0:
            raise ValueError("h_m must be positive")

    @property
    def d_m(self):
        """Slant distance between DSC and ground point, m."""
        return math.hypot(self.r_m, self.h_m)

    @property
    def theta_rad(self):
        """Elevation angle seen from the ground point, rad; pi/2 at nadir."""
        return math.atan2(self.h_m, self.r_m)


def _ret(out):
    """Return a plain float for 0-d results, the array otherwise."""
    out = np.asarray(out)
    return float(out) if out.ndim == 0 else out


def free_space_path_loss(d_m, fc_hz):
    """Free-space path loss 20*log10(4*pi*fc*d/c) in dB."""
    d = np.asarray(d_m, dtype=float)
    if np.any(d <= 0.0):
        raise ValueError("distance must be positive")
    return _ret(20.0 * np.log10(4.0 * math.pi * fc_hz * d / SPEED_OF_LIGHT))


def path_loss_los(d_m, radio, env):
    """Mean path loss of a line-of-sight link.

    Args:
        d_m: slant distance in m (scalar or array), > 0.
        radio: RadioConfig supplying the carrier frequency.
        env: Environment supplying the LOS excess loss.

    Returns:
        Path loss in dB.
    """
    return _ret(free_space_path_loss(d_m, radio.fc_hz) + env.xi_los_db)


def path_loss_nlos(d_m, radio, env):
    """Mean path loss of a non-line-of-sight link (see path_loss_los)."""
    return _ret(free_space_path_loss(d_m, radio.fc_hz) + env.xi_nlos_db)


def p_los(theta_rad, env):
    """Probability of a line-of-sight connection at elevation angle theta.

    Args:
        theta_rad: elevation angle in radians (scalar or array), in [0, pi/2].
        env: Environment with sigmoid parameters alpha and beta.

    Returns:
        Probability in (0, 1).
    """
    theta = np.asarray(theta_rad, dtype=float)
    if np.any(theta < 0.0) or np.any(theta > math.pi / 2.0 + 1e-12):
        raise ValueError("theta must lie in [0, pi/2]")
    theta_deg = np.degrees(theta)
    return _ret(1.0 / (1.0 + env.alpha * np.exp(-env.beta * (theta_deg - env.alpha))))


def p_nlos(theta_rad, env):
    """Probability of a non-line-of-sight connection, 1 - p_los."""
    return _ret(1.0 - p_los(theta_rad, env))


def mean_path_loss(r_m, h_m, radio, env):
    """Probability-weighted mean path loss of the air-to-ground link.

    Weights the LOS and NLOS losses (both in dB) by the LOS/NLOS
    probabilities at the link's elevation angle.  r = 0 is legal and uses
    theta = pi/2 exactly (ground point at nadir).

    Args:
        r_m: horizontal ground distance in m (scalar or array), >= 0.
        h_m: DSC altitude in m (scalar or array), > 0.
        radio: RadioConfig supplying the carrier frequency.
        env: Environment with sigmoid and excess-loss parameters.

    Returns:
        Mean path loss in dB.
    """
    r = np.asarray(r_m, dtype=float)
    h = np.asarray(h_m, dtype=float)
    if np.any(r < 0.0):
        raise ValueError("r_m must be non-negative")
    if np.any(h <= 0.0):
        raise ValueError("h_m must be positive")
    d = np.hypot(r, h)
    theta = np.arctan2(h, r)
    prob = p_los(theta, env)
    fspl = 20.0 * np.log10(4.0 * math.pi * radio.fc_hz * d / SPEED_OF_LIGHT)
    return _ret(fspl + prob * env.xi_los_db + (1.0 - prob) * env.xi_nlos_db)


def mean_path_loss_vs_elevation(theta_rad, r_o_m, radio, env):
    """Mean path loss as a function of elevation angle at fixed ground radius.

    Reparameterizes mean_path_loss with the altitude h = r_o * tan(theta),
    so mean_path_loss_vs_elevation(atan(h / r), r) == mean_path_loss(r, h).

    Args:
        theta_rad: elevation angle in radians (scalar or array), in (0, pi/2).
        r_o_m: fixed ground radius in m, > 0.
        radio: RadioConfig supplying the carrier frequency.
        env: Environment with sigmoid and excess-loss parameters.

    Returns:
        Mean path loss in dB.
    """
    theta = np.asarray(theta_rad, dtype=float)
    if np.any(theta <= 0.0) or np.any(theta >= math.pi / 2.0):
        raise ValueError("theta must lie strictly inside (0, pi/2)")
    if r_o_m <= 0.0:
        raise ValueError("r_o_m must be positive")
    return _ret(mean_path_loss(r_o_m, r_o_m * np.tan(theta), radio, env))
