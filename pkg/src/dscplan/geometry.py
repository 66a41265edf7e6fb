"""Independent area oracles.

Rectangular-grid and Monte-Carlo estimators of the area covered by an
arbitrary point predicate, plus a grid estimator of the SINR coverage
union for two-DSC scenarios.  These are used to cross-check the closed
forms and the polar integration.
"""

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .units import dbm_to_mw
from .channel import mean_path_loss

# Fixed Monte-Carlo chunking: one substream per chunk keeps estimates
# bit-reproducible regardless of how the chunks are scheduled.
MC_CHUNK = 1_000_000
MC_GENERATOR = "numpy-pcg64/seedseq-spawn/chunk=1000000"

# Cap on cells evaluated per block to bound peak memory.
_BLOCK_CELLS = 4_000_000


@dataclass(frozen=True)
class AreaEstimate:
    """An area estimate together with how it was produced."""

    value_m2: float           # estimated area, m^2
    mode: str                 # "grid" or "monte-carlo"
    cell_m: Optional[float] = None      # grid resolution, m
    samples: Optional[int] = None       # Monte-Carlo sample count
    seed: Optional[int] = None          # Monte-Carlo master seed
    generator: Optional[str] = None     # pseudorandom source identifier


def grid_area(pred, bounds, cell_m):
    """Estimate the area where pred holds by counting cell centers.

    Args:
        pred: vectorized predicate pred(x, y) -> bool array over ground
            coordinates in m.
        bounds: (xmin, xmax, ymin, ymax) rectangle in m.  Extents should
            be multiples of cell_m for an exact tiling; a trailing
            partial cell is dropped.
        cell_m: cell edge, m, > 0.

    Returns:
        AreaEstimate in grid mode (count of hit cells times cell area).
    """
    xmin, xmax, ymin, ymax = (float(v) for v in bounds)
    if cell_m <= 0.0:
        raise ValueError("cell_m must be positive")
    nx = int(math.floor((xmax - xmin) / cell_m + 1e-9))
    ny = int(math.floor((ymax - ymin) / cell_m + 1e-9))
    if nx < 1 or ny < 1:
        raise ValueError("cell_m is larger than the bounds extent")
    xs = xmin + (np.arange(nx) + 0.5) * cell_m
    hits = 0
    rows_per_block = max(1, _BLOCK_CELLS // nx)
    for start in range(0, ny, rows_per_block):
        ys = ymin + (np.arange(start, min(start + rows_per_block, ny))
                     + 0.5) * cell_m
        x_grid, y_grid = np.meshgrid(xs, ys, indexing="ij")
        hits += int(np.count_nonzero(pred(x_grid, y_grid)))
    return AreaEstimate(value_m2=hits * cell_m * cell_m, mode="grid",
                        cell_m=cell_m)


def mc_area(pred, bounds, samples, seed):
    """Estimate the area where pred holds by uniform Monte-Carlo sampling.

    Sampling is split into fixed-size chunks, each drawn from its own
    substream spawned from the master seed, so the estimate is
    bit-reproducible for a given seed regardless of scheduling.

    Args:
        pred: vectorized predicate pred(x, y) -> bool array.
        bounds: (xmin, xmax, ymin, ymax) rectangle in m.
        samples: number of samples, > 0.
        seed: master seed for the pseudorandom source.

    Returns:
        AreaEstimate in monte-carlo mode.
    """
    xmin, xmax, ymin, ymax = (float(v) for v in bounds)
    if samples <= 0:
        raise ValueError("samples must be positive")
    bounds_area = (xmax - xmin) * (ymax - ymin)
    n_chunks = (samples + MC_CHUNK - 1) // MC_CHUNK
    streams = np.random.SeedSequence(seed).spawn(n_chunks)
    hits = 0
    remaining = samples
    for stream in streams:
        n = min(MC_CHUNK, remaining)
        remaining -= n
        rng = np.random.default_rng(stream)
        xs = rng.uniform(xmin, xmax, n)
        ys = rng.uniform(ymin, ymax, n)
        hits += int(np.count_nonzero(pred(xs, ys)))
    return AreaEstimate(value_m2=bounds_area * hits / samples,
                        mode="monte-carlo", samples=samples, seed=seed,
                        generator=MC_GENERATOR)


def sinr_union_area(scenario, cell_m=2.0, interference=True,
                    clip_width=True):
    """Grid estimate of the union coverage of a two-DSC scenario.

    Counts each covered point once (no per-DSC double counting).  The
    count is always clipped to the area's length; with clip_width it is
    also clipped to the width, otherwise the full disks contribute.

    Args:
        scenario: InterferenceScenario.
        cell_m: grid resolution, m.
        interference: use the SINR test (True) or the plain per-DSC
            coverage disks (False).
        clip_width: restrict to |y| <= b/2.

    Returns:
        AreaEstimate in grid mode.
    """
    area = scenario.area
    radio = scenario.radio
    env = scenario.env
    x1, x2 = scenario.x1_m, scenario.x2_m
    noise = float(dbm_to_mw(radio.noise_dbm))
    gamma = 10.0 ** (radio.gamma_th_db / 10.0)

    if clip_width:
        half_y = area.b_m / 2.0
    else:
        reach = max(scenario.r_m1_m, scenario.r_m2_m, cell_m)
        half_y = cell_m * math.ceil(reach / cell_m)
    bounds = (-area.a_m / 2.0, area.a_m / 2.0, -half_y, half_y)

    def covered(x, y):
        r1 = np.hypot(x - x1, y)
        r2 = np.hypot(x - x2, y)
        if not interference:
            return (r1 <= scenario.r_m1_m) | (r2 <= scenario.r_m2_m)
        p1 = 10.0 ** ((scenario.pt1_dbm
                       - mean_path_loss(r1, scenario.h1_m, radio, env)) / 10.0)
        p2 = 10.0 ** ((scenario.pt2_dbm
                       - mean_path_loss(r2, scenario.h2_m, radio, env)) / 10.0)
        return (p1 >= gamma * (p2 + noise)) | (p2 >= gamma * (p1 + noise))

    est = grid_area(covered, bounds, cell_m)
    return AreaEstimate(value_m2=est.value_m2, mode="grid", cell_m=cell_m)
