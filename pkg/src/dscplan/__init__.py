"""Coverage planning toolkit for drone small cells.

Models the air-to-ground channel with an elevation-dependent
line-of-sight probability, solves for the altitude and transmit power
that cover a ground disc of a given radius, places two
non-interfering drone cells over a rectangle, and searches the
separation and altitudes that maximise SINR coverage when the two
cells share a channel.
"""

from .channel import (URBAN, Environment, LinkGeometry, RadioConfig,
                      free_space_path_loss, mean_path_loss,
                      mean_path_loss_vs_elevation, p_los, p_nlos,
                      path_loss_los, path_loss_nlos)
from .dual_free import (DualPlacement, Placement, TargetArea,
                        place_at_opposite_corners, place_two_free,
                        union_area, union_area_equal)
from .dual_interf import (CoverageReport, InterferenceScenario, JointSearch,
                          SeparationSweep, build_scenario,
                          effective_coverage, optimal_joint,
                          optimal_separation, phi_max, phi_min, sinr_at)
from .errors import InsufficientPowerError, SolverError
from .geometry import AreaEstimate, grid_area, mc_area, sinr_union_area
from .scenario import Scenario, ScenarioError, parse_scenario
from .single_dsc import (AltitudeSolution, DeploymentSolution, PowerSolution,
                         UniqueMinimumReport, max_coverage_deployment,
                         max_coverage_radius, min_transmit_power,
                         optimal_altitude_for_radius, optimal_ratio,
                         verify_unique_minimum)
from .units import (SPEED_OF_LIGHT, db_to_linear, dbm_to_mw, linear_to_db,
                    mw_to_dbm)

__version__ = "0.1.0"

__all__ = [
    "AltitudeSolution",
    "AreaEstimate",
    "CoverageReport",
    "DeploymentSolution",
    "DualPlacement",
    "Environment",
    "InsufficientPowerError",
    "InterferenceScenario",
    "JointSearch",
    "LinkGeometry",
    "Placement",
    "PowerSolution",
    "RadioConfig",
    "SPEED_OF_LIGHT",
    "Scenario",
    "ScenarioError",
    "SeparationSweep",
    "SolverError",
    "TargetArea",
    "URBAN",
    "UniqueMinimumReport",
    "build_scenario",
    "db_to_linear",
    "dbm_to_mw",
    "effective_coverage",
    "free_space_path_loss",
    "grid_area",
    "linear_to_db",
    "max_coverage_deployment",
    "max_coverage_radius",
    "mc_area",
    "mean_path_loss",
    "mean_path_loss_vs_elevation",
    "min_transmit_power",
    "mw_to_dbm",
    "optimal_altitude_for_radius",
    "optimal_joint",
    "optimal_ratio",
    "optimal_separation",
    "p_los",
    "p_nlos",
    "parse_scenario",
    "path_loss_los",
    "path_loss_nlos",
    "phi_max",
    "phi_min",
    "place_at_opposite_corners",
    "place_two_free",
    "sinr_at",
    "sinr_union_area",
    "union_area",
    "union_area_equal",
    "verify_unique_minimum",
]
