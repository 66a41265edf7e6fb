"""Interference-free placement of two DSCs over a rectangular target area.

Places each DSC at its best altitude for the configured power, tangent to
the borders in opposite corners, and evaluates the union of the two
coverage disks in closed form.
"""

import math
from dataclasses import dataclass

from .single_dsc import max_coverage_deployment


@dataclass(frozen=True)
class TargetArea:
    """Axis-aligned rectangular target area centered at the origin."""

    a_m: float  # length (x extent), m
    b_m: float  # width (y extent), m

    def __post_init__(self):
        if self.a_m <= 0.0 or self.b_m <= 0.0:
            raise ValueError("a_m and b_m must be positive")
        if self.a_m < self.b_m:
            raise ValueError("length a_m must be >= width b_m")

    @property
    def area_m2(self):
        return self.a_m * self.b_m


@dataclass(frozen=True)
class Placement:
    """Ground projection and altitude of one DSC."""

    x_m: float  # m, relative to the area center
    y_m: float  # m, relative to the area center
    h_m: float  # altitude, m

    def __post_init__(self):
        if self.h_m <= 0.0:
            raise ValueError("h_m must be positive")


@dataclass(frozen=True)
class DualPlacement:
    """Two placements with their coverage radii and separation."""

    p1: Placement
    p2: Placement
    r1_max_m: float  # coverage radius of DSC 1, m
    r2_max_m: float  # coverage radius of DSC 2, m
    d_m: float       # ground-projection separation, m


def place_at_opposite_corners(area, r1_m, r2_m, h1_m, h2_m):
    """Place two coverage disks tangent to the borders in opposite corners.

    DSC 1 sits in the lower-left corner of the area, DSC 2 in the upper
    right, each internally tangent to both nearby borders.

    Args:
        area: TargetArea.
        r1_m, r2_m: coverage radii, m, > 0.
        h1_m, h2_m: altitudes, m, > 0.

    Returns:
        DualPlacement with both placements and their separation.

    Raises:
        ValueError: a disk does not fit inside the area (2r > min(a, b)).
    """
    for r in (r1_m, r2_m):
        if r <= 0.0:
            raise ValueError("coverage radii must be positive")
        if 2.0 * r > min(area.a_m, area.b_m):
            raise ValueError(
                "coverage exceeds target area: disk diameter "
                f"{2.0 * r:.1f} m > min(a, b) = {min(area.a_m, area.b_m):.1f} m")
    p1 = Placement(-area.a_m / 2.0 + r1_m, -area.b_m / 2.0 + r1_m, h1_m)
    p2 = Placement(area.a_m / 2.0 - r2_m, area.b_m / 2.0 - r2_m, h2_m)
    d = math.hypot(p2.x_m - p1.x_m, p2.y_m - p1.y_m)
    return DualPlacement(p1=p1, p2=p2, r1_max_m=r1_m, r2_max_m=r2_m, d_m=d)


def place_two_free(area, env, radio1, radio2):
    """Optimal interference-free placement of two DSCs.

    Each DSC is deployed at the altitude maximizing its reach for its own
    transmit power, then the two disks are placed in opposite corners.

    Args:
        area: TargetArea.
        env: propagation Environment shared by both DSCs.
        radio1, radio2: RadioConfig per DSC (power and ceiling may differ).

    Returns:
        DualPlacement.

    Raises:
        ValueError: either disk does not fit inside the area.
    """
    dep1 = max_coverage_deployment(env, radio1)
    dep2 = max_coverage_deployment(env, radio2)
    return place_at_opposite_corners(area, dep1.r_max_m, dep2.r_max_m,
                                     dep1.h_m, dep2.h_m)


def _clamped_acos(x):
    """acos with the argument clamped to [-1, 1] against rounding drift."""
    return math.acos(min(1.0, max(-1.0, x)))


def union_area(r1_m, r2_m, d_m):
    """Area of the union of two disks with center distance d.

    Args:
        r1_m, r2_m: disk radii, m, > 0.
        d_m: center separation, m, >= 0.

    Returns:
        Union area in m^2.
    """
    if r1_m <= 0.0 or r2_m <= 0.0:
        raise ValueError("radii must be positive")
    if d_m < 0.0:
        raise ValueError("d_m must be non-negative")
    if d_m >= r1_m + r2_m:
        return math.pi * (r1_m * r1_m + r2_m * r2_m)
    if d_m <= abs(r1_m - r2_m):
        r = max(r1_m, r2_m)
        return math.pi * r * r
    # Overlapping case: subtract the lens area. The square root is twice
    # the area of the center-center-intersection triangle, hence the 1/2.
    lens_b = 0.5 * math.sqrt((-d_m + r1_m + r2_m) * (d_m - r1_m + r2_m)
                             * (d_m + r1_m - r2_m) * (d_m + r1_m + r2_m))
    cos1 = (d_m * d_m + r1_m * r1_m - r2_m * r2_m) / (2.0 * d_m * r1_m)
    cos2 = (d_m * d_m + r2_m * r2_m - r1_m * r1_m) / (2.0 * d_m * r2_m)
    return (math.pi * (r1_m * r1_m + r2_m * r2_m)
            - r1_m * r1_m * _clamped_acos(cos1)
            - r2_m * r2_m * _clamped_acos(cos2) + lens_b)


def union_area_equal(r_m, d_m):
    """Union area of two equal disks of radius r at center distance d.

    Args:
        r_m: common disk radius, m, > 0.
        d_m: center separation, m, in [0, 2r].

    Returns:
        Union area in m^2.
    """
    if r_m <= 0.0:
        raise ValueError("r_m must be positive")
    if not 0.0 <= d_m <= 2.0 * r_m:
        raise ValueError("d_m must lie in [0, 2r]; use union_area beyond")
    return (2.0 * math.pi * r_m * r_m
            - 2.0 * r_m * r_m * _clamped_acos(d_m / (2.0 * r_m))
            + (d_m / 2.0) * math.sqrt(4.0 * r_m * r_m - d_m * d_m))
