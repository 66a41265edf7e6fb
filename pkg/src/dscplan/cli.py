"""Command line front end.

Loads a scenario file, runs one of the planning experiments, and emits a
CSV table with a `#`-comment audit header.  Exit codes: 0 success, 2
scenario parse error, 3 precondition violation, 4 solver failure.
"""

import argparse
import sys
from dataclasses import replace

from .channel import mean_path_loss
from .dual_free import TargetArea, place_two_free, union_area
from .dual_interf import (CoverageReport, InterferenceScenario,
                          _map_ordered, _radius_or_zero, optimal_joint,
                          optimal_separation)
from .errors import SolverError
from .geometry import grid_area, mc_area, sinr_union_area
from .scenario import ScenarioError, parse_scenario
from .single_dsc import min_transmit_power


def _fmt(value):
    """Format a number with 6 significant digits."""
    return format(float(value), ".6g")


def _metadata(command, scen):
    lines = [f"# dscplan {command}"]
    lines.extend(f"# scenario {key} = {value}" for key, value in scen.resolved)
    return lines


def _write(out, lines):
    data = "\n".join(lines) + "\n"
    if out == "-":
        sys.stdout.write(data)
    else:
        with open(out, "wb") as handle:
            handle.write(data.encode("utf-8"))


def _interference(args, scen):
    return scen.interference and not args.no_interference


def _clip_width(args, scen):
    return scen.clip_width or args.clip_width


def _clip_reports(scen, points, interference, threads):
    """Evaluate (d, h1, h2) points with the width-clipped grid oracle."""
    cache = {}

    def radius(pt, h):
        key = (pt, h)
        if key not in cache:
            cache[key] = _radius_or_zero(pt, h, scen.env, scen.radio)
        return cache[key]

    def evaluate(point):
        d, h1, h2 = point
        scenario = InterferenceScenario(
            area=scen.area, env=scen.env, radio=scen.radio, d_m=d,
            h1_m=h1, h2_m=h2, pt1_dbm=scen.pt1_dbm, pt2_dbm=scen.pt2_dbm,
            r_m1_m=radius(scen.pt1_dbm, h1), r_m2_m=radius(scen.pt2_dbm, h2))
        est = sinr_union_area(scenario, scen.oracle_cell_m,
                              interference=interference, clip_width=True)
        return CoverageReport(est.value_m2, est.value_m2 / scen.area.area_m2,
                              d, h1, h2)

    return list(_map_ordered(evaluate, points, threads))


def _separation_reports(args, scen, area):
    """Reports over the separation grid for a fixed-altitude scenario."""
    interference = _interference(args, scen)
    if _clip_width(args, scen):
        points = [(d, scen.h1_m, scen.h2_m) for d in scen.d_values]
        return _clip_reports(replace(scen, area=area), points, interference,
                             args.threads)
    sweep = optimal_separation(area, scen.env, scen.radio, scen.h1_m,
                               scen.h2_m, scen.d_values,
                               pt1_dbm=scen.pt1_dbm, pt2_dbm=scen.pt2_dbm,
                               interference=interference,
                               radial_step=scen.radial_step_m,
                               phi_tol=scen.phi_tol_rad,
                               threads=args.threads)
    return list(sweep.reports)


def _first_max(reports):
    best = 0
    for i in range(1, len(reports)):
        if reports[i].ratio > reports[best].ratio:
            best = i
    return reports[best]


def cmd_altitude_sweep(args, scen):
    """Minimum power to cover each target radius from each grid altitude."""
    lines = _metadata("altitude-sweep", scen)
    lines.append("r_c_m,h_m,pt_min_dbm,optimal")
    budget = scen.radio.gamma_th_db + scen.radio.noise_dbm
    for r_c in scen.r_c_list:
        if r_c <= 0.0:
            raise ValueError("r_c values must be positive")
        for h in scen.h_grid:
            pt = mean_path_loss(r_c, h, scen.radio, scen.env) + budget
            lines.append(f"{_fmt(r_c)},{_fmt(h)},{_fmt(pt)},0")
        power = min_transmit_power(r_c, scen.env, scen.radio)
        lines.append(f"{_fmt(r_c)},{_fmt(power.h_used_m)},"
                     f"{_fmt(power.pt_min_dbm)},1")
    return lines


def cmd_separation_sweep(args, scen):
    """Coverage versus DSC separation at fixed altitudes."""
    reports = _separation_reports(args, scen, scen.area)
    lines = _metadata("separation-sweep", scen)
    lines.append("d_m,h1_m,h2_m,area_m2,ratio")
    for rep in reports:
        lines.append(f"{_fmt(rep.d_m)},{_fmt(rep.h1_m)},{_fmt(rep.h2_m)},"
                     f"{_fmt(rep.area_covered_m2)},{_fmt(rep.ratio)}")
    best = _first_max(reports)
    lines.append(f"# d_opt_m = {_fmt(best.d_m)}")
    lines.append(f"# ratio_max = {_fmt(best.ratio)}")
    return lines


def cmd_area_sweep(args, scen):
    """Optimal separation as a function of the target-area length."""
    seen = set()
    a_values = []
    for a in scen.a_list:
        if a in seen:
            print(f"warning: duplicate a value {_fmt(a)} ignored",
                  file=sys.stderr)
            continue
        seen.add(a)
        a_values.append(a)
    lines = _metadata("area-sweep", scen)
    lines.append("a_m,d_opt_m,ratio_max")
    for a in a_values:
        area = TargetArea(a_m=a, b_m=scen.area.b_m)
        best = _first_max(_separation_reports(args, scen, area))
        lines.append(f"{_fmt(a)},{_fmt(best.d_m)},{_fmt(best.ratio)}")
    return lines


def cmd_dual_free(args, scen):
    """Interference-free two-DSC placement and union coverage."""
    radio1 = replace(scen.radio, pt_dbm=scen.pt1_dbm)
    radio2 = replace(scen.radio, pt_dbm=scen.pt2_dbm)
    placement = place_two_free(scen.area, scen.env, radio1, radio2)
    union = union_area(placement.r1_max_m, placement.r2_max_m, placement.d_m)
    lines = _metadata("dual-free", scen)
    lines.append("key,value")
    rows = [
        ("x1_m", placement.p1.x_m), ("y1_m", placement.p1.y_m),
        ("h1_m", placement.p1.h_m), ("r1_max_m", placement.r1_max_m),
        ("x2_m", placement.p2.x_m), ("y2_m", placement.p2.y_m),
        ("h2_m", placement.p2.h_m), ("r2_max_m", placement.r2_max_m),
        ("d_m", placement.d_m), ("union_area_m2", union),
    ]
    if args.verify:
        def covered(x, y):
            in1 = ((x - placement.p1.x_m) ** 2 + (y - placement.p1.y_m) ** 2
                   <= placement.r1_max_m ** 2)
            in2 = ((x - placement.p2.x_m) ** 2 + (y - placement.p2.y_m) ** 2
                   <= placement.r2_max_m ** 2)
            return in1 | in2

        bounds = (-scen.area.a_m / 2.0, scen.area.a_m / 2.0,
                  -scen.area.b_m / 2.0, scen.area.b_m / 2.0)
        grid = grid_area(covered, bounds, scen.oracle_cell_m)
        monte = mc_area(covered, bounds, scen.mc_samples, args.seed)
        lines.insert(1, f"# mc_generator = {monte.generator}")
        lines.insert(2, f"# mc_seed = {monte.seed}")
        rows.extend([
            ("grid_area_m2", grid.value_m2),
            ("grid_rel_err", abs(grid.value_m2 - union) / union),
            ("mc_area_m2", monte.value_m2),
            ("mc_rel_err", abs(monte.value_m2 - union) / union),
        ])
    lines.extend(f"{key},{_fmt(value)}" for key, value in rows)
    return lines


def cmd_joint_search(args, scen):
    """Exhaustive search over separation and both altitudes."""
    interference = _interference(args, scen)
    if _clip_width(args, scen):
        points = [(d, h1, h2) for d in scen.d_values for h1 in scen.h_grid
                  for h2 in scen.h_grid]
        reports = _clip_reports(scen, points, interference, args.threads)
        best = _first_max(reports)
    else:
        search = optimal_joint(scen.area, scen.env, scen.radio,
                               scen.d_values, scen.h_grid, scen.h_grid,
                               pt1_dbm=scen.pt1_dbm, pt2_dbm=scen.pt2_dbm,
                               interference=interference,
                               radial_step=scen.radial_step_m,
                               phi_tol=scen.phi_tol_rad,
                               threads=args.threads)
        reports = search.reports
        best = search.best
    lines = _metadata("joint-search", scen)
    lines.append("d_m,h1_m,h2_m,area_m2,ratio")
    emit = reports if args.full else [best]
    for rep in emit:
        lines.append(f"{_fmt(rep.d_m)},{_fmt(rep.h1_m)},{_fmt(rep.h2_m)},"
                     f"{_fmt(rep.area_covered_m2)},{_fmt(rep.ratio)}")
    lines.append(f"# d_opt_m = {_fmt(best.d_m)}")
    lines.append(f"# h1_opt_m = {_fmt(best.h1_m)}")
    lines.append(f"# h2_opt_m = {_fmt(best.h2_m)}")
    lines.append(f"# ratio_max = {_fmt(best.ratio)}")
    return lines


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="dscplan",
        description="Coverage planning sweeps for drone small cells.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(name, helptext, threads=False, sweep_flags=False):
        cmd = sub.add_parser(name, help=helptext)
        cmd.add_argument("--scenario", required=True,
                         help="scenario file path")
        cmd.add_argument("--out", default="-",
                         help="output CSV path, - for stdout")
        if threads:
            cmd.add_argument("--threads", type=int, default=1,
                             help="worker threads (results are identical "
                                  "for any count)")
        if sweep_flags:
            cmd.add_argument("--no-interference", action="store_true",
                             help="silence the interfering DSC")
            cmd.add_argument("--clip-width", action="store_true",
                             help="clip coverage to |y| <= b/2 with the "
                                  "grid oracle")
        return cmd

    common("altitude-sweep",
           "minimum power per altitude for each target radius")
    common("separation-sweep", "coverage versus DSC separation",
           threads=True, sweep_flags=True)
    common("area-sweep", "optimal separation versus area length",
           threads=True, sweep_flags=True)
    dual = common("dual-free", "interference-free two-DSC placement")
    dual.add_argument("--verify", action="store_true",
                      help="cross-check the union area with the grid and "
                           "Monte-Carlo oracles")
    dual.add_argument("--seed", type=int, default=0,
                      help="master seed for the Monte-Carlo oracle")
    joint = common("joint-search",
                   "search separation and both altitudes", threads=True,
                   sweep_flags=True)
    joint.add_argument("--full", action="store_true",
                       help="emit every grid point instead of the optimum")
    return parser


_HANDLERS = {
    "altitude-sweep": cmd_altitude_sweep,
    "separation-sweep": cmd_separation_sweep,
    "area-sweep": cmd_area_sweep,
    "dual-free": cmd_dual_free,
    "joint-search": cmd_joint_search,
}


def main(argv=None):
    args = _build_parser().parse_args(argv)
    try:
        scen = parse_scenario(args.scenario)
        lines = _HANDLERS[args.command](args, scen)
    except ScenarioError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SolverError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    _write(args.out, lines)
    return 0


if __name__ == "__main__":
    sys.exit(main())
