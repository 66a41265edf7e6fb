"""Plain-text scenario files.

A scenario file is a set of `key = value` lines grouped under bracketed
section headers.  Full-line comments start with `#`.  Unknown sections or
keys are rejected so typos cannot silently fall back to defaults.
"""

from dataclasses import dataclass
from typing import Dict, Optional, Tuple

from .channel import Environment, RadioConfig
from .dual_free import TargetArea


class ScenarioError(ValueError):
    """A scenario file could not be parsed or validated."""


# section -> key -> (kind, default); default None means the key is required.
_SCHEMA = {
    "environment": {
        "alpha": ("float", None),
        "beta": ("float", None),
        "xi_los_db": ("float", None),
        "xi_nlos_db": ("float", None),
    },
    "radio": {
        "fc_hz": ("float", None),
        "pt_dbm": ("float", None),
        "noise_dbm": ("float", None),
        "gamma_th_db": ("float", None),
        "h_max_m": ("float", None),
    },
    "area": {
        "a_m": ("float", None),
        "b_m": ("float", None),
    },
    "dsc": {
        "h1_m": ("float", None),
        "h2_m": ("float", None),
        "pt1_dbm": ("float", "radio.pt_dbm"),
        "pt2_dbm": ("float", "radio.pt_dbm"),
    },
    "sweep": {
        "d_min_m": ("float", 200.0),
        "d_max_m": ("float", 1800.0),
        "d_step_m": ("float", 25.0),
        "h_grid_min_m": ("float", 100.0),
        "h_grid_max_m": ("float", 1000.0),
        "h_grid_step_m": ("float", 25.0),
        "r_c_list_m": ("list", ()),
        "a_list_m": ("list", ()),
        "radial_step_m": ("float", 2.0),
        "phi_tol_rad": ("float", 1e-4),
        "oracle_cell_m": ("float", 2.0),
        "mc_samples": ("int", 1_000_000),
    },
    "flags": {
        "interference": ("flag", True),
        "clip_width": ("flag", False),
    },
}

_REQUIRED_SECTIONS = ("environment", "radio", "area", "dsc")


@dataclass(frozen=True)
class Scenario:
    """A fully resolved scenario ready for the command line front end."""

    env: Environment
    radio: RadioConfig
    area: TargetArea
    h1_m: float
    h2_m: float
    pt1_dbm: float
    pt2_dbm: float
    d_values: Tuple[float, ...]
    h_grid: Tuple[float, ...]
    r_c_list: Tuple[float, ...]
    a_list: Tuple[float, ...]
    radial_step_m: float
    phi_tol_rad: float
    oracle_cell_m: float
    mc_samples: int
    interference: bool
    clip_width: bool
    # (key, value) pairs of everything above, in canonical order, for the
    # audit header of CSV outputs.
    resolved: Tuple[Tuple[str, str], ...]


def _parse_value(kind, raw, where):
    if kind == "float":
        try:
            return float(raw)
        except ValueError:
            raise ScenarioError(f"{where}: expected a number, got {raw!r}")
    if kind == "int":
        try:
            return int(raw)
        except ValueError:
            raise ScenarioError(f"{where}: expected an integer, got {raw!r}")
    if kind == "list":
        raw = raw.strip()
        if not raw:
            return ()
        try:
            return tuple(float(part) for part in raw.split(","))
        except ValueError:
            raise ScenarioError(f"{where}: expected comma-separated numbers, "
                                f"got {raw!r}")
    if kind == "flag":
        lowered = raw.strip().lower()
        if lowered in ("on", "true", "1", "yes"):
            return True
        if lowered in ("off", "false", "0", "no"):
            return False
        raise ScenarioError(f"{where}: expected on/off, got {raw!r}")
    raise AssertionError(f"unhandled kind {kind}")


def _read_pairs(path):
    """Parse the raw file into {section: {key: (value, line)}}."""
    sections: Dict[str, Dict[str, Tuple[str, int]]] = {}
    current: Optional[str] = None
    try:
        handle = open(path, "r", encoding="utf-8")
    except OSError as exc:
        raise ScenarioError(f"cannot read scenario file: {exc}") from exc
    with handle:
        for lineno, line in enumerate(handle, start=1):
            text = line.strip()
            if not text or text.startswith("#"):
                continue
            if text.startswith("[") and text.endswith("]"):
                name = text[1:-1].strip()
                if name not in _SCHEMA:
                    raise ScenarioError(f"{path}:{lineno}: unknown section "
                                        f"[{name}]")
                current = name
                sections.setdefault(name, {})
                continue
            if "=" not in text:
                raise ScenarioError(f"{path}:{lineno}: expected 'key = value'")
            if current is None:
                raise ScenarioError(f"{path}:{lineno}: key outside a "
                                    "[section] header")
            key, raw = (part.strip() for part in text.split("=", 1))
            if key not in _SCHEMA[current]:
                raise ScenarioError(f"{path}:{lineno}: unknown key {key!r} "
                                    f"in [{current}]")
            if key in sections[current]:
                raise ScenarioError(f"{path}:{lineno}: duplicate key {key!r} "
                                    f"in [{current}]")
            sections[current][key] = (raw, lineno)
    return sections


def _resolve(path, sections):
    """Apply the schema: required keys, typed values, defaults."""
    values: Dict[str, Dict[str, object]] = {}
    lines: Dict[Tuple[str, str], int] = {}
    for section, keys in _SCHEMA.items():
        present = sections.get(section, {})
        values[section] = {}
        for key, (kind, default) in keys.items():
            if key in present:
                raw, lineno = present[key]
                where = f"{path}:{lineno}: [{section}] {key}"
                values[section][key] = _parse_value(kind, raw, where)
                lines[(section, key)] = lineno
            elif default is None and section in _REQUIRED_SECTIONS:
                raise ScenarioError(f"{path}: missing required key {key!r} "
                                    f"in [{section}]")
            else:
                values[section][key] = default
    # Late defaults that refer to other keys.
    for key in ("pt1_dbm", "pt2_dbm"):
        if values["dsc"][key] == "radio.pt_dbm":
            values["dsc"][key] = values["radio"]["pt_dbm"]
    return values, lines


def _build_grid(lo, hi, step, what):
    if step <= 0.0:
        raise ScenarioError(f"{what}: step must be positive")
    if hi < lo:
        raise ScenarioError(f"{what}: max must be >= min")
    count = int((hi - lo) / step + 1e-9) + 1
    return tuple(lo + i * step for i in range(count))


def _format_value(value):
    if isinstance(value, bool):
        return "on" if value else "off"
    if isinstance(value, tuple):
        return ",".join(repr(float(v)) for v in value)
    if isinstance(value, float):
        return repr(value)
    return str(value)


def parse_scenario(path):
    """Load and validate a scenario file.

    Args:
        path: scenario file path.

    Returns:
        Scenario with grids expanded and defaults applied.

    Raises:
        ScenarioError: syntax errors, unknown or missing keys, or values
            the domain types reject.
    """
    sections = _read_pairs(path)
    for section in _REQUIRED_SECTIONS:
        if section not in sections:
            raise ScenarioError(f"{path}: missing required section "
                                f"[{section}]")
    values, lines = _resolve(path, sections)

    def domain(section, factory, **kwargs):
        try:
            return factory(**kwargs)
        except ValueError as exc:
            lineno = min((lines[key] for key in lines if key[0] == section),
                         default=0)
            raise ScenarioError(f"{path}:{lineno}: invalid [{section}] "
                                f"values: {exc}")

    env = domain("environment", Environment,
                 alpha=values["environment"]["alpha"],
                 beta=values["environment"]["beta"],
                 xi_los_db=values["environment"]["xi_los_db"],
                 xi_nlos_db=values["environment"]["xi_nlos_db"])
    radio = domain("radio", RadioConfig,
                   fc_hz=values["radio"]["fc_hz"],
                   pt_dbm=values["radio"]["pt_dbm"],
                   noise_dbm=values["radio"]["noise_dbm"],
                   gamma_th_db=values["radio"]["gamma_th_db"],
                   h_max_m=values["radio"]["h_max_m"])
    area = domain("area", TargetArea,
                  a_m=values["area"]["a_m"], b_m=values["area"]["b_m"])
    for key in ("h1_m", "h2_m"):
        if values["dsc"][key] <= 0.0:
            raise ScenarioError(f"{path}: [dsc] {key} must be positive")

    sweep = values["sweep"]
    d_values = _build_grid(sweep["d_min_m"], sweep["d_max_m"],
                           sweep["d_step_m"], f"{path}: [sweep] d grid")
    h_grid = _build_grid(sweep["h_grid_min_m"], sweep["h_grid_max_m"],
                         sweep["h_grid_step_m"], f"{path}: [sweep] h grid")
    if sweep["radial_step_m"] <= 0.0:
        raise ScenarioError(f"{path}: [sweep] radial_step_m must be positive")
    if sweep["phi_tol_rad"] <= 0.0:
        raise ScenarioError(f"{path}: [sweep] phi_tol_rad must be positive")
    if sweep["oracle_cell_m"] <= 0.0:
        raise ScenarioError(f"{path}: [sweep] oracle_cell_m must be positive")
    if sweep["mc_samples"] <= 0:
        raise ScenarioError(f"{path}: [sweep] mc_samples must be positive")

    resolved = []
    for section, keys in _SCHEMA.items():
        for key in keys:
            resolved.append((f"{section}.{key}",
                             _format_value(values[section][key])))

    return Scenario(
        env=env, radio=radio, area=area,
        h1_m=values["dsc"]["h1_m"], h2_m=values["dsc"]["h2_m"],
        pt1_dbm=values["dsc"]["pt1_dbm"], pt2_dbm=values["dsc"]["pt2_dbm"],
        d_values=d_values, h_grid=h_grid,
        r_c_list=values["sweep"]["r_c_list_m"],
        a_list=values["sweep"]["a_list_m"],
        radial_step_m=sweep["radial_step_m"],
        phi_tol_rad=sweep["phi_tol_rad"],
        oracle_cell_m=sweep["oracle_cell_m"],
        mc_samples=sweep["mc_samples"],
        interference=values["flags"]["interference"],
        clip_width=values["flags"]["clip_width"],
        resolved=tuple(resolved),
    )
