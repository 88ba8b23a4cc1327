"""Flat key-value scenario config files.

Format: one `key = value` per line, `#` starts a comment.  Recognized
keys: nx, ny, spacing, wavelength, layout (colinear|coplanar|explicit),
d, s, positions (semicolon-separated x,y,z triples), pt, noise_power.
CLI overrides are plain `key=value` strings merged over file values.
"""

from __future__ import annotations

from pathlib import Path

from .channel import ScenarioConfig
from .geometry import ArrayConfig, LayoutKind, Position, UserLayout

__all__ = ["ConfigError", "parse_config_file", "parse_overrides", "build_scenario", "scenario_to_dict"]

_KNOWN_KEYS = ("nx", "ny", "spacing", "wavelength", "layout", "d", "s", "positions", "pt", "noise_power")


class ConfigError(ValueError):
    """Scenario config problem, reported with the offending key."""


def parse_config_file(path) -> dict[str, str]:
    """Raw key -> value strings from a config file."""
    path = Path(path)
    if not path.is_file():
        raise ConfigError(f"config file not found: {path}")
    values: dict[str, str] = {}
    for lineno, raw in enumerate(path.read_text().splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{lineno}: expected 'key = value', got {raw!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        _check_key(key)
        values[key] = value
    return values


def parse_overrides(pairs) -> dict[str, str]:
    """`key=value` strings (from --set flags) as a raw dict."""
    values: dict[str, str] = {}
    for pair in pairs or ():
        if "=" not in pair:
            raise ConfigError(f"override {pair!r} is not of the form key=value")
        key, value = (part.strip() for part in pair.split("=", 1))
        _check_key(key)
        values[key] = value
    return values


def build_scenario(raw: dict[str, str]) -> ScenarioConfig:
    """Validated ScenarioConfig from merged raw key-value strings."""
    nx = _get_int(raw, "nx", required=True)
    ny = _get_int(raw, "ny", default=nx)
    spacing = _get_float(raw, "spacing", default=0.5)
    wavelength = _get_float(raw, "wavelength", default=1.0)
    pt = _get_float(raw, "pt", required=True)
    noise_power = _get_float(raw, "noise_power", default=1.0)

    layout_name = raw.get("layout")
    if layout_name is None:
        raise ConfigError("missing required key 'layout'")
    try:
        kind = LayoutKind(layout_name.lower())
    except ValueError:
        choices = ", ".join(k.value for k in LayoutKind)
        raise ConfigError(f"layout: unknown value {layout_name!r} (choices: {choices})") from None

    try:
        array = ArrayConfig(nx=nx, ny=ny, spacing=spacing, wavelength=wavelength)
        if kind is LayoutKind.EXPLICIT:
            if "positions" not in raw:
                raise ConfigError("explicit layout requires key 'positions'")
            layout = UserLayout(kind=kind, positions=_parse_positions(raw["positions"]))
        else:
            d = _get_float(raw, "d", required=True)
            s = _get_float(raw, "s", default=0.0)
            layout = UserLayout(kind=kind, d=d, s=s)
        return ScenarioConfig(array=array, layout=layout, pt=pt, noise_power=noise_power)
    except ConfigError:
        raise
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc


def scenario_to_dict(cfg: ScenarioConfig) -> dict:
    """Resolved scenario as plain values (the manifest's config echo)."""
    out = {
        "nx": cfg.array.nx,
        "ny": cfg.array.ny,
        "spacing": cfg.array.spacing,
        "wavelength": cfg.array.wavelength,
        "layout": cfg.layout.kind.value,
        "pt": cfg.pt,
        "noise_power": cfg.noise_power,
    }
    if cfg.layout.kind is LayoutKind.EXPLICIT:
        out["positions"] = "; ".join(f"{p.x},{p.y},{p.z}" for p in cfg.layout.positions)
    else:
        out["d"] = cfg.layout.d
        out["s"] = cfg.layout.s
    return out


def _check_key(key: str):
    if key not in _KNOWN_KEYS:
        raise ConfigError(f"unknown config key {key!r} (known keys: {', '.join(_KNOWN_KEYS)})")


def _get_int(raw, key, default=None, required=False):
    if key not in raw:
        if required:
            raise ConfigError(f"missing required key {key!r}")
        return default
    try:
        return int(raw[key])
    except ValueError:
        raise ConfigError(f"{key}: expected an integer, got {raw[key]!r}") from None


def _get_float(raw, key, default=None, required=False):
    if key not in raw:
        if required:
            raise ConfigError(f"missing required key {key!r}")
        return default
    try:
        return float(raw[key])
    except ValueError:
        raise ConfigError(f"{key}: expected a number, got {raw[key]!r}") from None


def _parse_positions(text: str) -> tuple[Position, ...]:
    positions = []
    for i, chunk in enumerate(text.split(";")):
        chunk = chunk.strip()
        if not chunk:
            continue
        parts = [p.strip() for p in chunk.split(",")]
        if len(parts) != 3:
            raise ConfigError(f"positions[{i}]: expected 'x,y,z', got {chunk!r}")
        try:
            x, y, z = (float(p) for p in parts)
        except ValueError:
            raise ConfigError(f"positions[{i}]: non-numeric coordinate in {chunk!r}") from None
        positions.append(Position(x, y, z))
    if not positions:
        raise ConfigError("positions: empty list")
    return tuple(positions)
