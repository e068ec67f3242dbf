"""Scenario-config ingestion: flat key-value files with dotted section keys.

Files contain ``key = value`` lines; ``#`` starts a comment; blank lines are
ignored. Unknown keys, duplicates, and malformed values are schema errors
with line information. Unspecified keys take the defaults below (28 GHz
carrier, 3 m x 2 m RIS at (200, 50, 21) with lambda/3 units, 16-antenna
ULAs, the stock approach-then-recede trajectory).

Lengths are meters, angles radians, speeds m/s, frequency Hz.
"""

from __future__ import annotations

import math

from .errors import ConfigError
from .geometry import SPEED_OF_LIGHT, ScenarioConfig

DEFAULT_FREQUENCY = 28e9
DEFAULT_RIS_CENTER = (200.0, 50.0, 21.0)
DEFAULT_RIS_WIDTH = 3.0
DEFAULT_RIS_HEIGHT = 2.0
DEFAULT_MR_INIT_X = 400.0
DEFAULT_MR_SPEED = 15.0
DEFAULT_MR_HEADING = 3.075
DEFAULT_UAV_HEIGHT = 50.0
DEFAULT_UAV_SPEED = 15.0
# Straight path from the origin aimed 5 m in front of the RIS ground point;
# closest approach ~29.4 m around t = 13.7 s, receding afterwards.
DEFAULT_UAV_HEADING = math.atan2(45.0, 200.0)
DEFAULT_ANTENNAS = 16

_FLOAT_KEYS = {
    "carrier.frequency",
    "carrier.wavelength",
    "ris.center_x",
    "ris.center_y",
    "ris.center_z",
    "ris.rotation",
    "ris.width",
    "ris.height",
    "ris.unit_width",
    "ris.unit_height",
    "uav.height",
    "uav.init_x",
    "uav.init_y",
    "uav.speed",
    "uav.heading",
    "uav.climb",
    "mr.init_x",
    "mr.init_y",
    "mr.speed",
    "mr.heading",
    "tx.spacing",
    "tx.azimuth",
    "tx.elevation",
    "rx.spacing",
    "rx.azimuth",
    "rx.elevation",
}
_INT_KEYS = {"ris.cols", "ris.rows", "tx.antennas", "rx.antennas"}
KNOWN_KEYS = _FLOAT_KEYS | _INT_KEYS


def parse_scenario_file(path: str) -> dict:
    """Parse a config file into a key->value dict (schema-checked)."""
    values: dict = {}
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ConfigError("expected 'key = value'", line=lineno)
            key, _, text = line.partition("=")
            key = key.strip()
            text = text.strip()
            if key not in KNOWN_KEYS:
                raise ConfigError(f"unknown key {key!r}", field=key, line=lineno)
            if key in values:
                raise ConfigError("duplicate key", field=key, line=lineno)
            try:
                if key in _INT_KEYS:
                    values[key] = int(text)
                else:
                    values[key] = float(text)
            except ValueError:
                raise ConfigError(
                    f"cannot parse value {text!r}", field=key, line=lineno
                ) from None
    return values


def scenario_from_values(values: dict) -> ScenarioConfig:
    """Build a validated scenario from parsed keys plus defaults."""
    if "carrier.frequency" in values and "carrier.wavelength" in values:
        raise ConfigError(
            "give either carrier.frequency or carrier.wavelength, not both",
            field="carrier.wavelength",
        )
    if "carrier.wavelength" in values:
        wavelength = values["carrier.wavelength"]
    else:
        frequency = values.get("carrier.frequency", DEFAULT_FREQUENCY)
        if not frequency > 0:
            raise ConfigError("must be positive", field="carrier.frequency")
        wavelength = SPEED_OF_LIGHT / frequency

    unit_width = values.get("ris.unit_width", wavelength / 3.0)
    unit_height = values.get("ris.unit_height", wavelength / 3.0)
    if not unit_width > 0 or not unit_height > 0:
        raise ConfigError("unit sizes must be positive", field="ris.unit_width")
    if "ris.cols" in values:
        cols = values["ris.cols"]
    else:
        cols = round(values.get("ris.width", DEFAULT_RIS_WIDTH) / unit_width)
    if "ris.rows" in values:
        rows = values["ris.rows"]
    else:
        rows = round(values.get("ris.height", DEFAULT_RIS_HEIGHT) / unit_height)

    return ScenarioConfig(
        wavelength=wavelength,
        uav_height=values.get("uav.height", DEFAULT_UAV_HEIGHT),
        ris_center=(
            values.get("ris.center_x", DEFAULT_RIS_CENTER[0]),
            values.get("ris.center_y", DEFAULT_RIS_CENTER[1]),
            values.get("ris.center_z", DEFAULT_RIS_CENTER[2]),
        ),
        mr_init_x=values.get("mr.init_x", DEFAULT_MR_INIT_X),
        ris_rotation=values.get("ris.rotation", 0.0),
        ris_cols=cols,
        ris_rows=rows,
        unit_width=unit_width,
        unit_height=unit_height,
        tx_antennas=values.get("tx.antennas", DEFAULT_ANTENNAS),
        rx_antennas=values.get("rx.antennas", DEFAULT_ANTENNAS),
        tx_spacing=values.get("tx.spacing", wavelength / 2.0),
        rx_spacing=values.get("rx.spacing", wavelength / 2.0),
        tx_azimuth=values.get("tx.azimuth", 0.0),
        tx_elevation=values.get("tx.elevation", 0.0),
        rx_azimuth=values.get("rx.azimuth", 0.0),
        rx_elevation=values.get("rx.elevation", 0.0),
        tx_speed=values.get("uav.speed", DEFAULT_UAV_SPEED),
        tx_heading=values.get("uav.heading", DEFAULT_UAV_HEADING),
        tx_climb=values.get("uav.climb", 0.0),
        rx_speed=values.get("mr.speed", DEFAULT_MR_SPEED),
        rx_heading=values.get("mr.heading", DEFAULT_MR_HEADING),
        uav_init_x=values.get("uav.init_x", 0.0),
        uav_init_y=values.get("uav.init_y", 0.0),
        mr_init_y=values.get("mr.init_y", 0.0),
    )


def load_config(path: str | None) -> ScenarioConfig:
    """Load a scenario file; ``None`` gives the full default scenario."""
    values = parse_scenario_file(path) if path is not None else {}
    return scenario_from_values(values)


def default_scenario() -> ScenarioConfig:
    return scenario_from_values({})
