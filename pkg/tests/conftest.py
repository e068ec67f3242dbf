import math

import numpy as np
import pytest

from rissim.errors import SimulationError
from rissim.geometry import ScenarioConfig, subarray_geometry_grid
from rissim.partition import unit_partition


def make_scenario(**overrides) -> ScenarioConfig:
    """Small, valid scenario; override any field."""
    lam = 0.0107142857142857
    base = dict(
        wavelength=lam,
        uav_height=50.0,
        ris_center=(200.0, 50.0, 21.0),
        mr_init_x=400.0,
        ris_rotation=0.0,
        ris_cols=8,
        ris_rows=8,
        unit_width=lam / 3.0,
        unit_height=lam / 3.0,
        tx_antennas=2,
        rx_antennas=2,
        tx_spacing=lam / 2.0,
        rx_spacing=lam / 2.0,
        tx_speed=15.0,
        tx_heading=math.atan2(45.0, 200.0),
        rx_speed=15.0,
        rx_heading=3.075,
    )
    base.update(overrides)
    return ScenarioConfig(**base)


def random_scenario(rng: np.random.Generator, max_units=32, max_antennas=4):
    """Random valid scenario plus an evaluation time.

    Resamples until the geometry is non-degenerate and both terminals sit on
    the reflecting side of the RIS for every unit.
    """
    for _ in range(500):
        lam = float(rng.uniform(0.005, 0.02))
        y_i = float(rng.uniform(30.0, 80.0))
        cfg_kw = dict(
            wavelength=lam,
            uav_height=float(rng.uniform(10.0, 100.0)),
            ris_center=(float(rng.uniform(50.0, 300.0)), y_i, float(rng.uniform(5.0, 50.0))),
            mr_init_x=float(rng.uniform(0.0, 500.0)),
            ris_rotation=float(rng.uniform(-0.3, 0.3)),
            ris_cols=int(rng.integers(1, max_units + 1)),
            ris_rows=int(rng.integers(1, max_units + 1)),
            unit_width=float(rng.uniform(lam / 10.0, lam / 2.0)),
            unit_height=float(rng.uniform(lam / 10.0, lam / 2.0)),
            tx_antennas=int(rng.integers(1, max_antennas + 1)),
            rx_antennas=int(rng.integers(1, max_antennas + 1)),
            tx_spacing=float(rng.uniform(lam / 4.0, lam)),
            rx_spacing=float(rng.uniform(lam / 4.0, lam)),
            tx_azimuth=float(rng.uniform(-math.pi, math.pi)),
            tx_elevation=float(rng.uniform(-math.pi / 2, math.pi / 2)),
            rx_azimuth=float(rng.uniform(-math.pi, math.pi)),
            rx_elevation=float(rng.uniform(-math.pi / 2, math.pi / 2)),
            tx_speed=float(rng.uniform(0.0, 30.0)),
            tx_heading=float(rng.uniform(-math.pi, math.pi)),
            tx_climb=float(rng.uniform(-0.5, 0.5)),
            rx_speed=float(rng.uniform(0.0, 30.0)),
            rx_heading=float(rng.uniform(-math.pi, math.pi)),
            uav_init_x=float(rng.uniform(-50.0, 350.0)),
            uav_init_y=float(rng.uniform(-40.0, y_i - 5.0)),
            mr_init_y=float(rng.uniform(-40.0, y_i - 5.0)),
        )
        t = float(rng.uniform(0.0, 1.0))
        cfg = ScenarioConfig(**cfg_kw)
        try:
            part = unit_partition(cfg, t)
            a3 = np.repeat(part.a3, part.n_sub)
            a4 = np.tile(part.a4, part.m_sub)
            subarray_geometry_grid(cfg, t, a3, a4)
        except SimulationError:
            continue
        return cfg, t
    raise RuntimeError("could not draw a valid random scenario")


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)
