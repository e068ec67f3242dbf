import math

import numpy as np
import pytest

from rissim.errors import (
    BackIlluminationError,
    ConfigError,
    DegenerateGeometryError,
)
from rissim.geometry import (
    ScenarioConfig,
    antenna_offset,
    antenna_offsets,
    min_terminal_distance,
    mobility_state,
    subarray_geometry,
    subarray_geometry_grid,
    terminal_positions,
    unit_direction,
)

from conftest import make_scenario, random_scenario


class TestScenarioConfig:
    def test_unit_size_above_half_wavelength_rejected(self):
        with pytest.raises(ConfigError):
            make_scenario(unit_width=0.6 * 0.0107142857142857)

    def test_nonpositive_wavelength_rejected(self):
        with pytest.raises(ConfigError):
            make_scenario(wavelength=0.0)

    def test_ris_below_ground_rejected(self):
        with pytest.raises(ConfigError):
            make_scenario(ris_center=(200.0, 50.0, 0.0))

    def test_negative_speed_rejected(self):
        with pytest.raises(ConfigError):
            make_scenario(rx_speed=-1.0)

    def test_velocity_vectors(self):
        cfg = make_scenario(tx_speed=10.0, tx_heading=0.0, tx_climb=0.0)
        assert np.allclose(cfg.tx_velocity, [10.0, 0.0, 0.0])
        assert np.allclose(
            cfg.rx_velocity,
            15.0 * np.array([math.cos(3.075), math.sin(3.075), 0.0]),
        )


class TestAntennaOffset:
    def test_two_element_half_wavelength(self):
        lam = 0.0107142857142857
        cfg = make_scenario(tx_antennas=2, tx_spacing=lam / 2, tx_azimuth=0.0, tx_elevation=0.0)
        off = antenna_offset(cfg, "tx", 1)
        assert np.allclose(off, [lam / 4.0, 0.0, 0.0], atol=1e-15)

    def test_center_element_of_odd_array_is_origin(self):
        cfg = make_scenario(tx_antennas=5)
        assert np.all(antenna_offset(cfg, "tx", 3) == 0.0)

    def test_rotated_receive_offset(self):
        cfg = make_scenario(
            rx_antennas=4, rx_spacing=0.005, rx_azimuth=math.pi / 2, rx_elevation=0.0
        )
        off = antenna_offset(cfg, "rx", 4)
        # coefficient (4 - 8 + 1)/2 = -3/2, rotated onto the y axis
        assert np.allclose(off, [0.0, -0.0075, 0.0], atol=1e-12)

    def test_out_of_range_index(self):
        cfg = make_scenario(tx_antennas=2)
        with pytest.raises(IndexError):
            antenna_offset(cfg, "tx", 3)
        with pytest.raises(IndexError):
            antenna_offset(cfg, "rx", 0)

    def test_offsets_sum_to_zero(self, rng):
        for _ in range(200):
            lam = float(rng.uniform(0.005, 0.02))
            cfg = make_scenario(
                wavelength=lam,
                unit_width=lam / 3,
                unit_height=lam / 3,
                tx_antennas=int(rng.integers(1, 12)),
                tx_spacing=float(rng.uniform(lam / 4, lam)),
                tx_azimuth=float(rng.uniform(-math.pi, math.pi)),
                tx_elevation=float(rng.uniform(-math.pi / 2, math.pi / 2)),
            )
            total = antenna_offsets(cfg, "tx").sum(axis=0)
            assert np.all(np.abs(total) < 1e-12)

    def test_offsets_match_scalar_op(self):
        cfg = make_scenario(tx_antennas=4)
        stacked = antenna_offsets(cfg, "tx")
        for i in range(1, 5):
            assert np.array_equal(stacked[i - 1], antenna_offset(cfg, "tx", i))


class TestTerminalMotion:
    def test_initial_positions(self):
        cfg = make_scenario()
        tx, rx = terminal_positions(cfg, 0.0)
        assert np.allclose(tx, [0.0, 0.0, 50.0])
        assert np.allclose(rx, [400.0, 0.0, 0.0])

    def test_level_flight_displacement(self):
        cfg = make_scenario(tx_speed=10.0, tx_heading=0.0, tx_climb=0.0)
        tx, _ = terminal_positions(cfg, 2.0)
        assert np.allclose(tx, [20.0, 0.0, 50.0])

    def test_receiver_heading(self):
        cfg = make_scenario(rx_speed=15.0, rx_heading=3.075)
        _, rx = terminal_positions(cfg, 1.0)
        assert np.allclose(
            rx, [400.0 + 15 * math.cos(3.075), 15 * math.sin(3.075), 0.0]
        )
        assert abs(rx[0] - 385.03) < 5e-3
        assert abs(rx[1] - 0.998) < 5e-4

    def test_mobility_state_matches_positions(self):
        cfg = make_scenario()
        state = mobility_state(cfg, 2.5)
        tx, rx = terminal_positions(cfg, 2.5)
        assert np.allclose(cfg.tx_init + state.tx_displacement, tx)
        assert np.allclose(cfg.rx_init + state.rx_displacement, rx)
        assert state.rx_displacement[2] == 0.0


class TestMinTerminalDistance:
    def test_initial_instant(self):
        cfg = make_scenario()
        expected_tx = math.sqrt(200.0**2 + 50.0**2 + 29.0**2)
        expected_rx = math.sqrt(200.0**2 + 50.0**2 + 21.0**2)
        value = min_terminal_distance(cfg, 0.0)
        assert value == pytest.approx(min(expected_tx, expected_rx), rel=1e-12)
        assert value == pytest.approx(207.222, abs=5e-3)

    def test_equidistant_terminals(self):
        cfg = make_scenario(
            uav_height=21.0, uav_init_x=175.0, uav_init_y=50.0,
            mr_init_x=200.0, mr_init_y=50.0 - math.sqrt(25.0**2 - 21.0**2),
        )
        tx, rx = terminal_positions(cfg, 0.0)
        center = np.array(cfg.ris_center)
        assert np.linalg.norm(center - tx) == pytest.approx(
            np.linalg.norm(center - rx), rel=1e-12
        )
        assert min_terminal_distance(cfg, 0.0) == pytest.approx(
            np.linalg.norm(center - tx), rel=1e-12
        )

    def test_near_terminal_wins(self):
        cfg = make_scenario(uav_init_x=201.0, uav_init_y=50.0, uav_height=21.0)
        assert min_terminal_distance(cfg, 0.0) == pytest.approx(1.0, rel=1e-12)

    def test_coincident_terminal_raises(self):
        cfg = make_scenario(uav_init_x=200.0, uav_init_y=50.0, uav_height=21.0)
        with pytest.raises(DegenerateGeometryError):
            min_terminal_distance(cfg, 0.0)

    def test_lipschitz_in_time(self, rng):
        for _ in range(50):
            cfg, t = random_scenario(rng)
            eps = 1e-3
            lhs = abs(
                min_terminal_distance(cfg, t + eps) - min_terminal_distance(cfg, t)
            )
            assert lhs <= (cfg.tx_speed + cfg.rx_speed) * eps + 1e-9


class TestUnitDirection:
    def test_cardinal_directions(self):
        assert np.allclose(unit_direction(0.0, 0.0), [1.0, 0.0, 0.0])
        assert np.allclose(unit_direction(math.pi / 2, 0.0), [0.0, 1.0, 0.0], atol=1e-16)

    def test_oblique_direction(self):
        vec = unit_direction(math.pi / 4, math.pi / 6)
        expected = [
            math.sqrt(3) / 2 * math.sqrt(2) / 2,
            math.sqrt(3) / 2 * math.sqrt(2) / 2,
            0.5,
        ]
        assert np.allclose(vec, expected, rtol=1e-12)

    def test_unit_norm_property(self, rng):
        az = rng.uniform(-math.pi, math.pi, 10000)
        el = rng.uniform(-math.pi / 2, math.pi / 2, 10000)
        norms = np.linalg.norm(unit_direction(az, el), axis=-1)
        assert np.max(np.abs(norms - 1.0)) <= 1e-15


class TestSubArrayGeometry:
    def test_ris_center_distances(self):
        cfg = make_scenario()
        geo = subarray_geometry(cfg, 0.0, np.asarray(cfg.ris_center), 0.0, 0.0)
        assert geo.dist_tx == pytest.approx(math.sqrt(200**2 + 50**2 + 29**2), rel=1e-12)
        assert geo.dist_rx == pytest.approx(math.sqrt(200**2 + 50**2 + 21**2), rel=1e-12)
        assert geo.eaoa == pytest.approx(math.asin(21.0 / geo.dist_rx), rel=1e-12)
        assert geo.eaod == pytest.approx(math.asin(-29.0 / geo.dist_tx), rel=1e-12)

    def test_center_stored(self):
        cfg = make_scenario()
        geo = subarray_geometry(cfg, 0.0, np.asarray(cfg.ris_center), 0.0, 0.0)
        assert np.allclose(geo.center, cfg.ris_center)

    def test_terminal_on_vertical_axis_raises(self):
        cfg = make_scenario(ris_center=(400.0, 0.0, 21.0), mr_init_x=400.0)
        with pytest.raises(DegenerateGeometryError):
            subarray_geometry(cfg, 0.0, np.array([400.0, 0.0, 21.0]), 0.0, 0.0)

    def test_back_illumination_raises(self):
        # UAV behind the surface (y > y_I with rotation 0)
        cfg = make_scenario(uav_init_y=120.0, uav_init_x=200.0)
        with pytest.raises(BackIlluminationError):
            subarray_geometry(cfg, 0.0, np.asarray(cfg.ris_center), 0.0, 0.0)

    def test_distances_match_euclidean_norm(self, rng):
        for _ in range(30):
            cfg, t = random_scenario(rng, max_units=16)
            a3 = rng.uniform(-1.0, 1.0, 5)
            a4 = rng.uniform(-0.5, 0.5, 5)
            try:
                geo = subarray_geometry_grid(cfg, t, a3, a4)
            except (DegenerateGeometryError, BackIlluminationError):
                continue
            tx, rx = terminal_positions(cfg, t)
            assert np.allclose(
                geo.dist_tx, np.linalg.norm(geo.centers - tx, axis=1), rtol=1e-12
            )
            assert np.allclose(
                geo.dist_rx, np.linalg.norm(geo.centers - rx, axis=1), rtol=1e-12
            )

    def test_direction_round_trip(self, rng):
        for _ in range(30):
            cfg, t = random_scenario(rng, max_units=16)
            geo = subarray_geometry_grid(cfg, t, np.array([0.3]), np.array([-0.2]))
            tx, rx = terminal_positions(cfg, t)
            rebuilt_tx = tx + geo.dist_tx[:, None] * unit_direction(geo.aaod, geo.eaod)
            rebuilt_rx = rx + geo.dist_rx[:, None] * unit_direction(geo.aaoa, geo.eaoa)
            assert np.max(np.abs(rebuilt_tx - geo.centers)) < 1e-9
            assert np.max(np.abs(rebuilt_rx - geo.centers)) < 1e-9

    def test_incidence_cosines_positive(self, rng):
        for _ in range(20):
            cfg, t = random_scenario(rng, max_units=8)
            geo = subarray_geometry_grid(cfg, t, np.array([0.0]), np.array([0.0]))
            assert np.all(geo.cos_inc > 0.0)
            assert np.all(geo.cos_out > 0.0)
            assert np.all(np.cos(geo.inc_normal) > 0.0)
            assert np.all(np.cos(geo.out_normal) > 0.0)
