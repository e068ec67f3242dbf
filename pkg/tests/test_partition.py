import math

import numpy as np
import pytest

from rissim.errors import NearFieldLimitError
from rissim.partition import (
    first_subarray_size,
    forced_partition,
    partition_at,
    single_partition,
    subarray_center,
    subarray_counts,
    subarray_size_at,
    unit_partition,
)

from conftest import make_scenario, random_scenario


def rayleigh_ok(size, unit, wavelength, xi):
    return 2.0 * (size * unit) ** 2 / wavelength <= xi


class TestFirstSubarraySize:
    def test_column_sizing(self):
        cfg = make_scenario(
            wavelength=0.01, unit_width=0.005, unit_height=0.0025,
            ris_cols=500, ris_rows=800,
        )
        cols, rows = first_subarray_size(cfg, 50.0)
        assert cols == 100  # floor(sqrt(0.01*50 / (2*0.005^2)))
        assert rows == 200  # floor(sqrt(0.01*50 / (2*0.0025^2)))

    def test_clamped_at_full_surface(self):
        cfg = make_scenario(wavelength=0.01, unit_width=0.005, unit_height=0.005,
                            ris_cols=10, ris_rows=10)
        cols, rows = first_subarray_size(cfg, 1e6)
        assert (cols, rows) == (10, 10)

    def test_near_field_limit(self):
        cfg = make_scenario(wavelength=0.01, unit_width=0.005, unit_height=0.005)
        # closer than 2 d^2 / lambda = 5 mm
        with pytest.raises(NearFieldLimitError):
            first_subarray_size(cfg, 0.004)
        with pytest.raises(NearFieldLimitError):
            first_subarray_size(cfg, 0.0)

    def test_floor_maximality(self, rng):
        for _ in range(500):
            lam = float(rng.uniform(0.005, 0.02))
            unit = float(rng.uniform(lam / 10, lam / 2))
            cfg = make_scenario(
                wavelength=lam, unit_width=unit, unit_height=unit,
                ris_cols=int(rng.integers(1, 1000)), ris_rows=4,
            )
            xi = float(rng.uniform(0.5, 500.0))
            try:
                cols, _ = first_subarray_size(cfg, xi)
            except NearFieldLimitError:
                assert not rayleigh_ok(1, unit, lam, xi)
                continue
            assert cols >= 1
            if cols < cfg.ris_cols:
                assert rayleigh_ok(cols, unit, lam, xi)
                assert not rayleigh_ok(cols + 1, unit, lam, xi)


class TestCountsAndSizes:
    def test_divisible(self):
        assert subarray_counts(500, 500, 100, 100) == (5, 5)

    def test_remainder(self):
        assert subarray_counts(250, 250, 100, 100) == (3, 3)

    def test_whole_surface(self):
        assert subarray_counts(250, 300, 250, 300) == (1, 1)

    def test_sizes_with_remainder(self):
        sizes = [subarray_size_at(250, 100, 3, i) for i in (1, 2, 3)]
        assert sizes == [100, 100, 50]

    def test_single_subarray_size(self):
        assert subarray_size_at(250, 250, 1, 1) == 250

    def test_divisible_last_equals_first(self):
        assert subarray_size_at(500, 100, 5, 5) == 100

    def test_index_out_of_range(self):
        with pytest.raises(IndexError):
            subarray_size_at(250, 100, 3, 4)


class TestSubarrayCenter:
    def test_single_subarray_center_is_ris_center(self):
        cfg = make_scenario(ris_cols=16, ris_rows=16)
        center, a3, a4 = subarray_center(cfg, 1, 1, 16, 16, 1, 1)
        assert a3 == 0.0 and a4 == 0.0
        assert np.allclose(center, cfg.ris_center)

    def test_first_and_last_offsets(self):
        cfg = make_scenario(ris_cols=250, ris_rows=4, unit_width=0.004)
        _, a3_first, _ = subarray_center(cfg, 1, 1, 100, 4, 3, 1)
        _, a3_last, _ = subarray_center(cfg, 3, 1, 100, 4, 3, 1)
        assert a3_first == pytest.approx(-75.0 * cfg.unit_width, rel=1e-15)
        assert a3_last == pytest.approx(100.0 * cfg.unit_width, rel=1e-15)

    def test_center_positions_respect_rotation(self):
        cfg = make_scenario(ris_cols=250, ris_rows=4, ris_rotation=0.7)
        center, a3, a4 = subarray_center(cfg, 1, 1, 100, 4, 3, 1)
        x_i, y_i, z_i = cfg.ris_center
        assert center[0] == pytest.approx(x_i + a3 * math.cos(0.7), rel=1e-15)
        assert center[1] == pytest.approx(y_i + a3 * math.sin(0.7), rel=1e-15)
        assert center[2] == pytest.approx(z_i - a4, rel=1e-15)


class TestPartitionAt:
    def test_far_field_single_subarray(self):
        cfg = make_scenario(ris_cols=4, ris_rows=4)
        part = partition_at(cfg, 0.0)
        assert part.is_single
        assert part.col_sizes == (4,) and part.row_sizes == (4,)

    def test_forced_unit_partition(self):
        cfg = make_scenario(ris_cols=6, ris_rows=5)
        part = unit_partition(cfg, 0.0)
        assert part.m_sub == 6 and part.n_sub == 5
        assert all(s == 1 for s in part.col_sizes + part.row_sizes)

    def test_forced_out_of_range(self):
        cfg = make_scenario(ris_cols=6, ris_rows=5)
        with pytest.raises(ValueError):
            forced_partition(cfg, 0.0, 7, 1)

    def test_exact_tiling_property(self, rng):
        for _ in range(300):
            cfg, t = random_scenario(rng, max_units=200)
            try:
                part = partition_at(cfg, t)
            except NearFieldLimitError:
                continue
            assert sum(part.col_sizes) == cfg.ris_cols
            assert sum(part.row_sizes) == cfg.ris_rows
            assert all(s == part.first_cols for s in part.col_sizes[:-1])
            assert all(s == part.first_rows for s in part.row_sizes[:-1])
            assert part.col_sizes[-1] <= part.first_cols
            assert part.row_sizes[-1] <= part.first_rows
            assert min(part.col_sizes + part.row_sizes) >= 1

    def test_monotonicity_in_distance(self, rng):
        for _ in range(300):
            lam = float(rng.uniform(0.005, 0.02))
            unit = float(rng.uniform(lam / 10, lam / 2))
            cfg = make_scenario(
                wavelength=lam, unit_width=unit, unit_height=unit,
                ris_cols=int(rng.integers(1, 600)), ris_rows=int(rng.integers(1, 600)),
            )
            xi_lo = float(rng.uniform(0.5, 200.0))
            xi_hi = xi_lo * float(rng.uniform(1.0, 4.0))
            try:
                lo = first_subarray_size(cfg, xi_lo)
            except NearFieldLimitError:
                continue
            hi = first_subarray_size(cfg, xi_hi)
            assert hi[0] >= lo[0] and hi[1] >= lo[1]
            counts_lo = subarray_counts(cfg.ris_cols, cfg.ris_rows, *lo)
            counts_hi = subarray_counts(cfg.ris_cols, cfg.ris_rows, *hi)
            assert counts_hi[0] * counts_hi[1] <= counts_lo[0] * counts_lo[1]

    def test_determinism(self):
        cfg = make_scenario(ris_cols=123, ris_rows=77)
        p1 = partition_at(cfg, 3.25)
        p2 = partition_at(cfg, 3.25)
        assert p1.key() == p2.key()
        assert np.array_equal(p1.centers, p2.centers)

    def test_reciprocity_of_terminal_roles(self):
        # Same pair of terminal distances with roles swapped: identical tiling.
        near, far = 40.0, 90.0
        cfg_a = make_scenario(
            ris_cols=300, ris_rows=200,
            uav_height=21.0, uav_init_x=200.0 - near, uav_init_y=50.0,
            mr_init_x=200.0 - math.sqrt(far**2 - 441.0), mr_init_y=50.0,
            tx_speed=0.0, rx_speed=0.0,
        )
        cfg_b = make_scenario(
            ris_cols=300, ris_rows=200,
            uav_height=21.0, uav_init_x=200.0 - far, uav_init_y=50.0,
            mr_init_x=200.0 - math.sqrt(near**2 - 441.0), mr_init_y=50.0,
            tx_speed=0.0, rx_speed=0.0,
        )
        pa = partition_at(cfg_a, 0.0)
        pb = partition_at(cfg_b, 0.0)
        assert pa.xi_min == pytest.approx(pb.xi_min, rel=1e-12)
        assert pa.key()[1:] == pb.key()[1:]

    def test_time_evolution_shape_on_default_trajectory(self):
        cfg = make_scenario(ris_cols=840, ris_rows=560)
        totals = [partition_at(cfg, t).total for t in np.linspace(0.0, 15.0, 31)]
        peak = totals.index(max(totals))
        assert all(a <= b for a, b in zip(totals[:peak], totals[1 : peak + 1]))
        assert all(a >= b for a, b in zip(totals[peak:], totals[peak + 1 :]))

    def test_centers_grid_matches_scalar_op(self):
        cfg = make_scenario(ris_cols=250, ris_rows=37, ris_rotation=0.3)
        part = forced_partition(cfg, 0.0, 100, 20)
        for mi in range(part.m_sub):
            for ni in range(part.n_sub):
                center, a3, a4 = subarray_center(
                    cfg, mi + 1, ni + 1, 100, 20, part.m_sub, part.n_sub
                )
                assert np.array_equal(part.centers[mi, ni], center)
                assert part.a3[mi] == a3 and part.a4[ni] == a4

    def test_single_partition_helper(self):
        cfg = make_scenario(ris_cols=9, ris_rows=7)
        part = single_partition(cfg, 0.0)
        assert part.is_single and part.col_sizes == (9,) and part.row_sizes == (7,)
