"""Dynamic sub-array partition of the RIS.

The surface is tiled so every sub-array individually satisfies the far-field
(Rayleigh distance) criterion for the nearer terminal: the first sub-array is
the largest with ``2 * (size * unit)**2 / wavelength <= xi_min``, all
sub-arrays but the last share its size, and the remainder goes to the last
one. Re-evaluated per time instant as the terminals move.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NearFieldLimitError
from .geometry import ScenarioConfig, min_terminal_distance


def _center_offset(coeff: int, unit: float) -> float:
    return 0.5 * coeff * unit


@dataclass(frozen=True, eq=False)
class Partition:
    """Sub-array grid at one time instant.

    ``col_sizes``/``row_sizes`` hold the per-sub-array unit counts,
    ``a3``/``a4`` the signed in-plane offsets of the sub-array centers from
    the RIS center (column direction / downward), and ``centers`` their 3-D
    positions with shape ``(m_sub, n_sub, 3)``.
    """

    time: float
    xi_min: float
    first_cols: int
    first_rows: int
    m_sub: int
    n_sub: int
    col_sizes: tuple[int, ...]
    row_sizes: tuple[int, ...]
    a3: np.ndarray
    a4: np.ndarray
    centers: np.ndarray

    @property
    def total(self) -> int:
        return self.m_sub * self.n_sub

    @property
    def is_single(self) -> bool:
        return self.total == 1

    @property
    def is_unit(self) -> bool:
        return self.first_cols == 1 and self.first_rows == 1

    def key(self) -> tuple:
        """Hashable identity used to match RIS configurations to the
        partition they were derived from."""
        return (
            self.time,
            self.first_cols,
            self.first_rows,
            self.m_sub,
            self.n_sub,
            self.col_sizes,
            self.row_sizes,
        )


def _rayleigh_ok(size: int, unit: float, wavelength: float, xi_min: float) -> bool:
    return 2.0 * (size * unit) ** 2 / wavelength <= xi_min


def _max_far_field_size(
    total: int, unit: float, wavelength: float, xi_min: float
) -> int:
    # Floor of sqrt(wavelength * xi / (2 d^2)), nudged so the canonical
    # inequality holds with the largest possible integer even when the sqrt
    # lands on a representation boundary.
    size = int(math.floor(math.sqrt(wavelength * xi_min / (2.0 * unit**2))))
    while size >= 1 and not _rayleigh_ok(size, unit, wavelength, xi_min):
        size -= 1
    while size < total and _rayleigh_ok(size + 1, unit, wavelength, xi_min):
        size += 1
    if size < 1:
        raise NearFieldLimitError(
            f"terminal distance {xi_min} m is inside the Rayleigh range "
            f"{2.0 * unit**2 / wavelength} m of a single reflecting unit"
        )
    return min(size, total)


def first_subarray_size(cfg: ScenarioConfig, xi_min: float) -> tuple[int, int]:
    """Unit counts (cols, rows) of the first (largest) sub-array.

    Largest sizes whose apertures keep the Rayleigh distance within
    ``xi_min``, clamped at the full RIS.
    """
    if not xi_min > 0.0:
        raise NearFieldLimitError(f"xi_min must be positive, got {xi_min}")
    cols = _max_far_field_size(cfg.ris_cols, cfg.unit_width, cfg.wavelength, xi_min)
    rows = _max_far_field_size(cfg.ris_rows, cfg.unit_height, cfg.wavelength, xi_min)
    return cols, rows


def subarray_counts(
    total_cols: int, total_rows: int, first_cols: int, first_rows: int
) -> tuple[int, int]:
    """Number of sub-arrays per dimension for the given first-sub-array size."""

    def count(total, first):
        rem = total % first
        if rem != 0:
            return (total - rem) // first + 1
        return total // first

    return count(total_cols, first_cols), count(total_rows, first_rows)


def subarray_size_at(total: int, first: int, n_subarrays: int, index: int) -> int:
    """Unit count of sub-array ``index`` (1-based) along one dimension.

    Every sub-array but the last has the first one's size; the last takes
    the remainder.
    """
    if not 1 <= index <= n_subarrays:
        raise IndexError(f"sub-array index {index} out of range 1..{n_subarrays}")
    if index < n_subarrays:
        return first
    return total - (n_subarrays - 1) * first


def subarray_center(
    cfg: ScenarioConfig,
    m_index: int,
    n_index: int,
    first_cols: int,
    first_rows: int,
    m_sub: int,
    n_sub: int,
) -> tuple[np.ndarray, float, float]:
    """Center position and in-plane offsets of one sub-array (1-based indices)."""
    cols = subarray_size_at(cfg.ris_cols, first_cols, m_sub, m_index)
    rows = subarray_size_at(cfg.ris_rows, first_rows, n_sub, n_index)
    a3 = _center_offset(
        2 * (m_index - 1) * first_cols + cols - cfg.ris_cols, cfg.unit_width
    )
    a4 = _center_offset(
        2 * (n_index - 1) * first_rows + rows - cfg.ris_rows, cfg.unit_height
    )
    x_i, y_i, z_i = cfg.ris_center
    center = np.array(
        [
            x_i + a3 * math.cos(cfg.ris_rotation),
            y_i + a3 * math.sin(cfg.ris_rotation),
            z_i - a4,
        ]
    )
    return center, a3, a4


def _build(cfg: ScenarioConfig, t: float, xi_min: float, first_cols, first_rows):
    m_sub, n_sub = subarray_counts(cfg.ris_cols, cfg.ris_rows, first_cols, first_rows)
    col_sizes = tuple(
        subarray_size_at(cfg.ris_cols, first_cols, m_sub, i + 1) for i in range(m_sub)
    )
    row_sizes = tuple(
        subarray_size_at(cfg.ris_rows, first_rows, n_sub, j + 1) for j in range(n_sub)
    )
    col_coeff = np.array(
        [2 * i * first_cols + col_sizes[i] - cfg.ris_cols for i in range(m_sub)]
    )
    row_coeff = np.array(
        [2 * j * first_rows + row_sizes[j] - cfg.ris_rows for j in range(n_sub)]
    )
    a3 = 0.5 * col_coeff * cfg.unit_width
    a4 = 0.5 * row_coeff * cfg.unit_height
    x_i, y_i, z_i = cfg.ris_center
    centers = np.empty((m_sub, n_sub, 3))
    centers[..., 0] = x_i + a3[:, None] * math.cos(cfg.ris_rotation)
    centers[..., 1] = y_i + a3[:, None] * math.sin(cfg.ris_rotation)
    centers[..., 2] = z_i - a4[None, :]
    return Partition(
        time=t,
        xi_min=xi_min,
        first_cols=first_cols,
        first_rows=first_rows,
        m_sub=m_sub,
        n_sub=n_sub,
        col_sizes=col_sizes,
        row_sizes=row_sizes,
        a3=a3,
        a4=a4,
        centers=centers,
    )


def partition_at(cfg: ScenarioConfig, t: float) -> Partition:
    """Rayleigh-criterion partition for the scenario at time ``t``."""
    xi_min = min_terminal_distance(cfg, t)
    first_cols, first_rows = first_subarray_size(cfg, xi_min)
    return _build(cfg, t, xi_min, first_cols, first_rows)


def forced_partition(
    cfg: ScenarioConfig, t: float, first_cols: int, first_rows: int
) -> Partition:
    """Partition with a prescribed first-sub-array size (testing/degenerate
    models); skips the Rayleigh sizing but keeps the tiling arithmetic."""
    if not 1 <= first_cols <= cfg.ris_cols:
        raise ValueError(f"first_cols {first_cols} out of range 1..{cfg.ris_cols}")
    if not 1 <= first_rows <= cfg.ris_rows:
        raise ValueError(f"first_rows {first_rows} out of range 1..{cfg.ris_rows}")
    xi_min = min_terminal_distance(cfg, t)
    return _build(cfg, t, xi_min, first_cols, first_rows)


def unit_partition(cfg: ScenarioConfig, t: float) -> Partition:
    """Every reflecting unit is its own sub-array (spherical-model geometry)."""
    return forced_partition(cfg, t, 1, 1)


def single_partition(cfg: ScenarioConfig, t: float) -> Partition:
    """The whole RIS as one sub-array (planar-model geometry)."""
    return forced_partition(cfg, t, cfg.ris_cols, cfg.ris_rows)
