"""Scenario geometry: frames, terminal motion, and per-center distances/angles.

Right-handed coordinates with the ground plane at z = 0. At t = 0 the UAV
array center sits at ``(uav_init_x, uav_init_y, uav_height)`` (paper frame:
``(0, 0, H0)``), the mobile receiver (MR) at ``(mr_init_x, mr_init_y, 0)``,
and the RIS center at ``ris_center`` on a building facade. All angles are
radians, lengths meters, speeds m/s.

The RIS plane contains the in-plane column axis
``u = [cos(ris_rotation), sin(ris_rotation), 0]`` and the vertical; its
outward (reflecting-side) normal is ``[sin(ris_rotation), -cos(ris_rotation),
0]``, which faces the terminals in the default scenario. Rows are counted
downward from the top of the surface.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import BackIlluminationError, ConfigError, DegenerateGeometryError

SPEED_OF_LIGHT = 3.0e8
"""Propagation speed used for path delays (m/s)."""

DEGENERATE_TOL = 1e-12
"""Lengths (m) below this are treated as geometric degeneracies."""


@dataclass(frozen=True)
class ScenarioConfig:
    """Full static description of geometry, arrays, RIS, motion and carrier.

    Parameters
    ----------
    wavelength : float
        Carrier wavelength (m).
    uav_height : float
        UAV array-center height at t = 0 (m).
    ris_center : tuple of float
        RIS center ``(x, y, z)`` (m); ``z > 0``.
    mr_init_x : float
        MR x position at t = 0 (m).
    ris_rotation : float
        Horizontal rotation of the RIS plane (rad).
    ris_cols, ris_rows : int
        Reflecting-unit counts in the column / row directions.
    unit_width, unit_height : float
        Unit size (m); must be sub-wavelength, in ``(0, wavelength / 2]``.
    tx_antennas, rx_antennas : int
        ULA sizes at UAV / MR.
    tx_spacing, rx_spacing : float
        ULA element spacings (m).
    tx_azimuth, tx_elevation, rx_azimuth, rx_elevation : float
        ULA orientation angles (rad).
    tx_speed, tx_heading, tx_climb : float
        UAV speed, motion azimuth and motion elevation.
    rx_speed, rx_heading : float
        MR speed and motion azimuth (MR stays in the ground plane).
    uav_init_x, uav_init_y, mr_init_y : float
        Optional initial offsets; zero reproduces the canonical frame.
    """

    wavelength: float
    uav_height: float
    ris_center: tuple[float, float, float]
    mr_init_x: float
    ris_rotation: float
    ris_cols: int
    ris_rows: int
    unit_width: float
    unit_height: float
    tx_antennas: int
    rx_antennas: int
    tx_spacing: float
    rx_spacing: float
    tx_azimuth: float = 0.0
    tx_elevation: float = 0.0
    rx_azimuth: float = 0.0
    rx_elevation: float = 0.0
    tx_speed: float = 0.0
    tx_heading: float = 0.0
    tx_climb: float = 0.0
    rx_speed: float = 0.0
    rx_heading: float = 0.0
    uav_init_x: float = 0.0
    uav_init_y: float = 0.0
    mr_init_y: float = 0.0

    def __post_init__(self):
        if not self.wavelength > 0.0:
            raise ConfigError("wavelength must be positive", field="wavelength")
        for name in ("unit_width", "unit_height"):
            d = getattr(self, name)
            if not 0.0 < d <= self.wavelength / 2.0:
                raise ConfigError(
                    f"unit size {d!r} outside the sub-wavelength range "
                    f"(0, wavelength/2] = (0, {self.wavelength / 2.0!r}]",
                    field=name,
                )
        for name in ("ris_cols", "ris_rows", "tx_antennas", "rx_antennas"):
            v = getattr(self, name)
            if not (isinstance(v, (int, np.integer)) and v >= 1):
                raise ConfigError("must be an integer >= 1", field=name)
        for name in ("tx_spacing", "rx_spacing"):
            if not getattr(self, name) > 0.0:
                raise ConfigError("must be positive", field=name)
        for name in ("tx_speed", "rx_speed"):
            if getattr(self, name) < 0.0:
                raise ConfigError("speeds must be non-negative", field=name)
        if not self.ris_center[2] > 0.0:
            raise ConfigError(
                "RIS must be mounted above the ground plane (z > 0)",
                field="ris_center",
            )

    @property
    def wavenumber(self) -> float:
        """2 pi / wavelength (rad/m)."""
        return 2.0 * math.pi / self.wavelength

    @property
    def num_units(self) -> int:
        return self.ris_cols * self.ris_rows

    @property
    def tx_init(self) -> np.ndarray:
        return np.array([self.uav_init_x, self.uav_init_y, self.uav_height])

    @property
    def rx_init(self) -> np.ndarray:
        return np.array([self.mr_init_x, self.mr_init_y, 0.0])

    @property
    def tx_velocity(self) -> np.ndarray:
        """UAV velocity vector v_T [cos(eta)cos(gamma), cos(eta)sin(gamma), sin(eta)]."""
        return self.tx_speed * np.array(
            [
                math.cos(self.tx_climb) * math.cos(self.tx_heading),
                math.cos(self.tx_climb) * math.sin(self.tx_heading),
                math.sin(self.tx_climb),
            ]
        )

    @property
    def rx_velocity(self) -> np.ndarray:
        """MR velocity vector v_R [cos(gamma), sin(gamma), 0]."""
        return self.rx_speed * np.array(
            [math.cos(self.rx_heading), math.sin(self.rx_heading), 0.0]
        )

    @property
    def ris_col_axis(self) -> np.ndarray:
        """In-plane column axis of the RIS."""
        return np.array(
            [math.cos(self.ris_rotation), math.sin(self.ris_rotation), 0.0]
        )

    @property
    def ris_normal(self) -> np.ndarray:
        """Outward normal of the reflecting face."""
        return np.array(
            [math.sin(self.ris_rotation), -math.cos(self.ris_rotation), 0.0]
        )


@dataclass(frozen=True)
class MobilityState:
    """Terminal displacements at one time instant."""

    time: float
    tx_displacement: np.ndarray
    rx_displacement: np.ndarray


def mobility_state(cfg: ScenarioConfig, t: float) -> MobilityState:
    """Displacements v*t of both terminals at time ``t``."""
    return MobilityState(
        time=t,
        tx_displacement=cfg.tx_velocity * t,
        rx_displacement=cfg.rx_velocity * t,
    )


def _ula_axis(cfg: ScenarioConfig, side: str) -> np.ndarray:
    if side == "tx":
        psi, phi = cfg.tx_azimuth, cfg.tx_elevation
    elif side == "rx":
        psi, phi = cfg.rx_azimuth, cfg.rx_elevation
    else:
        raise ValueError(f"side must be 'tx' or 'rx', got {side!r}")
    return np.array(
        [
            math.cos(phi) * math.cos(psi),
            math.cos(phi) * math.sin(psi),
            math.sin(phi),
        ]
    )


def antenna_offset(cfg: ScenarioConfig, side: str, index: int) -> np.ndarray:
    """Offset of antenna ``index`` (1-based) from its ULA center.

    Returns ``(M - 2*index + 1)/2 * spacing`` along the array axis, so the
    elements straddle the center symmetrically.
    """
    count = cfg.tx_antennas if side == "tx" else cfg.rx_antennas
    if not 1 <= index <= count:
        raise IndexError(f"antenna index {index} out of range 1..{count}")
    spacing = cfg.tx_spacing if side == "tx" else cfg.rx_spacing
    coeff = (count - 2 * index + 1) / 2.0
    return coeff * spacing * _ula_axis(cfg, side)


def antenna_offsets(cfg: ScenarioConfig, side: str) -> np.ndarray:
    """All antenna offsets of one ULA, shape (count, 3)."""
    count = cfg.tx_antennas if side == "tx" else cfg.rx_antennas
    spacing = cfg.tx_spacing if side == "tx" else cfg.rx_spacing
    idx = np.arange(1, count + 1)
    coeff = (count - 2 * idx + 1) / 2.0
    return (coeff * spacing)[:, None] * _ula_axis(cfg, side)[None, :]


def terminal_positions(cfg: ScenarioConfig, t: float) -> tuple[np.ndarray, np.ndarray]:
    """Array-center positions of the UAV and the MR at time ``t``."""
    return cfg.tx_init + cfg.tx_velocity * t, cfg.rx_init + cfg.rx_velocity * t


def min_terminal_distance(cfg: ScenarioConfig, t: float) -> float:
    """Minimum distance from either terminal to the RIS center at time ``t``."""
    tx, rx = terminal_positions(cfg, t)
    center = np.asarray(cfg.ris_center, dtype=float)
    dist_tx = float(np.linalg.norm(center - tx))
    dist_rx = float(np.linalg.norm(center - rx))
    if min(dist_tx, dist_rx) < DEGENERATE_TOL:
        raise DegenerateGeometryError(
            f"terminal coincides with the RIS center at t={t}"
        )
    return min(dist_tx, dist_rx)


def unit_direction(azimuth, elevation) -> np.ndarray:
    """Unit vector [cos(b)cos(a), cos(b)sin(a), sin(b)].

    Accepts scalars or equally shaped arrays; arrays are stacked on the last
    axis.
    """
    azimuth = np.asarray(azimuth, dtype=float)
    elevation = np.asarray(elevation, dtype=float)
    cb = np.cos(elevation)
    return np.stack(
        [cb * np.cos(azimuth), cb * np.sin(azimuth), np.sin(elevation)], axis=-1
    )


@dataclass(frozen=True)
class SubArrayGeometry:
    """Distances and angles of one sub-array center at one instant.

    ``incidence`` / ``emergence`` hold ``(azimuth, normal_angle)`` of the
    in-plane direction toward the UAV / MR in the RIS local frame.
    """

    dist_tx: float
    dist_rx: float
    aaod: float
    eaod: float
    aaoa: float
    eaoa: float
    incidence: tuple[float, float]
    emergence: tuple[float, float]
    center: np.ndarray


@dataclass(frozen=True)
class GeometryGrid:
    """Vectorized :class:`SubArrayGeometry` over K centers (struct of arrays)."""

    centers: np.ndarray  # (K, 3)
    dist_tx: np.ndarray
    dist_rx: np.ndarray
    aaod: np.ndarray
    eaod: np.ndarray
    aaoa: np.ndarray
    eaoa: np.ndarray
    e_tx: np.ndarray  # (K, 3) unit vectors UAV -> center
    e_rx: np.ndarray  # (K, 3) unit vectors MR -> center
    inc_azimuth: np.ndarray
    inc_normal: np.ndarray
    out_azimuth: np.ndarray
    out_normal: np.ndarray
    cos_inc: np.ndarray
    cos_out: np.ndarray


def _angles_to(center_xyz, terminal, what):
    """Distances plus (azimuth, elevation) from ``terminal`` to each center.

    Elevation is arcsin of the height ratio; azimuth is arccos of the x
    ratio over the horizontal distance, with the sign of the y component
    selecting the half-plane (so the direction vector round-trips).
    """
    dx = center_xyz[:, 0] - terminal[0]
    dy = center_xyz[:, 1] - terminal[1]
    dz = center_xyz[:, 2] - terminal[2]
    dist = np.sqrt(dx**2 + dy**2 + dz**2)
    if np.any(dist < DEGENERATE_TOL):
        raise DegenerateGeometryError(f"{what}: terminal coincides with a center")
    elevation = np.arcsin(np.clip(dz / dist, -1.0, 1.0))
    horiz = np.sqrt(np.maximum(dist**2 - dz**2, 0.0))
    if np.any(horiz < DEGENERATE_TOL):
        raise DegenerateGeometryError(
            f"{what}: terminal on the vertical axis through a center; "
            "azimuth undefined"
        )
    azimuth = np.arccos(np.clip(dx / horiz, -1.0, 1.0))
    azimuth = np.where(dy < 0.0, -azimuth, azimuth)
    return dist, azimuth, elevation


def _plane_angles(cfg, e_terminal, what):
    """In-plane (azimuth, normal-angle) of the direction toward a terminal.

    ``e_terminal`` points terminal -> center, so the direction toward the
    terminal is its negation, expressed in the RIS local frame (column axis,
    outward normal, vertical). Both terminals must be on the reflecting side.
    """
    g = -e_terminal
    g_u = g @ cfg.ris_col_axis
    g_n = g @ cfg.ris_normal
    g_w = g[:, 2]
    if np.any(g_n <= 0.0):
        raise BackIlluminationError(
            f"{what}: terminal on or behind the RIS plane (cos <= 0)"
        )
    normal_angle = np.arccos(np.clip(g_n, -1.0, 1.0))
    azimuth = np.arctan2(g_w, g_u)
    return azimuth, normal_angle, g_n


def subarray_geometry_grid(
    cfg: ScenarioConfig, t: float, a3: np.ndarray, a4: np.ndarray
) -> GeometryGrid:
    """Geometry of K sub-array centers given their in-plane offsets.

    ``a3`` is the signed offset along the column axis and ``a4`` the signed
    downward offset, both from the RIS center (m).
    """
    a3 = np.asarray(a3, dtype=float)
    a4 = np.asarray(a4, dtype=float)
    x_i, y_i, z_i = cfg.ris_center
    centers = np.stack(
        [
            x_i + a3 * math.cos(cfg.ris_rotation),
            y_i + a3 * math.sin(cfg.ris_rotation),
            z_i - a4,
        ],
        axis=-1,
    )
    tx, rx = terminal_positions(cfg, t)
    dist_tx, aaod, eaod = _angles_to(centers, tx, "departure")
    dist_rx, aaoa, eaoa = _angles_to(centers, rx, "arrival")
    e_tx = unit_direction(aaod, eaod)
    e_rx = unit_direction(aaoa, eaoa)
    inc_az, inc_no, cos_inc = _plane_angles(cfg, e_tx, "incidence")
    out_az, out_no, cos_out = _plane_angles(cfg, e_rx, "emergence")
    return GeometryGrid(
        centers=centers,
        dist_tx=dist_tx,
        dist_rx=dist_rx,
        aaod=aaod,
        eaod=eaod,
        aaoa=aaoa,
        eaoa=eaoa,
        e_tx=e_tx,
        e_rx=e_rx,
        inc_azimuth=inc_az,
        inc_normal=inc_no,
        out_azimuth=out_az,
        out_normal=out_no,
        cos_inc=cos_inc,
        cos_out=cos_out,
    )


def subarray_geometry(
    cfg: ScenarioConfig, t: float, center: np.ndarray, a3: float, a4: float
) -> SubArrayGeometry:
    """Scalar convenience wrapper around :func:`subarray_geometry_grid`."""
    grid = subarray_geometry_grid(cfg, t, np.array([a3]), np.array([a4]))
    return SubArrayGeometry(
        dist_tx=float(grid.dist_tx[0]),
        dist_rx=float(grid.dist_rx[0]),
        aaod=float(grid.aaod[0]),
        eaod=float(grid.eaod[0]),
        aaoa=float(grid.aaoa[0]),
        eaoa=float(grid.eaoa[0]),
        incidence=(float(grid.inc_azimuth[0]), float(grid.inc_normal[0])),
        emergence=(float(grid.out_azimuth[0]), float(grid.out_normal[0])),
        center=grid.centers[0],
    )
