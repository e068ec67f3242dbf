"""MIMO channel synthesis for the RIS-relayed link.

Three models share one phase pipeline:

* spherical — exact per-unit distances/angles; one delay tap per reflecting
  unit; the accuracy baseline.
* subarray — per-sub-array distances/angles plus first-order in-plane
  projections of the intra-sub-array unit offsets; one tap per sub-array.
* planar — the subarray model with the whole RIS as a single sub-array.

Every per-path complex gain combines the carrier phase of the two-hop
distance, antenna-offset phases at both ULAs, in-plane projection phases of
the unit offsets (subarray/planar only), motion phases ``k<v t, e>``, the RIS
reflection coefficient, and the common amplitude ``sqrt(omega / upsilon)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import SimulationError, ZeroChannelError
from .geometry import (
    SPEED_OF_LIGHT,
    GeometryGrid,
    ScenarioConfig,
    antenna_offsets,
    subarray_geometry_grid,
)
from .partition import Partition, single_partition, unit_partition

TAP_MERGE_TOL = 1e-12
"""Delay taps closer than this (s) are merged into one."""

NOISELESS_SNR = 1e300
"""Finite SNR sentinel reported when the noise variance is zero."""

_EQ24_CHECK_TOL = 1e-8


@dataclass(frozen=True)
class RisConfiguration:
    """Reflection state of the RIS: per-unit amplitudes and phases.

    ``amplitudes`` and ``phases`` have shape ``(ris_cols, ris_rows)``;
    amplitudes are in [0, 1] (passive surface), phases are wrapped to
    [0, 2 pi). ``mode`` records how the state was produced: for ``optimal``
    configurations ``reference_pair`` is the 1-based antenna pair the phases
    cancel for and ``partition_key`` identifies the geometry they were
    derived from; ``random`` configurations carry the seed and the ensemble
    size used when normalization factors are averaged.
    """

    amplitudes: np.ndarray
    phases: np.ndarray
    mode: str = "fixed"
    reference_pair: tuple[int, int] | None = None
    partition_key: tuple | None = None
    seed: int | None = None
    draws: int = 10000

    def __post_init__(self):
        amp = np.asarray(self.amplitudes, dtype=float)
        ph = np.mod(np.asarray(self.phases, dtype=float), 2.0 * math.pi)
        if amp.shape != ph.shape or amp.ndim != 2:
            raise ValueError("amplitude and phase grids must share a 2-D shape")
        if np.any(amp < 0.0) or np.any(amp > 1.0):
            raise ValueError("reflection amplitudes must lie in [0, 1]")
        if self.mode not in ("fixed", "optimal", "random"):
            raise ValueError(f"unknown RIS mode {self.mode!r}")
        object.__setattr__(self, "amplitudes", amp)
        object.__setattr__(self, "phases", ph)


def uniform_configuration(
    cfg: ScenarioConfig, amplitude: float = 1.0, phase: float = 0.0
) -> RisConfiguration:
    """Constant amplitude/phase across the surface."""
    shape = (cfg.ris_cols, cfg.ris_rows)
    return RisConfiguration(
        amplitudes=np.full(shape, amplitude), phases=np.full(shape, phase)
    )


def random_configuration(
    cfg: ScenarioConfig, seed: int, draws: int = 10000
) -> RisConfiguration:
    """Unit amplitudes with seeded uniform phases.

    Normalization factors for this mode are ensemble averages over ``draws``
    re-draws from the same distribution (separate seed stream).
    """
    rng = _stream(seed, 0)
    shape = (cfg.ris_cols, cfg.ris_rows)
    return RisConfiguration(
        amplitudes=np.ones(shape),
        phases=rng.uniform(0.0, 2.0 * math.pi, shape),
        mode="random",
        seed=seed,
        draws=draws,
    )


def _stream(seed: int, stream: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(stream,)))


@dataclass(frozen=True)
class ChannelTap:
    delay: float
    gain: np.ndarray  # (rx_antennas, tx_antennas)


@dataclass(frozen=True)
class ChannelSnapshot:
    """Tapped-delay-line MIMO channel at one instant.

    ``taps`` are sorted by delay; ``aggregate`` is the elementwise sum of all
    tap gains (the narrowband response). ``model`` records which wavefront
    model produced the snapshot.
    """

    time: float
    taps: tuple[ChannelTap, ...]
    model: str
    aggregate: np.ndarray


@dataclass(frozen=True)
class PowerGain:
    """End-to-end path power gain and the per-pair normalization grid."""

    omega: float
    upsilon: np.ndarray  # (rx_antennas, tx_antennas)


@dataclass(frozen=True)
class ReceivedSignal:
    y: complex
    snr: float
    noiseless: bool = False


# ---------------------------------------------------------------------------
# shared synthesis pipeline
# ---------------------------------------------------------------------------


def _reflection_grid(cfg: ScenarioConfig, ris: RisConfiguration) -> np.ndarray:
    if ris.amplitudes.shape != (cfg.ris_cols, cfg.ris_rows):
        raise ValueError(
            f"RIS grids of shape {ris.amplitudes.shape} do not match the "
            f"({cfg.ris_cols}, {cfg.ris_rows}) surface"
        )
    if not np.any(ris.amplitudes > 0.0):
        raise ZeroChannelError("all reflection amplitudes are zero")
    return ris.amplitudes * np.exp(1j * ris.phases)


def _phase_factors(cfg: ScenarioConfig, geo: GeometryGrid, t: float):
    """Per-center scalar phase, per-antenna phase matrices, and delays."""
    k = cfg.wavenumber
    s = -(k * (geo.dist_tx + geo.dist_rx))
    s = s + k * (geo.e_tx @ (cfg.tx_velocity * t))
    s = s + k * (geo.e_rx @ (cfg.rx_velocity * t))
    aphase = k * (geo.e_tx @ antenna_offsets(cfg, "tx").T)
    bphase = k * (geo.e_rx @ antenna_offsets(cfg, "rx").T)
    delays = (geo.dist_tx + geo.dist_rx) / SPEED_OF_LIGHT
    return s, aphase, bphase, delays


def _plane_kappas(geo: GeometryGrid):
    """In-plane components of the incidence+emergence direction sum."""
    kappa_u = np.sin(geo.inc_normal) * np.cos(geo.inc_azimuth) + np.sin(
        geo.out_normal
    ) * np.cos(geo.out_azimuth)
    kappa_w = np.sin(geo.inc_normal) * np.sin(geo.inc_azimuth) + np.sin(
        geo.out_normal
    ) * np.sin(geo.out_azimuth)
    return kappa_u, kappa_w


def _partition_flat_offsets(partition: Partition):
    a3 = np.repeat(partition.a3, partition.n_sub)
    a4 = np.tile(partition.a4, partition.m_sub)
    return a3, a4


def _intra_sums(
    cfg: ScenarioConfig,
    partition: Partition,
    kappa_u: np.ndarray,
    kappa_w: np.ndarray,
    refl: np.ndarray,
) -> np.ndarray:
    """Per-sub-array sums of reflection coefficients times the in-plane
    projection phases of the unit offsets."""
    if partition.is_unit:
        return refl.reshape(-1).copy()
    k = cfg.wavenumber
    out = np.empty(partition.total, dtype=complex)
    for mi in range(partition.m_sub):
        cols = partition.col_sizes[mi]
        m0 = np.arange(1, cols + 1)
        du = 0.5 * (2 * m0 - cols - 1) * cfg.unit_width
        ms = mi * partition.first_cols
        for ni in range(partition.n_sub):
            rows = partition.row_sizes[ni]
            n0 = np.arange(1, rows + 1)
            dw = -0.5 * (2 * n0 - rows - 1) * cfg.unit_height
            ns = ni * partition.first_rows
            c = mi * partition.n_sub + ni
            eu = np.exp(1j * (k * (du * kappa_u[c])))
            ew = np.exp(1j * (k * (dw * kappa_w[c])))
            block = refl[ms : ms + cols, ns : ns + rows]
            out[c] = eu @ block @ ew
    return out


def _tap_groups(delays: np.ndarray, tol: float = TAP_MERGE_TOL):
    """Stable delay ordering and group boundaries for tap merging.

    Groups are anchored at their earliest delay; a path joins the open group
    while its delay is within ``tol`` of the anchor.
    """
    order = np.argsort(delays, kind="stable")
    d = delays[order]
    bounds = [0]
    i = 0
    n = d.size
    while i < n:
        i = int(np.searchsorted(d, d[i] + tol, side="right"))
        bounds.append(i)
    return order, bounds


def _accumulate_taps(delays, order, bounds, w, aphase, bphase):
    """Raw (unnormalized) tap gains and their aggregate."""
    n_rx = bphase.shape[1]
    n_tx = aphase.shape[1]
    raw_taps = []
    aggregate = np.zeros((n_rx, n_tx), dtype=complex)
    d_sorted = delays[order]
    for lo, hi in zip(bounds[:-1], bounds[1:]):
        idx = order[lo:hi]
        a = np.exp(1j * aphase[idx])
        b = np.exp(1j * bphase[idx])
        gain = (b * w[idx][:, None]).T @ a
        raw_taps.append((float(d_sorted[lo]), gain))
        aggregate = aggregate + gain
    return raw_taps, aggregate


def _power_prefactor(cfg: ScenarioConfig) -> float:
    return (
        cfg.wavelength**2
        * cfg.unit_width
        * cfg.unit_height
        / (4.0 * math.pi) ** 3
    )


def _reference_pair(cfg: ScenarioConfig, ris: RisConfiguration) -> tuple[int, int]:
    p0, q0 = ris.reference_pair if ris.reference_pair is not None else (1, 1)
    if not (1 <= p0 <= cfg.tx_antennas and 1 <= q0 <= cfg.rx_antennas):
        raise ValueError(f"reference pair {(p0, q0)} out of range")
    return p0, q0


def _optimal_shortcut(ris: RisConfiguration, partition: Partition, p: int, q: int):
    """Closed-form normalization when the phases cancel by construction."""
    if (
        ris.mode == "optimal"
        and ris.reference_pair == (p, q)
        and ris.partition_key == partition.key()
    ):
        return float(ris.amplitudes.sum()) ** 2
    return None


def _mc_normalization(cfg, ris, partition, geo, s, aphase, bphase, weighted):
    """Seeded ensemble average of |sum chi exp(j(phase - distance phase))|^2.

    With ``weighted`` the per-unit terms additionally carry the obliquity and
    distance-product weights of the path power gain.
    """
    kappa_u, kappa_w = _plane_kappas(geo)
    a = np.exp(1j * aphase)
    b = np.exp(1j * bphase)
    es = np.exp(1j * s)
    wgt = np.sqrt(geo.cos_inc) / (geo.dist_tx * geo.dist_rx) if weighted else 1.0
    rng = _stream(ris.seed if ris.seed is not None else 0, 1)
    acc = 0.0
    shape = (cfg.ris_cols, cfg.ris_rows)
    for _ in range(ris.draws):
        refl_d = ris.amplitudes * np.exp(
            1j * rng.uniform(0.0, 2.0 * math.pi, shape)
        )
        w_d = _intra_sums(cfg, partition, kappa_u, kappa_w, refl_d) * es * wgt
        s_pq = (b * w_d[:, None]).T @ a
        acc = acc + np.abs(s_pq) ** 2
    return acc / ris.draws


def _omega_eq24(cfg, geo, counts) -> float:
    """Sub-array-grouped closed form of the power gain under optimal phases."""
    total = float(
        np.sum(np.sqrt(geo.cos_inc) * counts / (geo.dist_tx * geo.dist_rx))
    )
    return _power_prefactor(cfg) * total**2


def _synthesize(cfg, ris, partition, t, geo, w0, counts, model) -> ChannelSnapshot:
    s, aphase, bphase, delays = _phase_factors(cfg, geo, t)
    w = w0 * np.exp(1j * s)
    order, bounds = _tap_groups(delays)
    raw_taps, raw_agg = _accumulate_taps(delays, order, bounds, w, aphase, bphase)

    if ris.mode == "random":
        upsilon = _mc_normalization(
            cfg, ris, partition, geo, s, aphase, bphase, weighted=False
        )
    else:
        upsilon = np.abs(raw_agg) ** 2
        shortcut = _optimal_shortcut(ris, partition, *_reference_pair(cfg, ris))
        if shortcut is not None:
            p0, q0 = _reference_pair(cfg, ris)
            upsilon[q0 - 1, p0 - 1] = shortcut
    if np.any(upsilon == 0.0):
        raise ZeroChannelError(
            "normalization factor vanished for at least one antenna pair"
        )

    omega = _omega(cfg, ris, partition, geo, s, w, aphase, bphase, counts)
    scale = np.sqrt(omega / upsilon)
    taps = tuple(
        ChannelTap(delay=d, gain=g * scale) for d, g in raw_taps
    )
    aggregate = np.zeros_like(raw_agg)
    for tap in taps:
        aggregate = aggregate + tap.gain
    return ChannelSnapshot(time=t, taps=taps, model=model, aggregate=aggregate)


def _omega(cfg, ris, partition, geo, s, w, aphase, bphase, counts) -> float:
    pref = _power_prefactor(cfg)
    p0, q0 = _reference_pair(cfg, ris)
    if ris.mode == "random":
        grid = _mc_normalization(
            cfg, ris, partition, geo, s, aphase, bphase, weighted=True
        )
        return pref * float(grid[q0 - 1, p0 - 1])
    weights = np.sqrt(geo.cos_inc) / (geo.dist_tx * geo.dist_rx)
    vec = (
        weights
        * w
        * np.exp(1j * aphase[:, p0 - 1])
        * np.exp(1j * bphase[:, q0 - 1])
    )
    omega = pref * float(np.abs(vec.sum()) ** 2)
    if _optimal_shortcut(ris, partition, p0, q0) is not None:
        closed = _omega_eq24(cfg, geo, counts)
        if closed > 0 and abs(omega - closed) / closed > _EQ24_CHECK_TOL:
            raise SimulationError(
                "optimal-mode power gain disagrees with its sub-array-grouped "
                f"closed form ({omega!r} vs {closed!r})"
            )
    return omega


# ---------------------------------------------------------------------------
# models
# ---------------------------------------------------------------------------


def _unit_offset_arrays(cfg: ScenarioConfig):
    m = np.arange(1, cfg.ris_cols + 1)
    n = np.arange(1, cfg.ris_rows + 1)
    a3 = 0.5 * (2 * m - 1 - cfg.ris_cols) * cfg.unit_width
    a4 = 0.5 * (2 * n - 1 - cfg.ris_rows) * cfg.unit_height
    return np.repeat(a3, cfg.ris_rows), np.tile(a4, cfg.ris_cols)


def spherical_cir(
    cfg: ScenarioConfig, ris: RisConfiguration, t: float
) -> ChannelSnapshot:
    """Exact spherical-wavefront channel: per-unit geometry, one tap per
    reflecting unit (before delay merging). Accuracy baseline."""
    refl = _reflection_grid(cfg, ris)
    a3, a4 = _unit_offset_arrays(cfg)
    geo = subarray_geometry_grid(cfg, t, a3, a4)
    w0 = refl.reshape(-1).copy()
    counts = np.ones(cfg.num_units)
    provenance = unit_partition(cfg, t)
    return _synthesize(cfg, ris, provenance, t, geo, w0, counts, "spherical")


def subarray_cir(
    cfg: ScenarioConfig, ris: RisConfiguration, partition: Partition, t: float
) -> ChannelSnapshot:
    """Dynamic sub-array channel: per-sub-array geometry with first-order
    in-plane projection of the intra-sub-array unit offsets."""
    return _subarray_model(cfg, ris, partition, t, "subarray")


def _subarray_model(cfg, ris, partition, t, model):
    if partition.time != t:
        raise ValueError(
            f"partition was built for t={partition.time}, not t={t}"
        )
    if sum(partition.col_sizes) != cfg.ris_cols or sum(partition.row_sizes) != cfg.ris_rows:
        raise ValueError("partition does not tile this scenario's RIS")
    refl = _reflection_grid(cfg, ris)
    a3, a4 = _partition_flat_offsets(partition)
    geo = subarray_geometry_grid(cfg, t, a3, a4)
    kappa_u, kappa_w = _plane_kappas(geo)
    w0 = _intra_sums(cfg, partition, kappa_u, kappa_w, refl)
    counts = np.array(
        [
            cols * rows
            for cols in partition.col_sizes
            for rows in partition.row_sizes
        ],
        dtype=float,
    )
    return _synthesize(cfg, ris, partition, t, geo, w0, counts, model)


def planar_cir(
    cfg: ScenarioConfig, ris: RisConfiguration, t: float
) -> ChannelSnapshot:
    """Planar-wavefront channel: the whole RIS as a single far-field
    sub-array, single delay tap."""
    return _subarray_model(cfg, ris, single_partition(cfg, t), t, "planar")


# ---------------------------------------------------------------------------
# RIS configuration and normalization
# ---------------------------------------------------------------------------


def _theta_grid(cfg, partition, t, p0, q0) -> np.ndarray:
    """Total geometric phase of every unit's path (p0, q0), shape (M, N)."""
    a3, a4 = _partition_flat_offsets(partition)
    geo = subarray_geometry_grid(cfg, t, a3, a4)
    s, aphase, bphase, _ = _phase_factors(cfg, geo, t)
    theta_c = s + aphase[:, p0 - 1] + bphase[:, q0 - 1]
    if partition.is_unit:
        return theta_c.reshape(cfg.ris_cols, cfg.ris_rows)
    k = cfg.wavenumber
    kappa_u, kappa_w = _plane_kappas(geo)
    theta = np.empty((cfg.ris_cols, cfg.ris_rows))
    for mi in range(partition.m_sub):
        cols = partition.col_sizes[mi]
        m0 = np.arange(1, cols + 1)
        du = 0.5 * (2 * m0 - cols - 1) * cfg.unit_width
        ms = mi * partition.first_cols
        for ni in range(partition.n_sub):
            rows = partition.row_sizes[ni]
            n0 = np.arange(1, rows + 1)
            dw = -0.5 * (2 * n0 - rows - 1) * cfg.unit_height
            ns = ni * partition.first_rows
            c = mi * partition.n_sub + ni
            theta[ms : ms + cols, ns : ns + rows] = (
                theta_c[c]
                + (k * (du * kappa_u[c]))[:, None]
                + (k * (dw * kappa_w[c]))[None, :]
            )
    return theta


def optimal_phases(
    cfg: ScenarioConfig,
    partition: Partition,
    t: float,
    reference_pair: tuple[int, int] = (1, 1),
) -> RisConfiguration:
    """Distance-cancelling phase configuration at one antenna pair.

    Every unit's phase is set to the negated total geometric phase of its
    path, so all contributions to the reference pair combine coherently and
    the normalization factor there equals ``(ris_cols * ris_rows)**2``.
    """
    p0, q0 = reference_pair
    if not (1 <= p0 <= cfg.tx_antennas and 1 <= q0 <= cfg.rx_antennas):
        raise ValueError(f"reference pair {reference_pair} out of range")
    theta = _theta_grid(cfg, partition, t, p0, q0)
    return RisConfiguration(
        amplitudes=np.ones((cfg.ris_cols, cfg.ris_rows)),
        phases=np.mod(-theta, 2.0 * math.pi),
        mode="optimal",
        reference_pair=(p0, q0),
        partition_key=partition.key(),
    )


def normalization_factor(
    cfg: ScenarioConfig,
    ris: RisConfiguration,
    partition: Partition,
    t: float,
    p: int,
    q: int,
) -> float:
    """Normalization factor of antenna pair (p, q) under the given partition
    geometry (coherent-sum power of the reflection residues)."""
    if not (1 <= p <= cfg.tx_antennas and 1 <= q <= cfg.rx_antennas):
        raise ValueError(f"antenna pair {(p, q)} out of range")
    refl = _reflection_grid(cfg, ris)
    shortcut = _optimal_shortcut(ris, partition, p, q)
    if shortcut is not None:
        return shortcut
    a3, a4 = _partition_flat_offsets(partition)
    geo = subarray_geometry_grid(cfg, t, a3, a4)
    s, aphase, bphase, _ = _phase_factors(cfg, geo, t)
    if ris.mode == "random":
        grid = _mc_normalization(
            cfg, ris, partition, geo, s, aphase, bphase, weighted=False
        )
        return float(grid[q - 1, p - 1])
    kappa_u, kappa_w = _plane_kappas(geo)
    w = _intra_sums(cfg, partition, kappa_u, kappa_w, refl) * np.exp(1j * s)
    total = np.sum(
        w * np.exp(1j * aphase[:, p - 1]) * np.exp(1j * bphase[:, q - 1])
    )
    return float(np.abs(total) ** 2)


def path_power_gain(
    cfg: ScenarioConfig, ris: RisConfiguration, partition: Partition, t: float
) -> PowerGain:
    """End-to-end path power gain and the per-pair normalization grid.

    The power gain carries the aperture prefactor, the obliquity of the
    incidence on each sub-array, and the product-fading distance terms; it is
    evaluated at the configuration's reference pair. In optimal mode the
    result is cross-checked against the sub-array-grouped closed form.
    """
    refl = _reflection_grid(cfg, ris)
    a3, a4 = _partition_flat_offsets(partition)
    geo = subarray_geometry_grid(cfg, t, a3, a4)
    s, aphase, bphase, _ = _phase_factors(cfg, geo, t)
    kappa_u, kappa_w = _plane_kappas(geo)
    w0 = _intra_sums(cfg, partition, kappa_u, kappa_w, refl)
    w = w0 * np.exp(1j * s)
    counts = np.array(
        [
            cols * rows
            for cols in partition.col_sizes
            for rows in partition.row_sizes
        ],
        dtype=float,
    )
    omega = _omega(cfg, ris, partition, geo, s, w, aphase, bphase, counts)
    if ris.mode == "random":
        upsilon = _mc_normalization(
            cfg, ris, partition, geo, s, aphase, bphase, weighted=False
        )
    else:
        a = np.exp(1j * aphase)
        b = np.exp(1j * bphase)
        upsilon = np.abs((b * w[:, None]).T @ a) ** 2
        shortcut = _optimal_shortcut(ris, partition, *_reference_pair(cfg, ris))
        if shortcut is not None:
            p0, q0 = _reference_pair(cfg, ris)
            upsilon[q0 - 1, p0 - 1] = shortcut
    if np.any(ris.amplitudes > 0.0) and np.any(upsilon == 0.0):
        raise ZeroChannelError("normalization factor vanished")
    return PowerGain(omega=omega, upsilon=upsilon)


# ---------------------------------------------------------------------------
# receive processing
# ---------------------------------------------------------------------------


def matched_beamformers(snapshot: ChannelSnapshot) -> tuple[np.ndarray, np.ndarray]:
    """Unit-norm (f_tx, f_rx) maximizing |f_rx^T H f_tx| — the dominant
    singular pair of the aggregate channel.

    Ties between singular values resolve to the first pair of the
    decomposition's descending order.
    """
    h = snapshot.aggregate
    if not np.any(h):
        raise ZeroChannelError("aggregate channel matrix is zero")
    u, _, vh = np.linalg.svd(h)
    f_rx = u[:, 0].conj()
    f_tx = vh[0, :].conj()
    return f_tx, f_rx


def received_signal(
    snapshot: ChannelSnapshot,
    tx_power: float,
    noise_variance: float,
    beamformers: tuple[np.ndarray, np.ndarray],
    seed: int | None = None,
) -> ReceivedSignal:
    """Narrowband received sample ``y = f_rx^T H f_tx * s + n`` and its SNR.

    The symbol is deterministic with power ``tx_power``; the noise is a
    seeded zero-mean complex Gaussian draw. Zero noise variance returns the
    ``NOISELESS_SNR`` sentinel with the ``noiseless`` flag set.
    """
    f_tx, f_rx = (np.asarray(v, dtype=complex) for v in beamformers)
    h = snapshot.aggregate
    if f_tx.shape != (h.shape[1],) or f_rx.shape != (h.shape[0],):
        raise ValueError(
            f"beamformer shapes {f_tx.shape}/{f_rx.shape} do not match the "
            f"{h.shape} channel"
        )
    for name, v in (("f_tx", f_tx), ("f_rx", f_rx)):
        if abs(np.linalg.norm(v) - 1.0) > 1e-9:
            raise ValueError(f"{name} must have unit norm")
    if tx_power < 0.0 or noise_variance < 0.0:
        raise ValueError("powers must be non-negative")
    gain = f_rx @ h @ f_tx
    y = gain * math.sqrt(tx_power)
    if noise_variance == 0.0:
        return ReceivedSignal(y=complex(y), snr=NOISELESS_SNR, noiseless=True)
    rng = np.random.default_rng(seed)
    sigma = math.sqrt(noise_variance / 2.0)
    y = y + complex(rng.normal(0.0, sigma), rng.normal(0.0, sigma))
    snr = float(abs(gain) ** 2 * tx_power / noise_variance)
    return ReceivedSignal(y=complex(y), snr=snr, noiseless=False)
