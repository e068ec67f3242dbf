"""Accuracy and complexity evaluation, plus the sweep drivers.

The accuracy metric compares a model's aggregate (delay-summed) complex gain
per antenna pair against the spherical-wavefront oracle:

    delta = 10 log10( sum_pq |h_pq - h_pq_oracle| / |h_pq_oracle| )

Sweeps follow a model-consistent protocol: the RIS phases are configured
optimally *by the model under test* (the operational situation — the
controller only has that model), and the oracle is evaluated under the same
physical configuration. The planar model therefore overestimates coherent
combining in the near field, which is exactly the regime the sub-array
partition repairs.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .channel import (
    ChannelSnapshot,
    RisConfiguration,
    optimal_phases,
    planar_cir,
    spherical_cir,
    subarray_cir,
)
from .errors import UndefinedBaselineError
from .geometry import ScenarioConfig
from .partition import Partition, partition_at, single_partition

DELTA_FLOOR_DB = -300.0
"""Sentinel reported when the error is exactly zero (keeps CSV numeric)."""

MODELS = ("planar", "subarray")


@dataclass(frozen=True)
class AccuracyReport:
    time: float
    delta_db: float
    model: str


@dataclass(frozen=True)
class ComplexityReport:
    """Distance/angle parameter counts per model and the relative saving."""

    spherical_params: int
    planar_params: int
    subarray_params: int
    reduction_fraction: float


@dataclass(frozen=True)
class SweepPoint:
    """One sweep-grid entry: partition summary, per-model accuracy,
    parameter counts, and (optionally) measured oracle wall time."""

    sweep_var: float
    partition: Partition
    accuracy: dict
    complexity: ComplexityReport
    oracle_runtime: float


def normalized_error(test: ChannelSnapshot, oracle: ChannelSnapshot) -> float:
    """Normalized absolute error (dB) of a snapshot against the oracle.

    Computed on aggregates; identical snapshots report the -300 dB floor.
    """
    h_ref = oracle.aggregate
    h = test.aggregate
    if h.shape != h_ref.shape:
        raise ValueError(f"shape mismatch {h.shape} vs {h_ref.shape}")
    mag = np.abs(h_ref)
    if np.any(mag == 0.0):
        raise UndefinedBaselineError("oracle aggregate has a zero entry")
    total = float(np.sum(np.abs(h - h_ref) / mag))
    if total == 0.0:
        return DELTA_FLOOR_DB
    return max(10.0 * np.log10(total), DELTA_FLOOR_DB)


def parameter_counts(
    cols: int, rows: int, m_sub: int, n_sub: int
) -> ComplexityReport:
    """Distance/angle parameter counts: 7MN (spherical), 2MN + 8 (planar),
    2MN + 8 * m_sub * n_sub (sub-array)."""
    if min(cols, rows, m_sub, n_sub) < 1:
        raise ValueError("counts must be positive")
    mn = cols * rows
    spherical = 7 * mn
    planar = 2 * mn + 8
    subarray = 2 * mn + 8 * m_sub * n_sub
    return ComplexityReport(
        spherical_params=spherical,
        planar_params=planar,
        subarray_params=subarray,
        reduction_fraction=1.0 - subarray / spherical,
    )


def _worker_count() -> int:
    env = os.environ.get("SIM_THREADS", "")
    try:
        return max(1, int(env))
    except ValueError:
        return 1


def _map_ordered(fn, items):
    """Apply ``fn`` preserving input order; SIM_THREADS>1 enables a thread
    pool (results are written by index, independent of completion order)."""
    workers = _worker_count()
    if workers <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def model_configuration(
    cfg: ScenarioConfig,
    partition: Partition,
    t: float,
    model: str,
    reference_pair: tuple[int, int] = (1, 1),
) -> RisConfiguration:
    """Optimal RIS phases as the given model would configure them."""
    if model == "subarray":
        return optimal_phases(cfg, partition, t, reference_pair)
    if model == "planar":
        return optimal_phases(cfg, single_partition(cfg, t), t, reference_pair)
    raise ValueError(f"unknown model {model!r}")


def _evaluate_models(cfg, partition, t, models, reference_pair, measure_runtime):
    accuracy = {}
    oracle_runtime = float("nan")
    runtime_acc = 0.0
    for model in models:
        if model not in MODELS:
            raise ValueError(f"unknown model {model!r}")
        ris = model_configuration(cfg, partition, t, model, reference_pair)
        if model == "subarray":
            test = subarray_cir(cfg, ris, partition, t)
        else:
            test = planar_cir(cfg, ris, t)
        start = time.perf_counter()
        oracle = spherical_cir(cfg, ris, t)
        runtime_acc += time.perf_counter() - start
        accuracy[model] = normalized_error(test, oracle)
    if measure_runtime and models:
        oracle_runtime = runtime_acc
    return accuracy, oracle_runtime


def sweep_time(
    cfg: ScenarioConfig,
    t_grid,
    models=MODELS,
    reference_pair: tuple[int, int] = (1, 1),
    measure_runtime: bool = False,
) -> list[SweepPoint]:
    """Partition, accuracy, and complexity along a time grid.

    ``models`` may be empty to sweep the partition/complexity only (no
    spherical oracle is computed then).
    """
    t_grid = [float(t) for t in t_grid]
    if not t_grid:
        raise ValueError("time grid is empty")
    if any(b <= a for a, b in zip(t_grid, t_grid[1:])):
        raise ValueError("time grid must be strictly increasing")

    def point(t):
        part = partition_at(cfg, t)
        accuracy, runtime = _evaluate_models(
            cfg, part, t, models, reference_pair, measure_runtime
        )
        comp = parameter_counts(cfg.ris_cols, cfg.ris_rows, part.m_sub, part.n_sub)
        return SweepPoint(
            sweep_var=t,
            partition=part,
            accuracy=accuracy,
            complexity=comp,
            oracle_runtime=runtime,
        )

    return _map_ordered(point, t_grid)


def dimension_scenario(
    cfg_template: ScenarioConfig,
    dimension: float,
    tx_position=(100.0, -50.0, 50.0),
    rx_position=(250.0, 10.0, 0.0),
) -> ScenarioConfig:
    """Square-RIS variant of a scenario with static terminals.

    The RIS side length is ``dimension`` in both directions (unit counts
    rounded); the terminals are parked at the given positions with zero
    velocity so the comparison isolates wavefront curvature.
    """
    import dataclasses

    cols = max(1, round(dimension / cfg_template.unit_width))
    rows = max(1, round(dimension / cfg_template.unit_height))
    if rx_position[2] != 0.0:
        raise ValueError("the MR stays in the ground plane")
    return dataclasses.replace(
        cfg_template,
        ris_cols=cols,
        ris_rows=rows,
        uav_init_x=float(tx_position[0]),
        uav_init_y=float(tx_position[1]),
        uav_height=float(tx_position[2]),
        mr_init_x=float(rx_position[0]),
        mr_init_y=float(rx_position[1]),
        tx_speed=0.0,
        rx_speed=0.0,
    )


def sweep_dimension(
    cfg_template: ScenarioConfig,
    dimensions,
    tx_position=(100.0, -50.0, 50.0),
    rx_position=(250.0, 10.0, 0.0),
    models=MODELS,
    reference_pair: tuple[int, int] = (1, 1),
    measure_runtime: bool = False,
) -> list[SweepPoint]:
    """Accuracy of both models versus RIS side length at fixed terminals."""
    dims = [float(v) for v in dimensions]
    if not dims:
        raise ValueError("dimension list is empty")
    if any(v <= 0 for v in dims):
        raise ValueError("dimensions must be positive")

    def point(dim):
        cfg = dimension_scenario(cfg_template, dim, tx_position, rx_position)
        t = 0.0
        part = partition_at(cfg, t)
        accuracy, runtime = _evaluate_models(
            cfg, part, t, models, reference_pair, measure_runtime
        )
        comp = parameter_counts(cfg.ris_cols, cfg.ris_rows, part.m_sub, part.n_sub)
        return SweepPoint(
            sweep_var=dim,
            partition=part,
            accuracy=accuracy,
            complexity=comp,
            oracle_runtime=runtime,
        )

    return _map_ordered(point, dims)
