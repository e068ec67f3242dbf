"""Command-line front end: experiment subcommands with CSV output.

Subcommands sweep the default or a user-supplied scenario and write one CSV
per run (atomically: write-then-rename, so failures leave no partial file).
All output is deterministic for a fixed seed and ``SIM_THREADS``; wall-clock
columns are ``nan`` unless ``--measure-wall`` is given, since measured times
cannot be byte-reproducible.

Exit codes: 0 success, 1 runtime/model error, 2 usage or config error.
"""

from __future__ import annotations

import argparse
import os
import sys
import tempfile
import time
from dataclasses import dataclass

import numpy as np

from . import metrics
from .channel import spherical_cir, subarray_cir
from .config import load_config
from .errors import ConfigError, SimulationError
from .metrics import model_configuration, parameter_counts, sweep_dimension, sweep_time
from .partition import partition_at

DEFAULT_T_START = 0.0
DEFAULT_T_END = 15.0
DEFAULT_T_STEPS_FAST = 31
DEFAULT_T_STEPS_ORACLE = 21
DEFAULT_DIMS = "0.25,0.5,0.6,0.75,1.0,1.5,2.0"

OUTPUT_NAMES = {
    "partition-evolution": "partition_evolution.csv",
    "accuracy-time": "accuracy_time.csv",
    "accuracy-dimension": "accuracy_dimension.csv",
    "complexity": "complexity.csv",
}


@dataclass(frozen=True)
class RunManifest:
    """Everything one run depends on; fixed manifest + fixed SIM_THREADS
    implies byte-identical CSV output."""

    command: str
    config_path: str | None
    output_dir: str
    seed: int
    sample_count: int
    t_start: float
    t_end: float
    t_steps: int
    dims: tuple[float, ...] = ()
    models: tuple[str, ...] = metrics.MODELS
    measure_wall: bool = False


def _fmt(value) -> str:
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return format(float(value), ".17g")


def write_csv(path: str, header, rows) -> None:
    """Atomic CSV write: temp file in the target directory, then rename."""
    directory = os.path.dirname(path) or "."
    os.makedirs(directory, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            fh.write(",".join(header) + "\n")
            for row in rows:
                fh.write(",".join(_fmt(v) for v in row) + "\n")
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _time_grid(manifest: RunManifest):
    if manifest.t_steps < 1:
        raise ConfigError("t-steps must be >= 1", field="t_steps")
    if manifest.t_steps > 1 and manifest.t_end <= manifest.t_start:
        raise ConfigError("t-end must exceed t-start", field="t_end")
    return np.linspace(manifest.t_start, manifest.t_end, manifest.t_steps)


def cmd_partition_evolution(manifest: RunManifest) -> str:
    cfg = load_config(manifest.config_path)
    points = sweep_time(cfg, _time_grid(manifest), models=())
    rows = [
        (
            p.sweep_var,
            p.partition.xi_min,
            p.partition.m_sub,
            p.partition.n_sub,
            p.partition.total,
            p.partition.first_cols,
            p.partition.first_rows,
        )
        for p in points
    ]
    path = os.path.join(manifest.output_dir, OUTPUT_NAMES["partition-evolution"])
    write_csv(
        path,
        ("t_s", "xi_min_m", "m_sub", "n_sub", "total_subarrays", "first_cols", "first_rows"),
        rows,
    )
    return path


def _accuracy_rows(points, models):
    rows = []
    for p in points:
        rows.append(
            (
                p.sweep_var,
                p.accuracy.get("planar", float("nan")),
                p.accuracy.get("subarray", float("nan")),
                p.oracle_runtime,
            )
        )
    return rows


def cmd_accuracy_time(manifest: RunManifest) -> str:
    cfg = load_config(manifest.config_path)
    points = sweep_time(
        cfg,
        _time_grid(manifest),
        models=manifest.models,
        measure_runtime=manifest.measure_wall,
    )
    path = os.path.join(manifest.output_dir, OUTPUT_NAMES["accuracy-time"])
    write_csv(
        path,
        ("sweep_var", "delta_planar_db", "delta_subarray_db", "oracle_runtime_s"),
        _accuracy_rows(points, manifest.models),
    )
    return path


def cmd_accuracy_dimension(manifest: RunManifest) -> str:
    cfg = load_config(manifest.config_path)
    if not manifest.dims:
        raise ConfigError("dimension list is empty", field="dims")
    points = sweep_dimension(
        cfg,
        manifest.dims,
        models=manifest.models,
        measure_runtime=manifest.measure_wall,
    )
    path = os.path.join(manifest.output_dir, OUTPUT_NAMES["accuracy-dimension"])
    write_csv(
        path,
        ("sweep_var", "delta_planar_db", "delta_subarray_db", "oracle_runtime_s"),
        _accuracy_rows(points, manifest.models),
    )
    return path


def cmd_complexity(manifest: RunManifest) -> str:
    cfg = load_config(manifest.config_path)
    rows = []
    for t in _time_grid(manifest):
        t = float(t)
        part = partition_at(cfg, t)
        comp = parameter_counts(cfg.ris_cols, cfg.ris_rows, part.m_sub, part.n_sub)
        wall_sph = wall_sub = float("nan")
        if manifest.measure_wall:
            ris = model_configuration(cfg, part, t, "subarray")
            start = time.perf_counter()
            spherical_cir(cfg, ris, t)
            wall_sph = time.perf_counter() - start
            start = time.perf_counter()
            subarray_cir(cfg, ris, part, t)
            wall_sub = time.perf_counter() - start
        rows.append(
            (
                t,
                comp.spherical_params,
                comp.planar_params,
                comp.subarray_params,
                comp.reduction_fraction,
                wall_sph,
                wall_sub,
            )
        )
    path = os.path.join(manifest.output_dir, OUTPUT_NAMES["complexity"])
    write_csv(
        path,
        (
            "t_s",
            "params_spherical",
            "params_planar",
            "params_subarray",
            "reduction_fraction",
            "wall_spherical_s",
            "wall_subarray_s",
        ),
        rows,
    )
    return path


COMMANDS = {
    "partition-evolution": cmd_partition_evolution,
    "accuracy-time": cmd_accuracy_time,
    "accuracy-dimension": cmd_accuracy_dimension,
    "complexity": cmd_complexity,
}


def _parse_models(text: str) -> tuple[str, ...]:
    models = tuple(m.strip() for m in text.split(",") if m.strip())
    for m in models:
        if m not in metrics.MODELS:
            raise argparse.ArgumentTypeError(f"unknown model {m!r}")
    return models


def _parse_dims(text: str) -> tuple[float, ...]:
    try:
        dims = tuple(float(v) for v in text.split(",") if v.strip())
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    return dims


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rissim",
        description="Dynamic sub-array RIS channel simulator (CSV experiments)",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, oracle in (
        ("partition-evolution", False),
        ("accuracy-time", True),
        ("accuracy-dimension", True),
        ("complexity", False),
    ):
        p = sub.add_parser(name, help=f"write {OUTPUT_NAMES[name]}")
        p.add_argument("--config", default=None, help="scenario config file")
        p.add_argument("--out", default=".", help="output directory")
        p.add_argument("--seed", type=int, default=0, help="64-bit run seed")
        p.add_argument(
            "--sample-count",
            type=int,
            default=10000,
            help="ensemble size for random-mode normalization",
        )
        p.add_argument("--t-start", type=float, default=DEFAULT_T_START)
        p.add_argument("--t-end", type=float, default=DEFAULT_T_END)
        p.add_argument(
            "--t-steps",
            type=int,
            default=DEFAULT_T_STEPS_ORACLE if oracle else DEFAULT_T_STEPS_FAST,
        )
        p.add_argument("--models", type=_parse_models, default=metrics.MODELS)
        p.add_argument("--dims", type=_parse_dims, default=_parse_dims(DEFAULT_DIMS))
        p.add_argument(
            "--measure-wall",
            action="store_true",
            help="populate wall-clock columns (breaks byte-reproducibility)",
        )
    return parser


def manifest_from_args(args) -> RunManifest:
    return RunManifest(
        command=args.command,
        config_path=args.config,
        output_dir=args.out,
        seed=args.seed,
        sample_count=args.sample_count,
        t_start=args.t_start,
        t_end=args.t_end,
        t_steps=args.t_steps,
        dims=tuple(args.dims),
        models=tuple(args.models),
        measure_wall=args.measure_wall,
    )


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 2
    manifest = manifest_from_args(args)
    try:
        path = COMMANDS[manifest.command](manifest)
    except ConfigError as exc:
        print(f"rissim: config error: {exc}", file=sys.stderr)
        return 2
    except SimulationError as exc:
        print(f"rissim: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"rissim: {exc}", file=sys.stderr)
        return 1
    print(path)
    return 0


if __name__ == "__main__":
    sys.exit(main())
