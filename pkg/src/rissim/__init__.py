"""Dynamic sub-array channel simulator for large wall-mounted RIS links.

Deterministic geometric channel models for a mmWave UAV-to-ground MIMO link
relayed by a large reconfigurable intelligent surface: an exact spherical
wavefront oracle, a planar far-field model, and the Rayleigh-distance-driven
dynamic sub-array model in between, plus the accuracy/complexity experiment
drivers behind them.
"""

from .channel import (
    ChannelSnapshot,
    ChannelTap,
    NOISELESS_SNR,
    PowerGain,
    ReceivedSignal,
    RisConfiguration,
    matched_beamformers,
    normalization_factor,
    optimal_phases,
    path_power_gain,
    planar_cir,
    random_configuration,
    received_signal,
    spherical_cir,
    subarray_cir,
    uniform_configuration,
)
from .config import default_scenario, load_config
from .errors import (
    BackIlluminationError,
    ConfigError,
    DegenerateGeometryError,
    NearFieldLimitError,
    SimulationError,
    UndefinedBaselineError,
    ZeroChannelError,
)
from .geometry import (
    DEGENERATE_TOL,
    SPEED_OF_LIGHT,
    MobilityState,
    ScenarioConfig,
    SubArrayGeometry,
    antenna_offset,
    antenna_offsets,
    min_terminal_distance,
    mobility_state,
    subarray_geometry,
    subarray_geometry_grid,
    terminal_positions,
    unit_direction,
)
from .metrics import (
    AccuracyReport,
    ComplexityReport,
    DELTA_FLOOR_DB,
    SweepPoint,
    normalized_error,
    parameter_counts,
    sweep_dimension,
    sweep_time,
)
from .partition import (
    Partition,
    first_subarray_size,
    forced_partition,
    partition_at,
    single_partition,
    subarray_center,
    subarray_counts,
    subarray_size_at,
    unit_partition,
)

__version__ = "0.1.0"
