"""Exception types raised by the simulator.

Scenario bugs are supposed to surface loudly: geometric degeneracies raise
typed errors instead of propagating NaNs into channel matrices.
"""


class SimulationError(Exception):
    """Base class for all simulator errors."""


class ConfigError(SimulationError):
    """Invalid scenario configuration (schema or invariant violation).

    ``field`` names the offending key, ``line`` the source line in a config
    file when the error originates from parsing.
    """

    def __init__(self, message, field=None, line=None):
        self.field = field
        self.line = line
        prefix = ""
        if field is not None:
            prefix += f"{field}: "
        if line is not None:
            prefix = f"line {line}: " + prefix
        super().__init__(prefix + message)


class DegenerateGeometryError(SimulationError):
    """A terminal coincides with a reference point or sits on a vertical
    axis where an azimuth angle is undefined."""


class NearFieldLimitError(SimulationError):
    """Terminal is closer than the Rayleigh distance of a single reflecting
    unit; the partition scheme's premise is broken."""


class BackIlluminationError(SimulationError):
    """A terminal is on or behind the RIS plane (non-positive incidence or
    emergence cosine)."""


class ZeroChannelError(SimulationError):
    """Channel is identically zero (all amplitudes off, or a zero matrix
    where a non-zero one is required)."""


class UndefinedBaselineError(SimulationError):
    """The spherical-oracle aggregate has a zero entry, so the normalized
    error metric is undefined."""
