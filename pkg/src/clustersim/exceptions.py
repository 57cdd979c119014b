"""Custom exceptions for clustersim."""

from typing import List, Optional


class ClusterSimError(Exception):
    """Base exception for all clustersim errors."""

    pass


class ConfigurationError(ClusterSimError):
    """Raised when an experiment or settings value is invalid."""

    def __init__(self, message: str, keys: Optional[List[str]] = None):
        super().__init__(message)
        self.keys = keys or []


class EnergyModelError(ClusterSimError, ValueError):
    """Raised when a radio energy function receives an out-of-domain argument."""

    pass


class RegionExhaustedError(ClusterSimError):
    """Raised when a region has no alive node left to take a cluster-head slot."""

    pass


class SimulationError(ClusterSimError):
    """Raised when the round engine reaches an illegal state."""

    pass


class OutputError(ClusterSimError):
    """Raised when result files cannot be written."""

    pass
