"""Validation utilities for clustersim."""

import math
from typing import List

from .exceptions import ConfigurationError, EnergyModelError

PROTOCOL_NAMES = ("leach", "lpch", "udlpch")


def validate_probability(p: float, name: str = "p_opt") -> bool:
    """Validate a cluster-head probability.

    Args:
        p: Probability value
        name: Key reported in the error message

    Returns:
        True if the probability lies in (0, 1]

    Raises:
        ConfigurationError: If the value is out of range
    """
    if not isinstance(p, (int, float)) or math.isnan(p):
        raise ConfigurationError(f"{name} must be a number", keys=[name])

    if not 0 < p <= 1:
        raise ConfigurationError(f"{name} must be in (0, 1], got {p}", keys=[name])

    return True


def validate_distance(distance: float) -> bool:
    """Validate a transmission distance in meters.

    Raises:
        EnergyModelError: If the distance is negative or not finite
    """
    if math.isnan(distance) or math.isinf(distance):
        raise EnergyModelError(f"Distance must be finite, got {distance}")

    if distance < 0:
        raise EnergyModelError(f"Distance must be non-negative, got {distance}")

    return True


def validate_bits(bits: int) -> bool:
    """Validate a packet length in bits.

    Raises:
        EnergyModelError: If the bit count is not a positive integer
    """
    if not isinstance(bits, int) or bits <= 0:
        raise EnergyModelError(f"Bit count must be a positive integer, got {bits}")

    return True


def parse_seed_list(raw: str) -> List[int]:
    """Parse a comma-separated seed list such as ``"1,2,7"``.

    Raises:
        ConfigurationError: If an entry is not a non-negative integer or the
            list is empty
    """
    seeds = []
    for part in raw.split(","):
        part = part.strip()
        if not part:
            continue
        try:
            seed = int(part)
        except ValueError:
            raise ConfigurationError(f"Invalid seed '{part}'", keys=["seeds"])
        if seed < 0:
            raise ConfigurationError(f"Seeds must be non-negative, got {seed}", keys=["seeds"])
        seeds.append(seed)

    if not seeds:
        raise ConfigurationError("Seed list is empty", keys=["seeds"])

    return seeds


def parse_protocol_list(raw: str) -> List[str]:
    """Parse a comma-separated protocol list such as ``"leach,udlpch"``.

    Raises:
        ConfigurationError: If a name is unknown or the list is empty
    """
    protocols = []
    for part in raw.split(","):
        name = part.strip().lower()
        if not name:
            continue
        if name not in PROTOCOL_NAMES:
            raise ConfigurationError(
                f"Unknown protocol '{name}', expected one of {', '.join(PROTOCOL_NAMES)}",
                keys=["protocols"],
            )
        if name not in protocols:
            protocols.append(name)

    if not protocols:
        raise ConfigurationError("Protocol list is empty", keys=["protocols"])

    return protocols
