"""Energy consumption of one round under the first-order radio model.

All functions are pure: they read an immutable ``RadioParams`` and return
joules.
"""

import numpy as np

from ..exceptions import EnergyModelError
from ..validation import validate_bits, validate_distance
from .schema import RadioParams


def default_params() -> RadioParams:
    """Return the reference parameter set (100-node field, 0.5 J batteries)."""
    return RadioParams()


def tx_energy(params: RadioParams, bits: int, distance: float) -> float:
    """Energy to transmit ``bits`` over ``distance`` meters.

    Below the crossover distance the amplifier follows the free-space d^2
    law; at or above it the multipath d^4 law.

    Raises:
        EnergyModelError: If ``bits`` is not positive or ``distance`` is negative
    """
    validate_bits(bits)
    validate_distance(distance)

    if distance < params.d_crossover:
        amplifier = bits * params.e_fs * distance**2
    else:
        amplifier = bits * params.e_mp * distance**4
    return bits * params.e_ele + amplifier


def rx_energy(params: RadioParams, bits: int) -> float:
    """Energy to receive one packet of ``bits``."""
    validate_bits(bits)
    return bits * params.e_ele


def agg_energy(params: RadioParams, bits: int, signals: int) -> float:
    """Energy for a cluster head to aggregate ``signals`` packets of ``bits``."""
    validate_bits(bits)
    if signals < 0:
        raise EnergyModelError(f"signals must be non-negative, got {signals}")
    return bits * params.e_da * signals


def ch_round_energy(params: RadioParams, member_count: int, d_bs: float) -> float:
    """Energy a cluster head spends in one round.

    The head receives one packet per member, aggregates those packets plus
    its own, then sends the aggregate to the base station. Summed in the
    order reception, aggregation, transmission.
    """
    if member_count < 0:
        raise EnergyModelError(f"member_count must be non-negative, got {member_count}")

    bits = params.packet_bits
    return (
        rx_energy(params, bits) * member_count
        + agg_energy(params, bits, member_count + 1)
        + tx_energy(params, bits, d_bs)
    )


def non_ch_round_energy(params: RadioParams, d_target: float) -> float:
    """Energy a member or direct sender spends sending its packet ``d_target`` meters."""
    return tx_energy(params, params.packet_bits, d_target)


def tx_energy_array(params: RadioParams, bits: int, distance: np.ndarray) -> np.ndarray:
    """Vector form of ``tx_energy`` over an array of distances."""
    validate_bits(bits)
    if distance.size and distance.min() < 0:
        raise EnergyModelError("distance must be non-negative")

    amplifier = np.where(
        distance < params.d_crossover,
        bits * params.e_fs * distance**2,
        bits * params.e_mp * distance**4,
    )
    return bits * params.e_ele + amplifier


def ch_round_energy_array(
    params: RadioParams, member_count: np.ndarray, d_bs: np.ndarray
) -> np.ndarray:
    """Vector form of ``ch_round_energy``; ``member_count`` may be fractional."""
    bits = params.packet_bits
    return (
        bits * params.e_ele * member_count
        + bits * params.e_da * (member_count + 1)
        + tx_energy_array(params, bits, d_bs)
    )
