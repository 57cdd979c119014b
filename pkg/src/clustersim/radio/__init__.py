"""First-order radio energy model."""

from .energy import (
    agg_energy,
    ch_round_energy,
    ch_round_energy_array,
    default_params,
    non_ch_round_energy,
    rx_energy,
    tx_energy,
    tx_energy_array,
)
from .schema import LoadModel, RadioParams

__all__ = [
    "LoadModel",
    "RadioParams",
    "agg_energy",
    "ch_round_energy",
    "ch_round_energy_array",
    "default_params",
    "non_ch_round_energy",
    "rx_energy",
    "tx_energy",
    "tx_energy_array",
]
