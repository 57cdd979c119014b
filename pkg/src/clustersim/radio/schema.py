"""First-order radio model parameters."""

import math
from enum import Enum

from pydantic import BaseModel, ConfigDict, Field, field_validator


class LoadModel(str, Enum):
    """How a cluster head's reception and aggregation work is counted.

    ``actual`` charges the members that joined this round; ``expected`` charges
    every head for an average cluster of ``n / k_opt`` nodes.
    """

    ACTUAL = "actual"
    EXPECTED = "expected"


class RadioParams(BaseModel):
    """Physical constants of the first-order radio model.

    The amplifier crossover distance is derived from ``e_fs`` and ``e_mp`` and
    is therefore not settable.
    """

    model_config = ConfigDict(extra="forbid", frozen=True)

    e_ele: float = Field(
        default=5e-9, gt=0, description="Electronics energy, J/bit (tx and rx)"
    )
    e_fs: float = Field(
        default=10e-12, gt=0, description="Free-space amplifier, J/bit/m^2"
    )
    e_mp: float = Field(
        default=0.0013e-12, gt=0, description="Multipath amplifier, J/bit/m^4"
    )
    e_da: float = Field(
        default=5e-9, gt=0, description="Data aggregation energy, J/bit/signal"
    )
    e_init: float = Field(default=0.5, gt=0, description="Initial node energy, J")
    packet_bits: int = Field(default=4000, gt=0, description="Data packet length, bits")
    p_opt: float = Field(default=0.1, description="Optimal cluster-head probability")

    @field_validator("p_opt")
    @classmethod
    def validate_p_opt(cls, v: float) -> float:
        """Ensure the probability lies in (0, 1]."""
        if not 0 < v <= 1:
            raise ValueError("p_opt must be in (0, 1]")
        return v

    @property
    def d_crossover(self) -> float:
        """Distance at which the amplifier switches from d^2 to d^4, meters."""
        return math.sqrt(self.e_fs / self.e_mp)

    @property
    def epoch_length(self) -> int:
        """Rounds per LEACH epoch, round(1/p_opt)."""
        return max(1, round(1 / self.p_opt))

    @property
    def lifetime_bound(self) -> int:
        """Round count no node can outlive.

        Every alive node transmits at least once per round and so spends at
        least ``packet_bits * e_ele``; one spare round absorbs rounding.
        """
        return math.ceil(self.e_init / (self.packet_bits * self.e_ele)) + 1
