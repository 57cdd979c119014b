"""Simulation state and result schema definitions."""

import math
from enum import Enum
from typing import Dict, List, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from ..network.arrays import NodeArrays
from ..network.schema import FieldConfig, NodeState, Region
from ..protocols.schema import ProtocolState, StrategyKind
from ..radio.schema import LoadModel, RadioParams


class TraceAction(str, Enum):
    """What a node did in a round, as written to the event log."""

    CLUSTER_HEAD = "cluster_head"
    MEMBER = "member"
    DIRECT = "direct"
    DEATH = "death"


class TraceEvent(BaseModel):
    """One line of a run's event log."""

    round: int
    node_id: int
    action: TraceAction
    energy_after: float
    target: Optional[int] = Field(
        default=None, description="Cluster-head ID for members, 0 for the base station"
    )


class NetworkState(BaseModel):
    """Full mutable state of one run.

    Nodes live in ``arrays``; ``nodes`` returns a snapshot as ``NodeState``
    objects.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True)

    arrays: NodeArrays
    round: int = Field(default=0, ge=0)
    protocol: ProtocolState
    rng: np.random.Generator
    radio: RadioParams
    field: FieldConfig
    region_restricted_membership: bool = False
    leach_bs_override: bool = False
    load_model: LoadModel = LoadModel.ACTUAL
    redraw_limit: int = 1000
    events: Optional[List[TraceEvent]] = None

    @property
    def nodes(self) -> List[NodeState]:
        return self.arrays.to_nodes()

    @property
    def residual_energy(self) -> float:
        return math.fsum(self.arrays.energy.tolist())

    @property
    def consumed_energy(self) -> float:
        return math.fsum(self.arrays.consumed.tolist())


class RoundRecord(BaseModel):
    """Observables of one round."""

    round: int
    dead: int
    alive: int
    packets_to_bs: int
    packets_to_ch: int = 0
    ch_count_r1: int
    ch_count_r2: int
    energy_total: float

    @property
    def ch_count(self) -> int:
        return self.ch_count_r1 + self.ch_count_r2


class RunSeries(BaseModel):
    """Time series of one run plus its derived metrics.

    A run stopped by ``max_rounds`` is ``truncated``; its stability period
    and lifetime are then censored at the number of executed rounds.
    """

    kind: StrategyKind
    seed: int
    records: List[RoundRecord]
    stability_period: int
    lifetime: int
    total_packets: int
    truncated: bool = False
    locked_counts: Dict[Region, int] = Field(default_factory=dict)
    redraws: int = 0

    @property
    def unstable_period(self) -> int:
        return self.lifetime - self.stability_period

    @property
    def rounds(self) -> int:
        return len(self.records)


class AggregateMetrics(BaseModel):
    """Per-round means and run-level statistics over several seeds of one protocol."""

    kind: StrategyKind
    seeds: List[int]
    n_total: int
    round: List[int]
    dead_mean: List[float]
    alive_mean: List[float]
    packets_mean: List[float]
    cumulative_packets_mean: List[float]
    ch_r1_mean: List[float]
    ch_r2_mean: List[float]
    energy_mean: List[float]
    stability_mean: float
    stability_std: float
    lifetime_mean: float
    lifetime_std: float
    unstable_mean: float
    total_packets_mean: float
    total_packets_std: float
    truncated_runs: int = 0

    @property
    def runs(self) -> int:
        return len(self.seeds)
