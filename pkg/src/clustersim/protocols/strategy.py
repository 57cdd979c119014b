"""Cluster-head strategies behind a common contract."""

from abc import ABC, abstractmethod
from typing import Dict, List

import numpy as np

from ..network.arrays import NodeInput, as_arrays
from ..network.schema import Region
from .leach import leach_elect
from .rotation import (
    DEFAULT_REDRAW_LIMIT,
    lpch_first_round,
    rotate_region_heads,
    udlpch_first_round,
)
from .schema import ProtocolState, StrategyKind


class ClusterHeadStrategy(ABC):
    """Selects the cluster heads of a round, grouped by region.

    Strategies are stateless; everything that carries over between rounds
    lives in ``ProtocolState``.
    """

    kind: StrategyKind
    applies_bs_override: bool = True

    def select(
        self,
        state: ProtocolState,
        nodes: NodeInput,
        r: int,
        rng: np.random.Generator,
        redraw_limit: int = DEFAULT_REDRAW_LIMIT,
    ) -> Dict[Region, List[int]]:
        """Heads for round ``r``: seeding at round 0, the regular rule afterwards."""
        if r == 0:
            return self.first_round(state, nodes, rng, redraw_limit)
        return self.next_round(state, nodes, r, rng)

    @abstractmethod
    def first_round(
        self,
        state: ProtocolState,
        nodes: NodeInput,
        rng: np.random.Generator,
        redraw_limit: int,
    ) -> Dict[Region, List[int]]:
        ...

    @abstractmethod
    def next_round(
        self,
        state: ProtocolState,
        nodes: NodeInput,
        r: int,
        rng: np.random.Generator,
    ) -> Dict[Region, List[int]]:
        ...


class LeachStrategy(ClusterHeadStrategy):
    """Network-wide threshold election every round, members join the nearest head."""

    kind = StrategyKind.LEACH
    applies_bs_override = False

    def first_round(
        self,
        state: ProtocolState,
        nodes: NodeInput,
        rng: np.random.Generator,
        redraw_limit: int,
    ) -> Dict[Region, List[int]]:
        return self.next_round(state, nodes, 0, rng)

    def next_round(
        self,
        state: ProtocolState,
        nodes: NodeInput,
        r: int,
        rng: np.random.Generator,
    ) -> Dict[Region, List[int]]:
        arrays = as_arrays(nodes)
        grouped: Dict[Region, List[int]] = {Region.R1: [], Region.R2: []}
        for ch_id in leach_elect(arrays, state, r, rng):
            grouped[arrays.region_at(arrays.index[ch_id])].append(ch_id)
        return grouped


class LpchStrategy(ClusterHeadStrategy):
    """Per-region threshold election at round 0, then top-down rotation."""

    kind = StrategyKind.LPCH

    def first_round(
        self,
        state: ProtocolState,
        nodes: NodeInput,
        rng: np.random.Generator,
        redraw_limit: int,
    ) -> Dict[Region, List[int]]:
        return lpch_first_round(nodes, state, rng, redraw_limit)

    def next_round(
        self,
        state: ProtocolState,
        nodes: NodeInput,
        r: int,
        rng: np.random.Generator,
    ) -> Dict[Region, List[int]]:
        return rotate_region_heads(nodes, state)


class UdlpchStrategy(LpchStrategy):
    """ID-modulus seeding at round 0, then the same rotation as LPCH."""

    kind = StrategyKind.UDLPCH

    def first_round(
        self,
        state: ProtocolState,
        nodes: NodeInput,
        rng: np.random.Generator,
        redraw_limit: int,
    ) -> Dict[Region, List[int]]:
        return udlpch_first_round(nodes, state)


STRATEGIES: Dict[StrategyKind, ClusterHeadStrategy] = {
    StrategyKind.LEACH: LeachStrategy(),
    StrategyKind.LPCH: LpchStrategy(),
    StrategyKind.UDLPCH: UdlpchStrategy(),
}


def get_strategy(kind: StrategyKind) -> ClusterHeadStrategy:
    return STRATEGIES[StrategyKind(kind)]


def next_round_chs(
    state: ProtocolState,
    nodes: NodeInput,
    r: int,
    rng: np.random.Generator,
) -> Dict[Region, List[int]]:
    """Heads for a round after seeding, dispatched on ``state.kind``."""
    return get_strategy(state.kind).next_round(state, nodes, r, rng)
