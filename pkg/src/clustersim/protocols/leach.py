"""Probabilistic threshold election with per-epoch eligibility."""

from typing import List

import numpy as np

from ..exceptions import SimulationError
from ..network.arrays import NodeInput, as_arrays
from ..validation import validate_probability
from .schema import ProtocolState


def leach_threshold(p: float, r: int) -> float:
    """Election threshold T = p / (1 - p * (r mod round(1/p))).

    Raises:
        ConfigurationError: If ``p`` is outside (0, 1]
        SimulationError: If ``r`` is negative
    """
    validate_probability(p)
    if r < 0:
        raise SimulationError(f"Round index must be non-negative, got {r}")

    epoch = max(1, round(1 / p))
    denominator = 1 - p * (r % epoch)
    if denominator <= 0:
        raise SimulationError(f"Threshold denominator {denominator} at p={p}, r={r}")
    return p / denominator


def leach_elect(
    nodes: NodeInput,
    state: ProtocolState,
    r: int,
    rng: np.random.Generator,
) -> List[int]:
    """Elect cluster heads among ``nodes`` for round ``r``.

    At every epoch boundary all alive nodes become eligible again. Each
    eligible alive node, in ascending ID order, draws u in [0, 1) and is
    elected when u < T. Elected nodes leave the eligibility set for the rest
    of the epoch. An empty result is legal.
    """
    arrays = as_arrays(nodes)
    alive = arrays.ids[arrays.alive].tolist()
    if r % state.epoch_length == 0:
        state.eligibility = set(alive)

    threshold = leach_threshold(state.p_opt, r)
    eligible = [node_id for node_id in alive if node_id in state.eligibility]
    draws = rng.random(len(eligible)).tolist()
    elected = [node_id for node_id, u in zip(eligible, draws) if u < threshold]
    state.eligibility.difference_update(elected)
    return elected
