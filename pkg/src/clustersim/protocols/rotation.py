"""Location-aware permanent cluster heads: round-0 seeding and top-down rotation."""

from bisect import bisect_right
from typing import AbstractSet, Collection, Dict, List, Optional, Sequence, Set

import numpy as np

from ..exceptions import ConfigurationError, RegionExhaustedError, SimulationError
from ..logging import get_logger
from ..network.arrays import NodeInput, as_arrays
from ..network.schema import NodeState, Region
from .leach import leach_elect
from .schema import ProtocolState

logger = get_logger(__name__)

DEFAULT_REDRAW_LIMIT = 1000


def _lock(state: ProtocolState, selected: Dict[Region, List[int]]) -> Dict[Region, List[int]]:
    state.prev_chs = {region: list(ids) for region, ids in selected.items()}
    state.locked_counts = {region: len(ids) for region, ids in selected.items()}
    return selected


def lpch_first_round(
    nodes: NodeInput,
    state: ProtocolState,
    rng: np.random.Generator,
    redraw_limit: int = DEFAULT_REDRAW_LIMIT,
) -> Dict[Region, List[int]]:
    """Threshold election run separately in each region at round 0.

    The per-region counts are locked in for the whole run. A region that
    elects nobody is redrawn from the same stream until it has a head.

    Raises:
        SimulationError: If a region still has no head after ``redraw_limit`` redraws
    """
    arrays = as_arrays(nodes)
    selected: Dict[Region, List[int]] = {}
    for region in Region:
        members = arrays.subset(arrays.region_mask(region))
        has_alive = bool(members.alive.any())
        elected = leach_elect(members, state, 0, rng)
        attempts = 0
        while not elected and has_alive:
            attempts += 1
            if attempts > redraw_limit:
                raise SimulationError(
                    f"Region {region.value} elected no cluster head after {redraw_limit} redraws"
                )
            logger.warning(
                "Region elected no cluster heads, redrawing",
                region=region.value,
                attempt=attempts,
            )
            elected = leach_elect(members, state, 0, rng)
        state.redraws += attempts
        selected[region] = elected

    return _lock(state, selected)


def udlpch_first_round(nodes: NodeInput, state: ProtocolState) -> Dict[Region, List[int]]:
    """Every node whose ID is a positive multiple of ``q_step`` becomes head.

    Raises:
        ConfigurationError: If ``q_step`` is zero or ``k_opt`` reaches the node count
    """
    arrays = as_arrays(nodes)
    if state.q_step <= 0 or state.k_opt >= len(arrays):
        raise ConfigurationError(
            f"UDLPCH needs 0 < k_opt < n (k_opt={state.k_opt}, n={len(arrays)})",
            keys=["k_opt"],
        )

    seeded = arrays.alive & (arrays.ids % state.q_step == 0)
    selected: Dict[Region, List[int]] = {}
    for region in Region:
        selected[region] = arrays.ids[seeded & arrays.region_mask(region)].tolist()
        if not selected[region]:
            logger.warning("Region received no seeded cluster heads", region=region.value)

    return _lock(state, selected)


def _successor(
    order: Sequence[int],
    neg_y: Sequence[float],
    alive: Sequence[bool],
    taken: AbstractSet[int],
    prev_y: float,
) -> Optional[int]:
    """First usable row strictly below ``prev_y`` in top-down order, else the top-most."""
    start = bisect_right(neg_y, -prev_y)
    for row in order[start:]:
        if alive[row] and row not in taken:
            return row
    for row in order[:start]:
        if alive[row] and row not in taken:
            return row
    return None


def lpch_rotate(
    prev_ch: NodeState,
    region_nodes: NodeInput,
    taken: Collection[int],
) -> int:
    """Pick the successor of a previous cluster head.

    The successor is the alive, not yet taken node whose y lies strictly
    below the previous head's y and closest to it; equal y goes to the lowest
    ID. When nothing lies below, the walk wraps to the top-most node. The
    previous head's recorded position is used even if it has since died.

    Raises:
        RegionExhaustedError: If no alive, untaken node is left in the region
    """
    arrays = as_arrays(region_nodes)
    order, neg_y = arrays.top_down()
    taken_rows = {arrays.index[node_id] for node_id in taken if node_id in arrays.index}
    row = _successor(order, neg_y, arrays.alive.tolist(), taken_rows, prev_ch.y)
    if row is None:
        raise RegionExhaustedError(f"No candidate left after cluster head {prev_ch.id}")
    return int(arrays.ids[row])


def rotate_region_heads(nodes: NodeInput, state: ProtocolState) -> Dict[Region, List[int]]:
    """Advance every region's heads one step down the field.

    Previous heads are processed from the top down and share one taken-set,
    so two walks never land on the same node. A region keeps its head count
    until it runs out of alive nodes.
    """
    arrays = as_arrays(nodes)
    ids = arrays.ids.tolist()
    ys = arrays.y.tolist()
    alive = arrays.alive.tolist()

    selected: Dict[Region, List[int]] = {}
    for region in Region:
        order, neg_y = arrays.top_down(region)
        previous = sorted(
            (arrays.index[ch_id] for ch_id in state.prev_chs.get(region, [])),
            key=lambda row: (-ys[row], ids[row]),
        )
        taken: List[int] = []
        taken_rows: Set[int] = set()
        for prev_row in previous:
            row = _successor(order, neg_y, alive, taken_rows, ys[prev_row])
            if row is None:
                logger.debug(
                    "Region exhausted, dropping cluster head slot",
                    region=region.value,
                    slots=len(previous),
                    filled=len(taken),
                )
                break
            taken.append(ids[row])
            taken_rows.add(row)
        selected[region] = taken

    state.prev_chs = {region: list(heads) for region, heads in selected.items()}
    return selected
