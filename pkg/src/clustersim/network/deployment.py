"""Node deployment, ID assignment and field geometry helpers."""

import math
from typing import List, Sequence, Tuple

from ..logging import get_logger
from ..rng import SeedLike, as_generator
from .schema import FieldConfig, NodeState, Region

logger = get_logger(__name__)

Point = Tuple[float, float]


def distance(a: Point, b: Point) -> float:
    """Euclidean distance between two points, meters."""
    return math.hypot(a[0] - b[0], a[1] - b[1])


def deploy(config: FieldConfig, seed: SeedLike, e_init: float) -> List[NodeState]:
    """Place ``nodes_per_region`` nodes uniformly in each region's rectangle.

    R1 nodes are drawn first, then R2. Nodes carry provisional IDs in
    deployment order; ``assign_ids`` replaces them with the top-down scheme.

    Args:
        config: Field geometry
        seed: Run seed, or an already derived deployment stream
        e_init: Initial energy of every node, joules

    Returns:
        Deployed nodes in deployment order
    """
    rng = as_generator(seed)
    nodes: List[NodeState] = []
    for region in (Region.R1, Region.R2):
        x_low, x_high, y_low, y_high = config.region_bounds(region)
        xs = rng.uniform(x_low, x_high, size=config.nodes_per_region)
        ys = rng.uniform(y_low, y_high, size=config.nodes_per_region)
        for x, y in zip(xs, ys):
            nodes.append(
                NodeState(
                    id=len(nodes) + 1,
                    region=region,
                    x=float(x),
                    y=float(y),
                    energy=e_init,
                )
            )

    logger.debug("Nodes deployed", count=len(nodes), split=config.split_axis.value)
    return nodes


def assign_ids(nodes: Sequence[NodeState]) -> List[NodeState]:
    """Number nodes region by region from the top of the field downward.

    R1 takes IDs ``1..|R1|`` and R2 the following ones. Within a region the
    order is descending y, then ascending x, then deployment order (the
    incoming ID).

    Returns:
        New node list ordered by the assigned IDs
    """
    numbered: List[NodeState] = []
    for region in (Region.R1, Region.R2):
        members = [node for node in nodes if node.region == region]
        members.sort(key=lambda node: (-node.y, node.x, node.id))
        for node in members:
            numbered.append(node.model_copy(update={"id": len(numbered) + 1}))
    return numbered


def roster_rows(nodes: Sequence[NodeState]) -> List[dict]:
    """Flatten a node list into ``id, region, x, y`` rows."""
    return [
        {"id": node.id, "region": node.region.value, "x": node.x, "y": node.y}
        for node in sorted(nodes, key=lambda node: node.id)
    ]
