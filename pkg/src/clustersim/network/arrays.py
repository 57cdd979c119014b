"""Column storage of a node population for the round engine."""

from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, PrivateAttr

from .schema import NodeState, Region, Role

REGION_CODES: Dict[Region, int] = {Region.R1: 0, Region.R2: 1}
REGION_BY_CODE: Dict[int, Region] = {code: region for region, code in REGION_CODES.items()}

NO_ROLE = 0
HEAD = 1
MEMBER = 2
DIRECT = 3
ROLE_BY_CODE: Dict[int, Optional[Role]] = {
    NO_ROLE: None,
    HEAD: Role.CLUSTER_HEAD,
    MEMBER: Role.MEMBER,
    DIRECT: Role.DIRECT_SENDER,
}
ROLE_CODES: Dict[Optional[Role], int] = {role: code for code, role in ROLE_BY_CODE.items()}

Point = Tuple[float, float]


class NodeArrays(BaseModel):
    """One numpy column per node attribute, rows in ascending ID order.

    ``ids``, ``region``, ``x`` and ``y`` never change. The engine updates
    ``energy``, ``consumed``, ``alive`` and ``role`` in place, so lookups that
    depend only on positions are computed once and cached.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True)

    ids: np.ndarray
    region: np.ndarray
    x: np.ndarray
    y: np.ndarray
    energy: np.ndarray
    consumed: np.ndarray
    alive: np.ndarray
    role: np.ndarray

    _index: Optional[Dict[int, int]] = PrivateAttr(default=None)
    _top_down: Dict[Optional[Region], Tuple[List[int], List[float]]] = PrivateAttr(
        default_factory=dict
    )
    _distance_to: Dict[Point, np.ndarray] = PrivateAttr(default_factory=dict)

    @classmethod
    def from_nodes(cls, nodes: Sequence[NodeState]) -> "NodeArrays":
        """Copy a node list into columns; the nodes themselves are not kept."""
        ordered = sorted(nodes, key=lambda node: node.id)
        return cls(
            ids=np.array([node.id for node in ordered], dtype=np.int64),
            region=np.array([REGION_CODES[node.region] for node in ordered], dtype=np.int8),
            x=np.array([node.x for node in ordered], dtype=float),
            y=np.array([node.y for node in ordered], dtype=float),
            energy=np.array([node.energy for node in ordered], dtype=float),
            consumed=np.array([node.consumed for node in ordered], dtype=float),
            alive=np.array([node.alive for node in ordered], dtype=bool),
            role=np.array([ROLE_CODES[node.role] for node in ordered], dtype=np.int8),
        )

    def __len__(self) -> int:
        return len(self.ids)

    def to_nodes(self) -> List[NodeState]:
        """Materialize the current columns as ``NodeState`` objects."""
        return [
            NodeState(
                id=node_id,
                region=REGION_BY_CODE[region],
                x=x,
                y=y,
                energy=energy,
                consumed=consumed,
                alive=alive,
                role=ROLE_BY_CODE[role],
            )
            for node_id, region, x, y, energy, consumed, alive, role in zip(
                self.ids.tolist(),
                self.region.tolist(),
                self.x.tolist(),
                self.y.tolist(),
                self.energy.tolist(),
                self.consumed.tolist(),
                self.alive.tolist(),
                self.role.tolist(),
            )
        ]

    def subset(self, mask: np.ndarray) -> "NodeArrays":
        """Copy of the rows selected by a boolean mask."""
        return NodeArrays(
            ids=self.ids[mask],
            region=self.region[mask],
            x=self.x[mask],
            y=self.y[mask],
            energy=self.energy[mask],
            consumed=self.consumed[mask],
            alive=self.alive[mask],
            role=self.role[mask],
        )

    @property
    def index(self) -> Dict[int, int]:
        """Map of node ID to row."""
        if self._index is None:
            self._index = {node_id: row for row, node_id in enumerate(self.ids.tolist())}
        return self._index

    def region_mask(self, region: Region) -> np.ndarray:
        return self.region == REGION_CODES[region]

    def region_at(self, row: int) -> Region:
        return REGION_BY_CODE[int(self.region[row])]

    def top_down(self, region: Optional[Region] = None) -> Tuple[List[int], List[float]]:
        """Rows of a region (or of every node) sorted by ``(-y, id)``.

        Returns the rows together with their negated y values, which are
        ascending and so ready for ``bisect``.
        """
        if region not in self._top_down:
            if region is None:
                rows = np.arange(len(self))
            else:
                rows = np.flatnonzero(self.region_mask(region))
            # lexsort keys run from least to most significant
            order = rows[np.lexsort((self.ids[rows], -self.y[rows]))]
            self._top_down[region] = (order.tolist(), (-self.y[order]).tolist())
        return self._top_down[region]

    def distance_to(self, point: Point) -> np.ndarray:
        """Distance of every node to a fixed point, meters."""
        if point not in self._distance_to:
            self._distance_to[point] = np.hypot(self.x - point[0], self.y - point[1])
        return self._distance_to[point]


NodeInput = Union[NodeArrays, Sequence[NodeState]]


def as_arrays(nodes: NodeInput) -> NodeArrays:
    """Accept either columns or a node list."""
    if isinstance(nodes, NodeArrays):
        return nodes
    return NodeArrays.from_nodes(nodes)
