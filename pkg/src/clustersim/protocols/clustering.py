"""Cluster formation: nearest head, with the direct-to-base-station override."""

from typing import NamedTuple, Sequence, Tuple

import numpy as np

from ..exceptions import SimulationError
from ..network.arrays import NodeArrays, NodeInput, as_arrays
from .schema import ClusterAssignment


class ClusterLinks(NamedTuple):
    """Row-level cluster formation result.

    ``target`` holds, per sender, the row of its head or -1 for the base
    station; ``distance`` is the length of that link in meters.
    """

    heads: np.ndarray
    senders: np.ndarray
    target: np.ndarray
    distance: np.ndarray


def link_clusters(
    arrays: NodeArrays,
    head_rows: Sequence[int],
    bs: Tuple[float, float],
    bs_override: bool = True,
    region_restricted: bool = False,
) -> ClusterLinks:
    """Vector core of ``form_clusters`` working on rows of ``arrays``.

    Raises:
        SimulationError: If a head row is not alive
    """
    heads = np.unique(np.asarray(head_rows, dtype=np.intp))
    if heads.size and not arrays.alive[heads].all():
        dead = arrays.ids[heads[~arrays.alive[heads]]].tolist()
        raise SimulationError(f"Cluster heads {dead} are not alive nodes")

    is_head = np.zeros(len(arrays), dtype=bool)
    is_head[heads] = True
    senders = np.flatnonzero(arrays.alive & ~is_head)
    d_bs = arrays.distance_to(bs)[senders]
    if not heads.size or not senders.size:
        return ClusterLinks(heads, senders, np.full(senders.size, -1, dtype=np.intp), d_bs)

    d_ch = np.hypot(
        arrays.x[senders][:, None] - arrays.x[heads][None, :],
        arrays.y[senders][:, None] - arrays.y[heads][None, :],
    )
    if region_restricted:
        same_region = arrays.region[senders][:, None] == arrays.region[heads][None, :]
        d_ch = np.where(same_region, d_ch, np.inf)

    # rows follow ID order, so the first minimum is the lowest head ID
    nearest = np.argmin(d_ch, axis=1)
    d_nearest = d_ch[np.arange(senders.size), nearest]

    direct = np.isinf(d_nearest)
    if bs_override:
        direct |= d_bs < d_nearest

    target = np.where(direct, -1, heads[nearest])
    return ClusterLinks(heads, senders, target, np.where(direct, d_bs, d_nearest))


def form_clusters(
    chs: Sequence[int],
    nodes: NodeInput,
    bs: Tuple[float, float],
    bs_override: bool = True,
    region_restricted: bool = False,
) -> ClusterAssignment:
    """Assign every alive non-head node to a cluster or to the base station.

    Each node takes its nearest head by Euclidean distance, equal distances
    going to the lowest head ID. With ``bs_override`` a node whose base
    station is strictly nearer than that head sends directly instead. With no
    head available (none elected, or none in its region when
    ``region_restricted``) the node sends directly.

    Raises:
        SimulationError: If a head ID is not an alive node
    """
    arrays = as_arrays(nodes)
    missing = [ch_id for ch_id in sorted(set(chs)) if ch_id not in arrays.index]
    if missing:
        raise SimulationError(f"Cluster heads {missing} are not alive nodes")

    links = link_clusters(
        arrays,
        [arrays.index[ch_id] for ch_id in chs],
        bs,
        bs_override=bs_override,
        region_restricted=region_restricted,
    )
    ids = arrays.ids.tolist()
    assignment = ClusterAssignment(ch_ids=[ids[row] for row in links.heads.tolist()])
    for row, target in zip(links.senders.tolist(), links.target.tolist()):
        if target < 0:
            assignment.direct_senders.append(ids[row])
        else:
            assignment.membership[ids[row]] = ids[target]
    return assignment
