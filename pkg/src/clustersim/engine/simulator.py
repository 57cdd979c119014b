"""Round engine: head selection, cluster formation, energy charging, deaths."""

from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..config import ExperimentConfig
from ..exceptions import SimulationError
from ..logging import get_logger
from ..network.arrays import DIRECT, HEAD, MEMBER, NodeArrays
from ..network.deployment import assign_ids, deploy
from ..network.schema import NodeState, Region
from ..protocols.clustering import ClusterLinks, link_clusters
from ..protocols.schema import ProtocolState, StrategyKind
from ..protocols.strategy import get_strategy
from ..radio.energy import ch_round_energy_array, tx_energy_array
from ..radio.schema import LoadModel
from ..rng import run_streams
from .schema import NetworkState, RoundRecord, RunSeries, TraceAction, TraceEvent

logger = get_logger(__name__)

CONSERVATION_TOLERANCE = 1e-9


def initial_state(
    config: ExperimentConfig,
    kind: StrategyKind,
    seed: int,
    nodes: Optional[Sequence[NodeState]] = None,
    trace: bool = False,
) -> NetworkState:
    """Build the round-0 state of a run.

    Without ``nodes`` the field is deployed from the seed's deployment
    stream and numbered top-down; given nodes are copied (they must already
    carry their final IDs).
    """
    deployment_rng, election_rng = run_streams(seed)
    if nodes is None:
        nodes = assign_ids(deploy(config.field, deployment_rng, config.radio.e_init))

    protocol = ProtocolState(
        kind=kind,
        p_opt=config.radio.p_opt,
        k_opt=config.head_target,
        q_step=config.q_step,
    )
    return NetworkState(
        arrays=NodeArrays.from_nodes(nodes),
        protocol=protocol,
        rng=election_rng,
        radio=config.radio,
        field=config.field,
        region_restricted_membership=config.region_restricted_membership,
        leach_bs_override=config.leach_bs_override,
        load_model=config.load_model,
        redraw_limit=config.lpch_redraw_limit,
        events=[] if trace else None,
    )


def _check_conservation(state: NetworkState) -> None:
    arrays = state.arrays
    budget = len(arrays) * state.radio.e_init
    drift = float(arrays.energy.sum() + arrays.consumed.sum()) - budget
    if abs(drift) > CONSERVATION_TOLERANCE:
        raise SimulationError(
            f"Energy not conserved after round {state.round}: drift {drift:.3e} J"
        )


def _head_loads(
    state: NetworkState, links: ClusterLinks, joined: np.ndarray
) -> np.ndarray:
    if state.load_model == LoadModel.EXPECTED:
        average = len(state.arrays) / state.protocol.k_opt - 1
        return np.full(links.heads.size, average)
    return np.bincount(links.target[joined], minlength=len(state.arrays))[links.heads]


def _record_events(
    events: List[TraceEvent], state: NetworkState, links: ClusterLinks, dying: np.ndarray
) -> None:
    ids = state.arrays.ids.tolist()
    energy = state.arrays.energy.tolist()

    actions: Dict[int, Tuple[TraceAction, int]] = {
        row: (TraceAction.CLUSTER_HEAD, 0) for row in links.heads.tolist()
    }
    for row, target in zip(links.senders.tolist(), links.target.tolist()):
        if target >= 0:
            actions[row] = (TraceAction.MEMBER, ids[target])
        else:
            actions[row] = (TraceAction.DIRECT, 0)

    for row in sorted(actions):
        action, target = actions[row]
        events.append(
            TraceEvent(
                round=state.round,
                node_id=ids[row],
                action=action,
                energy_after=energy[row],
                target=target,
            )
        )
    for row in np.flatnonzero(dying).tolist():
        events.append(
            TraceEvent(
                round=state.round,
                node_id=ids[row],
                action=TraceAction.DEATH,
                energy_after=energy[row],
            )
        )


def run_round(state: NetworkState) -> Tuple[NetworkState, RoundRecord]:
    """Execute one round and advance the round counter.

    Order: head selection, cluster formation, energy charging, liveness
    update, record. Every node alive at the start of the round transmits;
    its energy may go negative on that last transmission, and the packet
    still counts.

    Raises:
        SimulationError: If no node is alive or a bookkeeping invariant breaks
    """
    arrays = state.arrays
    alive_before = arrays.alive.copy()
    alive_count = int(alive_before.sum())
    if not alive_count:
        raise SimulationError(f"No alive node at round {state.round}")

    strategy = get_strategy(state.protocol.kind)
    selected = strategy.select(
        state.protocol, arrays, state.round, state.rng, state.redraw_limit
    )
    bs_override = (
        strategy.applies_bs_override
        or (state.protocol.kind == StrategyKind.LEACH and state.leach_bs_override)
    )
    bs = state.field.bs
    links = link_clusters(
        arrays,
        [arrays.index[ch_id] for ids in selected.values() for ch_id in ids],
        bs,
        bs_override=bs_override,
        region_restricted=state.region_restricted_membership,
    )
    if links.heads.size + links.senders.size != alive_count:
        raise SimulationError(f"Cluster assignment does not partition round {state.round}")

    joined = links.target >= 0
    head_cost = ch_round_energy_array(
        state.radio, _head_loads(state, links, joined), arrays.distance_to(bs)[links.heads]
    )
    sender_cost = tx_energy_array(state.radio, state.radio.packet_bits, links.distance)
    arrays.energy[links.heads] -= head_cost
    arrays.consumed[links.heads] += head_cost
    arrays.energy[links.senders] -= sender_cost
    arrays.consumed[links.senders] += sender_cost
    arrays.role[links.heads] = HEAD
    arrays.role[links.senders] = np.where(joined, MEMBER, DIRECT)

    dying = alive_before & (arrays.energy <= 0)
    arrays.alive[dying] = False
    if state.events is not None:
        _record_events(state.events, state, links, dying)

    _check_conservation(state)

    members = int(joined.sum())
    alive_after = alive_count - int(dying.sum())
    record = RoundRecord(
        round=state.round,
        dead=len(arrays) - alive_after,
        alive=alive_after,
        packets_to_bs=int(links.heads.size) + int(links.senders.size) - members,
        packets_to_ch=members,
        ch_count_r1=len(selected.get(Region.R1, [])),
        ch_count_r2=len(selected.get(Region.R2, [])),
        energy_total=float(np.maximum(arrays.energy, 0.0).sum()),
    )
    state.round += 1
    return state, record


def summarize(
    kind: StrategyKind,
    seed: int,
    records: List[RoundRecord],
    protocol: ProtocolState,
) -> RunSeries:
    """Derive stability period, lifetime and throughput from a record list."""
    horizon = len(records)
    first_death = next((rec.round for rec in records if rec.dead > 0), None)
    last_death = next((rec.round for rec in records if rec.alive == 0), None)
    return RunSeries(
        kind=kind,
        seed=seed,
        records=records,
        stability_period=first_death if first_death is not None else horizon,
        lifetime=last_death if last_death is not None else horizon,
        total_packets=sum(rec.packets_to_bs for rec in records),
        truncated=last_death is None,
        locked_counts=dict(protocol.locked_counts),
        redraws=protocol.redraws,
    )


def simulate(
    config: ExperimentConfig,
    kind: StrategyKind,
    seed: int,
    max_rounds: Optional[int] = None,
    nodes: Optional[Sequence[NodeState]] = None,
    state: Optional[NetworkState] = None,
) -> RunSeries:
    """Run one (protocol, seed) pair until every node is dead or the horizon is hit.

    Args:
        config: Validated experiment
        kind: Strategy to run
        seed: Run seed
        max_rounds: Round horizon, ``config.horizon`` when omitted
        nodes: Pre-placed nodes instead of a seeded deployment
        state: Pre-built state (for example with tracing on); overrides ``nodes``

    Raises:
        SimulationError: If ``max_rounds`` is not positive
    """
    horizon = max_rounds if max_rounds is not None else config.horizon
    if horizon <= 0:
        raise SimulationError(f"max_rounds must be positive, got {horizon}")

    kind = StrategyKind(kind)
    if state is None:
        state = initial_state(config, kind, seed, nodes=nodes)

    logger.debug("Run started", kind=kind.value, seed=seed, nodes=len(state.arrays))
    records: List[RoundRecord] = []
    while state.round < horizon and state.arrays.alive.any():
        state, record = run_round(state)
        records.append(record)

    series = summarize(kind, seed, records, state.protocol)
    if series.truncated:
        logger.warning(
            "Run truncated with nodes alive",
            kind=kind.value,
            seed=seed,
            alive=records[-1].alive if records else len(state.arrays),
            max_rounds=horizon,
        )
    logger.info(
        "Run complete",
        kind=kind.value,
        seed=seed,
        stability_period=series.stability_period,
        lifetime=series.lifetime,
        total_packets=series.total_packets,
    )
    return series
