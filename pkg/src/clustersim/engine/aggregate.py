"""Multi-seed averaging of run series."""

from typing import List, Sequence

import numpy as np
import pandas as pd

from ..exceptions import SimulationError
from ..logging import get_logger
from .schema import AggregateMetrics, RunSeries

logger = get_logger(__name__)

# Columns carried to the end of a shorter run; the rest drop to zero once
# every node is dead.
HELD_COLUMNS = ("dead", "alive", "energy_total")
ZEROED_COLUMNS = ("packets_to_bs", "packets_to_ch", "ch_count_r1", "ch_count_r2")


def series_frame(series: RunSeries, length: int) -> pd.DataFrame:
    """One run's records as a frame padded to ``length`` rounds."""
    frame = pd.DataFrame([record.model_dump() for record in series.records])
    frame = frame.set_index("round").reindex(range(length))
    frame[list(HELD_COLUMNS)] = frame[list(HELD_COLUMNS)].ffill()
    frame[list(ZEROED_COLUMNS)] = frame[list(ZEROED_COLUMNS)].fillna(0)
    return frame


def _std(values: Sequence[float]) -> float:
    if len(values) < 2:
        return 0.0
    return float(np.std(values, ddof=1))


def aggregate(series_list: Sequence[RunSeries]) -> AggregateMetrics:
    """Average several runs of one protocol round by round.

    Runs that ended earlier are padded: dead, alive and remaining energy keep
    their final values, per-round packets and head counts are zero.

    Raises:
        SimulationError: If the list is empty, mixes protocols, or a run has
            no records
    """
    if not series_list:
        raise SimulationError("Cannot aggregate an empty list of runs")

    kinds = {series.kind for series in series_list}
    if len(kinds) != 1:
        raise SimulationError(f"Cannot aggregate runs of different protocols: {sorted(kinds)}")
    if any(not series.records for series in series_list):
        raise SimulationError("Cannot aggregate a run without records")

    ordered: List[RunSeries] = sorted(series_list, key=lambda series: series.seed)
    length = max(series.rounds for series in ordered)
    frames = [series_frame(series, length) for series in ordered]
    mean = pd.concat(frames).groupby(level=0).mean()

    stability = [float(series.stability_period) for series in ordered]
    lifetime = [float(series.lifetime) for series in ordered]
    packets = [float(series.total_packets) for series in ordered]
    first = ordered[0].records[0]

    metrics = AggregateMetrics(
        kind=ordered[0].kind,
        seeds=[series.seed for series in ordered],
        n_total=first.dead + first.alive,
        round=list(range(length)),
        dead_mean=mean["dead"].tolist(),
        alive_mean=mean["alive"].tolist(),
        packets_mean=mean["packets_to_bs"].tolist(),
        cumulative_packets_mean=mean["packets_to_bs"].cumsum().tolist(),
        ch_r1_mean=mean["ch_count_r1"].tolist(),
        ch_r2_mean=mean["ch_count_r2"].tolist(),
        energy_mean=mean["energy_total"].tolist(),
        stability_mean=float(np.mean(stability)),
        stability_std=_std(stability),
        lifetime_mean=float(np.mean(lifetime)),
        lifetime_std=_std(lifetime),
        unstable_mean=float(np.mean(lifetime) - np.mean(stability)),
        total_packets_mean=float(np.mean(packets)),
        total_packets_std=_std(packets),
        truncated_runs=sum(1 for series in ordered if series.truncated),
    )
    logger.debug("Runs aggregated", kind=metrics.kind.value, runs=metrics.runs, rounds=length)
    return metrics
