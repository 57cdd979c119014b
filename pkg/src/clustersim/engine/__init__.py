"""Round engine and multi-seed aggregation."""

from .aggregate import aggregate
from .schema import (
    AggregateMetrics,
    NetworkState,
    RoundRecord,
    RunSeries,
    TraceAction,
    TraceEvent,
)
from .simulator import initial_state, run_round, simulate

__all__ = [
    "AggregateMetrics",
    "NetworkState",
    "RoundRecord",
    "RunSeries",
    "TraceAction",
    "TraceEvent",
    "aggregate",
    "initial_state",
    "run_round",
    "simulate",
]
