"""Cluster-head selection strategies and cluster formation."""

from .clustering import ClusterLinks, form_clusters, link_clusters
from .leach import leach_elect, leach_threshold
from .rotation import (
    lpch_first_round,
    lpch_rotate,
    rotate_region_heads,
    udlpch_first_round,
)
from .schema import ClusterAssignment, ProtocolState, StrategyKind
from .strategy import ClusterHeadStrategy, get_strategy, next_round_chs

__all__ = [
    "ClusterAssignment",
    "ClusterHeadStrategy",
    "ClusterLinks",
    "ProtocolState",
    "StrategyKind",
    "form_clusters",
    "get_strategy",
    "leach_elect",
    "leach_threshold",
    "link_clusters",
    "lpch_first_round",
    "lpch_rotate",
    "next_round_chs",
    "rotate_region_heads",
    "udlpch_first_round",
]
