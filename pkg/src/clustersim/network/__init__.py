"""Field model: geometry, regions and node deployment."""

from .arrays import NodeArrays, NodeInput, as_arrays
from .deployment import assign_ids, deploy, distance, roster_rows
from .schema import FieldConfig, NodeState, Region, Role, SplitAxis

__all__ = [
    "FieldConfig",
    "NodeArrays",
    "NodeInput",
    "NodeState",
    "Region",
    "Role",
    "SplitAxis",
    "as_arrays",
    "assign_ids",
    "deploy",
    "distance",
    "roster_rows",
]
