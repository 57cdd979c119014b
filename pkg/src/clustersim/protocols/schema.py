"""Protocol state and cluster assignment schema definitions."""

from enum import Enum
from typing import Dict, List, Set

from pydantic import BaseModel, Field, model_validator

from ..network.schema import Region


class StrategyKind(str, Enum):
    """Cluster-head selection strategy of a run."""

    LEACH = "leach"
    LPCH = "lpch"
    UDLPCH = "udlpch"


def _per_region_lists() -> Dict[Region, List[int]]:
    return {Region.R1: [], Region.R2: []}


class ProtocolState(BaseModel):
    """Mutable per-run bookkeeping of a cluster-head strategy."""

    kind: StrategyKind
    p_opt: float = Field(gt=0, le=1)
    k_opt: int = Field(gt=0, description="Target cluster-head count per network")
    q_step: int = Field(default=0, ge=0, description="ID modulus for UDLPCH seeding")
    prev_chs: Dict[Region, List[int]] = Field(default_factory=_per_region_lists)
    locked_counts: Dict[Region, int] = Field(default_factory=dict)
    eligibility: Set[int] = Field(default_factory=set)
    redraws: int = Field(default=0, ge=0, description="Zero-CH region redraws at round 0")

    @model_validator(mode="after")
    def check_q_step(self) -> "ProtocolState":
        """UDLPCH needs a usable ID modulus."""
        if self.kind == StrategyKind.UDLPCH and self.q_step <= 0:
            raise ValueError("q_step must be positive for UDLPCH")
        return self

    @property
    def epoch_length(self) -> int:
        return max(1, round(1 / self.p_opt))


class ClusterAssignment(BaseModel):
    """Outcome of cluster formation for one round."""

    ch_ids: List[int] = Field(default_factory=list)
    membership: Dict[int, int] = Field(
        default_factory=dict, description="Member node ID -> cluster-head ID"
    )
    direct_senders: List[int] = Field(default_factory=list)

    def members_of(self) -> Dict[int, List[int]]:
        """Group member IDs under each cluster head, heads without members included."""
        groups: Dict[int, List[int]] = {ch_id: [] for ch_id in self.ch_ids}
        for member_id, ch_id in sorted(self.membership.items()):
            groups[ch_id].append(member_id)
        return groups

    def covered_ids(self) -> Set[int]:
        return set(self.ch_ids) | set(self.membership) | set(self.direct_senders)
