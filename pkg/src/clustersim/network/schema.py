"""Field geometry and sensor node schema definitions."""

from enum import Enum
from typing import Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator


class SplitAxis(str, Enum):
    """Orientation of the line that splits the field into two regions."""

    VERTICAL = "vertical"
    HORIZONTAL = "horizontal"


class Region(str, Enum):
    """Physical region of the field a node was deployed in."""

    R1 = "R1"
    R2 = "R2"


class Role(str, Enum):
    """Role a node plays in the current round."""

    CLUSTER_HEAD = "ClusterHead"
    MEMBER = "Member"
    DIRECT_SENDER = "DirectSender"


class FieldConfig(BaseModel):
    """Deployment field and base-station placement.

    A vertical split puts R1 on the left half (x < width/2); a horizontal
    split puts R1 on the top half (y >= height/2) so that region IDs follow
    the top-down numbering.
    """

    model_config = ConfigDict(extra="forbid", frozen=True)

    width: float = Field(default=100.0, gt=0, description="Field width, meters")
    height: float = Field(default=100.0, gt=0, description="Field height, meters")
    bs_x: float = Field(default=50.0, description="Base station x, meters")
    bs_y: float = Field(default=50.0, description="Base station y, meters")
    split_axis: SplitAxis = Field(default=SplitAxis.VERTICAL)
    nodes_per_region: int = Field(default=50, gt=0)
    n_total: Optional[int] = Field(
        default=None, description="Total node count, always 2 x nodes_per_region"
    )

    @model_validator(mode="after")
    def check_geometry(self) -> "FieldConfig":
        """Fill n_total and keep the base station inside the field."""
        expected = 2 * self.nodes_per_region
        if self.n_total is None:
            object.__setattr__(self, "n_total", expected)
        elif self.n_total != expected:
            raise ValueError(
                f"n_total must equal 2 x nodes_per_region ({expected}), got {self.n_total}"
            )

        if not (0 <= self.bs_x <= self.width and 0 <= self.bs_y <= self.height):
            raise ValueError(
                f"base station ({self.bs_x}, {self.bs_y}) lies outside the "
                f"{self.width} x {self.height} field"
            )
        return self

    @property
    def bs(self) -> Tuple[float, float]:
        """Base station position."""
        return (self.bs_x, self.bs_y)

    def region_bounds(self, region: Region) -> Tuple[float, float, float, float]:
        """Return ``(x_low, x_high, y_low, y_high)`` of a region's rectangle."""
        if self.split_axis == SplitAxis.VERTICAL:
            mid = self.width / 2
            if region == Region.R1:
                return (0.0, mid, 0.0, self.height)
            return (mid, self.width, 0.0, self.height)

        mid = self.height / 2
        if region == Region.R1:
            return (0.0, self.width, mid, self.height)
        return (0.0, self.width, 0.0, mid)

    def region_of(self, x: float, y: float) -> Region:
        """Region a position falls in."""
        if self.split_axis == SplitAxis.VERTICAL:
            return Region.R1 if x < self.width / 2 else Region.R2
        return Region.R1 if y >= self.height / 2 else Region.R2


class NodeState(BaseModel):
    """One sensor node. Position and region never change after deployment."""

    id: int = Field(gt=0)
    region: Region
    x: float
    y: float
    energy: float
    consumed: float = 0.0
    alive: bool = True
    role: Optional[Role] = None

    @property
    def position(self) -> Tuple[float, float]:
        return (self.x, self.y)
