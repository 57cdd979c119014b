"""Configuration management for clustersim.

Process-level settings come from the environment (``CLUSTERSIM_*`` or a
``.env`` file). Experiments are JSON documents validated into
``ExperimentConfig``.
"""

import json
from pathlib import Path
from typing import Annotated, Any, Dict, List, Optional, Union

from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    NonNegativeInt,
    PositiveInt,
    ValidationError,
    ValidationInfo,
    field_validator,
    model_validator,
)
from pydantic_settings import BaseSettings, SettingsConfigDict

from .exceptions import ConfigurationError
from .network.schema import FieldConfig
from .protocols.schema import StrategyKind
from .radio.schema import LoadModel, RadioParams


class Config(BaseSettings):
    """Process-level settings for clustersim."""

    model_config = SettingsConfigDict(
        env_prefix="CLUSTERSIM_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    # Logging Configuration
    log_level: str = Field(default="INFO")
    log_file: Optional[str] = Field(default=None)
    json_logs: bool = Field(default=True)

    # Experiment defaults (a config file or CLI flag takes precedence)
    output_dir: str = Field(default="results")
    workers: int = Field(default=1, ge=1)


class ExperimentConfig(BaseModel):
    """A full experiment: field, radio, protocols and the seed grid."""

    model_config = ConfigDict(extra="forbid")

    field: FieldConfig = Field(default_factory=FieldConfig)
    radio: RadioParams = Field(default_factory=RadioParams)
    protocols: List[StrategyKind] = Field(
        default_factory=lambda: [StrategyKind.LEACH, StrategyKind.LPCH, StrategyKind.UDLPCH],
        min_length=1,
    )
    k_opt: Optional[int] = Field(
        default=None,
        validate_default=True,
        description="Target head count; defaults to round(p_opt x n)",
    )
    seeds: Optional[Annotated[List[NonNegativeInt], Field(min_length=1)]] = None
    seed_count: int = Field(default=5, gt=0)
    max_rounds: Optional[PositiveInt] = Field(
        default=None, description="Round horizon; defaults to RadioParams.lifetime_bound"
    )
    output_dir: str = Field(default="results")
    region_restricted_membership: bool = False
    leach_bs_override: bool = False
    load_model: LoadModel = LoadModel.ACTUAL
    workers: int = Field(default=1, ge=1)
    lpch_redraw_limit: int = Field(default=1000, gt=0)

    @field_validator("protocols")
    @classmethod
    def dedupe_protocols(cls, v: List[StrategyKind]) -> List[StrategyKind]:
        return list(dict.fromkeys(v))

    @field_validator("k_opt")
    @classmethod
    def resolve_k_opt(cls, v: Optional[int], info: ValidationInfo) -> Optional[int]:
        """Default to round(p_opt x n) and keep 0 < k_opt < n."""
        field = info.data.get("field")
        radio = info.data.get("radio")
        if field is None or radio is None:
            return v

        n_total = field.n_total
        if v is None:
            v = max(1, round(radio.p_opt * n_total))
        if not 0 < v < n_total:
            raise ValueError(
                f"k_opt must satisfy 0 < k_opt < n_total ({n_total}), got {v}"
            )
        return v

    @model_validator(mode="after")
    def resolve(self) -> "ExperimentConfig":
        """Materialize the seed list and the round horizon."""
        if self.seeds is None:
            self.seeds = list(range(1, self.seed_count + 1))
        self.seed_count = len(self.seeds)
        if self.max_rounds is None:
            self.max_rounds = self.radio.lifetime_bound
        return self

    @property
    def n_total(self) -> int:
        return self.field.n_total

    @property
    def horizon(self) -> int:
        """Effective round horizon."""
        if self.max_rounds is not None:
            return self.max_rounds
        return self.radio.lifetime_bound

    @property
    def head_target(self) -> int:
        """Resolved ``k_opt``."""
        if self.k_opt is None:
            raise ConfigurationError("k_opt is unresolved", keys=["k_opt"])
        return self.k_opt

    @property
    def q_step(self) -> int:
        """ID modulus for UDLPCH seeding, floor(n / k)."""
        return self.n_total // self.head_target

    def with_overrides(self, **overrides: Any) -> "ExperimentConfig":
        """Return a re-validated copy with top-level fields replaced.

        ``None`` values are ignored, except for ``seeds`` which is cleared
        so that ``seed_count`` regenerates it.
        """
        data = self.model_dump(mode="json")
        for key, value in overrides.items():
            if value is None:
                continue
            data[key] = value
            if key == "seed_count":
                data["seeds"] = None
        return _validate(data)

    def echo(self) -> Dict[str, Any]:
        """Resolved configuration with derived values, enough to reproduce a run."""
        data = self.model_dump(mode="json")
        data["derived"] = {
            "n_total": self.n_total,
            "q_step": self.q_step,
            "epoch_length": self.radio.epoch_length,
            "d_crossover": self.radio.d_crossover,
            "lifetime_bound": self.radio.lifetime_bound,
        }
        return data


def _dotted(loc: tuple) -> str:
    return ".".join(str(part) for part in loc if part != "__root__") or "<root>"


def _validate(data: Dict[str, Any]) -> ExperimentConfig:
    try:
        return ExperimentConfig.model_validate(data)
    except ValidationError as e:
        keys = [_dotted(error["loc"]) for error in e.errors()]
        details = "; ".join(
            f"{_dotted(error['loc'])}: {error['msg']}" for error in e.errors()
        )
        raise ConfigurationError(f"Invalid configuration: {details}", keys=keys) from e


def load_config(path: Optional[Union[str, Path]] = None) -> ExperimentConfig:
    """Load and validate an experiment document.

    A missing path or a blank file yields the reference experiment.

    Raises:
        ConfigurationError: If the file is unreadable, not a JSON object, has
            unknown keys or out-of-range values
    """
    if path is None:
        return ExperimentConfig()

    config_path = Path(path)
    try:
        text = config_path.read_text(encoding="utf-8")
    except OSError as e:
        raise ConfigurationError(f"Cannot read config file {config_path}: {e}") from e

    if not text.strip():
        return ExperimentConfig()

    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ConfigurationError(f"Config file {config_path} is not valid JSON: {e}") from e

    if not isinstance(data, dict):
        raise ConfigurationError(f"Config file {config_path} must contain a JSON object")

    return _validate(data)
