"""Run configuration loaded from YAML and command-line overrides."""

# Standard library imports
from pathlib import Path
from typing import Optional, Set, Union

# Third-party imports
import yaml
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from subgroup_graphs.errors import InvalidParameters

# Constants
MAX_ORDER_LIMIT = 512
EXPORT_FORMATS = frozenset({"dot", "adjacency", "csv", "report"})


class RunConfig(BaseModel):
    """Budgets and output settings for one run."""

    model_config = ConfigDict(extra="forbid")

    max_order: int = Field(default=MAX_ORDER_LIMIT, ge=1, le=MAX_ORDER_LIMIT)
    genus_node_budget: int = Field(default=10**8, gt=0)
    search_node_budget: int = Field(default=10**7, gt=0)
    output_dir: str = "out"
    formats: Set[str] = Field(default_factory=lambda: {"csv", "report"})
    workers: int = Field(default=1, ge=1)

    @field_validator("formats")
    @classmethod
    def known_formats(cls, value: Set[str]) -> Set[str]:
        unknown = set(value) - EXPORT_FORMATS
        if unknown:
            raise ValueError(f"unknown formats: {', '.join(sorted(unknown))}")
        return set(value)

    def with_overrides(self, **overrides) -> "RunConfig":
        """Return a copy with every non-None override applied and re-validated."""
        data = self.model_dump()
        data.update({k: v for k, v in overrides.items() if v is not None})
        return build_config(data)


def build_config(data: Optional[dict]) -> RunConfig:
    """Validate a mapping into a RunConfig, raising InvalidParameters on bad input."""
    try:
        return RunConfig(**(data or {}))
    except ValidationError as exc:
        raise InvalidParameters(f"invalid configuration: {exc}") from exc


def load_config(path: Optional[Union[str, Path]] = None) -> RunConfig:
    """Load a RunConfig from a YAML file; no path means defaults."""
    if path is None:
        return RunConfig()
    with open(path, "r", encoding="utf-8") as handle:
        data = yaml.safe_load(handle)
    if data is not None and not isinstance(data, dict):
        raise InvalidParameters(f"configuration in {path} must be a mapping")
    return build_config(data)
