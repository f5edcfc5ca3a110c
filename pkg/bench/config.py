# experiment configuration
# one flat key=value file per experiment (python-dotenv syntax), list values comma separated;
# every key is mirrored by a CLI flag and flags win
from __future__ import annotations

import math
from pathlib import Path
from typing import Any, Literal

from dotenv import dotenv_values
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

from common.logger import logger
from core.errors import ConfigError

ExperimentName = Literal["bibfs_scaling", "walks_success", "lower_bound"]
ModelName = Literal["regular", "margulis", "er", "matching"]

_LIST_FIELDS = ("n_grid", "deltas", "strategies", "budget_factors")

class ExperimentConfig(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    experiment: ExperimentName
    model: ModelName = "regular"
    d: int = Field(default=3, ge=1)
    p: float | None = Field(default=None, gt=0.0, lt=1.0)
    method: Literal["configuration", "pairing", "auto"] = "auto"
    n_grid: list[int] = Field(min_length=1)
    pairs: int = Field(default=100, ge=1)
    trials: int = Field(default=200, ge=1)
    seed: int = Field(default=0, ge=0, lt=2**64)
    output: Path | None = None

    # walks
    deltas: list[float] = Field(default_factory=lambda: [0.1])
    lambda_source: Literal["power", "exact", "proxy"] = "power"
    spectral_tol: float = Field(default=1e-3, gt=0.0)
    enforce_hypothesis: bool = False

    # lower bound
    strategies: list[str] = Field(default_factory=lambda: ["bibfs", "random", "greedy"])
    budget_factors: list[float] = Field(default_factory=lambda: [0.25, 0.5, 1.0, 2.0, 4.0])

    workers: int | None = Field(default=None, ge=1)
    record_wall_time: bool = True

    @field_validator(*_LIST_FIELDS, mode="before")
    @classmethod
    def _split_csv(cls, value: Any) -> Any:
        if isinstance(value, str):
            return [part.strip() for part in value.split(",") if part.strip()]
        return value

    @field_validator("deltas")
    @classmethod
    def _check_deltas(cls, value: list[float]) -> list[float]:
        if any(not 0.0 < x < 1.0 for x in value):
            raise ValueError("every delta must lie in (0, 1)")
        return value

    @field_validator("budget_factors")
    @classmethod
    def _check_factors(cls, value: list[float]) -> list[float]:
        if any(x < 0 for x in value):
            raise ValueError("budget factors must be non-negative")
        return value

    @model_validator(mode="after")
    def _check_grid(self) -> "ExperimentConfig":
        grid = self.n_grid
        if any(b <= a for a, b in zip(grid, grid[1:])):
            raise ValueError(f"n_grid must be strictly increasing, got {grid}")
        if grid[0] < 2:
            raise ValueError("every n in n_grid must be >= 2")
        if self.model == "margulis" and any(math.isqrt(n) ** 2 != n for n in grid):
            raise ValueError("margulis n_grid entries must be perfect squares m^2")
        return self

    def provenance(self) -> dict[str, str]:
        """Flat key=value view for CSV headers."""
        out = {}
        for key, value in self.model_dump().items():
            if isinstance(value, list):
                value = ",".join(str(v) for v in value)
            out[key] = "" if value is None else str(value)
        return out

def load_config(path: str | Path | None = None, **overrides: Any) -> ExperimentConfig:
    """
    Reads `path` (if given) and applies non-None overrides on top.
    Raises ConfigError for unreadable files, unknown keys and invalid values.
    """
    values: dict[str, Any] = {}
    if path is not None:
        path = Path(path)
        if not path.is_file():
            logger.error(f"[config] no experiment config at {path}")
            raise ConfigError(f"experiment config {path} does not exist")
        values.update({k.lower(): v for k, v in dotenv_values(path).items() if v is not None})
    values.update({k: v for k, v in overrides.items() if v is not None})
    try:
        config = ExperimentConfig(**values)
    except ValidationError as exc:
        problems = "; ".join(f"{'.'.join(map(str, e['loc']))}: {e['msg']}" for e in exc.errors())
        logger.error(f"[config] invalid experiment config: {problems}")
        raise ConfigError(f"invalid experiment config: {problems}") from exc
    logger.info(f"[config] {config.experiment} model={config.model} n_grid={config.n_grid} seed={config.seed}")
    return config
