# toolkit settings/configs
# loads in env variables, sets project default values for budgets and tolerances

from pathlib import Path
from pydantic_settings import BaseSettings, SettingsConfigDict
from functools import lru_cache
from pydantic import Field

# explicitly locate env file
_ENV_FILE = Path(__file__).resolve().parents[1] / ".env"

class XPSettings(BaseSettings):
    """
    The toolkit settings. pydantic-settings auto-parses fields from .env and the environment.
    """

    model_config = SettingsConfigDict(
        env_file=_ENV_FILE, env_file_encoding="utf-8", extra="ignore"
    )

    # logging / execution
    XP_LOG_LEVEL: str = Field(default="INFO", description="Level for every logger made by the factory.")
    XP_WORKERS: int = Field(default=1, ge=1, description="Worker processes for experiment fan-out.")

    # generators
    XP_REJECTION_CAP: int = Field(default=1000, ge=1, description="Configuration-model attempts before giving up.")

    # brute-force budgets
    XP_DENSE_EIG_MAX_N: int = Field(default=4096, description="Largest n for a dense eigensolve.")
    XP_EXACT_MAX_N: int = Field(default=4096, description="Largest n for exact walk counting / distributions.")
    XP_CONFINED_MAX_K: int = Field(default=64, description="Largest walk length for exact confined-walk counts.")
    XP_WALK_DIST_MAX_K: int = Field(default=10_000, description="Largest k for exact walk distributions.")

    # spectral
    XP_POWER_TOL: float = Field(default=1e-6, gt=0, description="Residual tolerance (relative to d) for power iteration.")
    XP_RAMANUJAN_TOL: float = Field(default=1e-9, ge=0, description="Absolute slack on the 2*sqrt(d-1) threshold.")
    XP_SPECTRAL_SEED: int = Field(default=0, description="Seed of the power-iteration start vector.")

    # http service
    XP_GRAPH_CACHE_MAX: int = Field(default=16, ge=1, description="Max materialized graphs kept by the graph store.")
    XP_GRAPH_DIR: Path | None = Field(default=None, description="Graph files preloaded into the store at startup.")

# lru cache to return settings instance
@lru_cache()
def get_settings() -> XPSettings:
    return XPSettings()
