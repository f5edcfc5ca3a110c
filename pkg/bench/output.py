# CSV / JSON emission with a provenance header
# every CSV starts with "# xp <version>" and one "# key=value" line per config entry;
# readers skip the header through pandas' comment handling
from __future__ import annotations

import json
import subprocess
from functools import lru_cache
from pathlib import Path
from typing import Any, Mapping

import pandas as pd

from common.logger import logger
from core.errors import SchemaError

FALLBACK_VERSION = "0.1.0"
_REPO_ROOT = Path(__file__).resolve().parents[1]

@lru_cache()
def version_string() -> str:
    """git describe of the working tree, or the package version outside a checkout."""
    try:
        out = subprocess.run(
            ["git", "describe", "--tags", "--always", "--dirty"],
            cwd=_REPO_ROOT, capture_output=True, text=True, timeout=5, check=True,
        )
        return out.stdout.strip() or FALLBACK_VERSION
    except (OSError, subprocess.SubprocessError):
        return FALLBACK_VERSION

def provenance_lines(config: Mapping[str, Any]) -> list[str]:
    return [f"# xp {version_string()}", *(f"# {key}={value}" for key, value in config.items())]

def write_csv(
    df: pd.DataFrame,
    path: str | Path,
    config: Mapping[str, Any],
    trailer: Mapping[str, Any] | None = None,
) -> Path:
    """Writes header, table and optional trailing `# key=value` lines."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", encoding="utf-8", newline="") as fh:
        fh.write("\n".join(provenance_lines(config)) + "\n")
        df.to_csv(fh, index=False, lineterminator="\n")
        for key, value in (trailer or {}).items():
            fh.write(f"# {key}={value}\n")
    logger.info(f"[output] wrote {len(df)} rows to {path}")
    return path

def read_csv(path: str | Path) -> tuple[pd.DataFrame, dict[str, str]]:
    """(table, header and trailer key/values). Raises SchemaError for an empty file."""
    path = Path(path)
    if not path.is_file():
        raise SchemaError(f"no CSV at {path}")
    meta: dict[str, str] = {}
    with path.open(encoding="utf-8") as fh:
        for line in fh:
            if line.startswith("# ") and "=" in line:
                key, _, value = line[2:].rstrip("\n").partition("=")
                meta[key] = value
    try:
        df = pd.read_csv(path, comment="#")
    except pd.errors.EmptyDataError as exc:
        raise SchemaError(f"{path} holds no table") from exc
    return df, meta

def write_json(summary: Mapping[str, Any], path: str | Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(summary, indent=2, sort_keys=True, default=str) + "\n", encoding="utf-8")
    return path
