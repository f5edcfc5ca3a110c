# plot-script generator: validates a result CSV against its documented schema and writes
# a standalone matplotlib script that renders it
from __future__ import annotations

from pathlib import Path

from bench.experiments import LOWER_BOUND_COLUMNS, SCALING_COLUMNS, WALKS_COLUMNS
from bench.output import read_csv
from bounds.report import BOUND_COLUMNS
from common.logger import logger
from core.errors import SchemaError

GAME_REQUIRED = ["budget", "success_rate", "connected_rate", "mean_edges_discovered"]

# most specific first: a walks CSV also carries every scaling column
SCHEMAS: dict[str, list[str]] = {
    "lower_bound": LOWER_BOUND_COLUMNS,
    "walks": WALKS_COLUMNS,
    "scaling": SCALING_COLUMNS,
    "game": GAME_REQUIRED,
    "bounds": BOUND_COLUMNS,
}

_HEADER = '''\
# generated by `xp plots` from {name}
import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np
import pandas as pd

CSV = {csv!r}
OUT = {png!r}

df = pd.read_csv(CSV, comment="#")
fig, ax = plt.subplots(figsize=(6.4, 4.8))
'''

_FOOTER = '''
ax.grid(True, which="both", alpha=0.3)
fig.tight_layout()
fig.savefig(OUT, dpi=150)
print(OUT)
'''

_BODIES = {
    "scaling": '''
n = df["n"].to_numpy(dtype=float)
ax.loglog(n, df["median_visited"], "o-", label="median visited")
ax.loglog(n, df["p90_visited"], "s--", label="p90 visited")
ref = np.sqrt(n) * np.log(n) ** 1.5
ax.loglog(n, ref * df["median_visited"].iloc[0] / ref[0], ":", label="sqrt(n) ln^1.5 n")
ax.set_xlabel("n")
ax.set_ylabel("visited nodes")
ax.legend()
''',
    "walks": '''
for delta, part in df.groupby("delta"):
    ax.semilogx(part["n"], part["success_rate"], "o-", label=f"delta={delta}")
    ax.axhline(1 - delta, linestyle=":", color="gray")
ax.set_xlabel("n")
ax.set_ylabel("success rate")
ax.set_ylim(0, 1.05)
ax.legend()
''',
    "lower_bound": '''
for (n, strategy), part in df.groupby(["n", "strategy"]):
    part = part.sort_values("budget_factor")
    ax.plot(part["budget_factor"], part["connected_rate"], "o-", label=f"n={n} {strategy}")
ax.set_xlabel("budget / sqrt(n)")
ax.set_ylabel("connected-trace rate")
ax.set_ylim(0, 1.05)
ax.legend(fontsize="small")
''',
    "game": '''
groups = df.groupby("n") if "n" in df.columns else [("all", df)]
for n, part in groups:
    part = part.sort_values("budget")
    ax.plot(part["budget"], part["success_rate"], "o-", label=f"n={n} success")
    ax.plot(part["budget"], part["connected_rate"], "x--", label=f"n={n} connected")
ax.set_xlabel("budget (queries)")
ax.set_ylabel("rate")
ax.set_ylim(0, 1.05)
ax.legend(fontsize="small")
''',
    "bounds": '''
for bound, part in df.groupby("bound"):
    ok = (part["bound_value"] > 0) & (part["empirical"] > 0) & np.isfinite(part["bound_value"])
    ax.loglog(part.loc[ok, "bound_value"], part.loc[ok, "empirical"], ".", label=bound)
lo, hi = ax.get_xlim()
ax.plot([lo, hi], [lo, hi], "k:", label="empirical = bound")
ax.set_xlabel("bound value")
ax.set_ylabel("empirical value")
ax.legend()
''',
}

def detect_schema(columns: list[str]) -> str:
    """Name of the most specific documented schema whose columns are all present."""
    present = set(columns)
    for name, required in SCHEMAS.items():
        if present.issuperset(required):
            return name
    closest = min(SCHEMAS, key=lambda name: len(set(SCHEMAS[name]) - present))
    missing = [c for c in SCHEMAS[closest] if c not in present]
    raise SchemaError(f"columns {sorted(present)} match no documented schema; "
                      f"closest is {closest!r}, missing {missing}")

def emit_plots(csv_path: str | Path, out: str | Path | None = None) -> Path:
    """
    Writes a self-contained plotting script for the CSV at csv_path and returns its path.
    Raises SchemaError for an empty CSV or one missing documented columns.
    """
    csv_path = Path(csv_path).resolve()
    df, _ = read_csv(csv_path)
    if df.empty:
        raise SchemaError(f"{csv_path} has no rows")
    schema = detect_schema(list(df.columns))
    out = Path(out) if out is not None else csv_path.with_name(f"{csv_path.stem}_plot.py")
    png = str(csv_path.with_suffix(".png"))
    script = _HEADER.format(name=csv_path.name, csv=str(csv_path), png=png) + _BODIES[schema] + _FOOTER
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(script, encoding="utf-8")
    logger.info(f"[plots] {schema} schema: wrote {out}")
    return out
