# experiment configs, runners, CSV provenance and plot-script generation
import pandas as pd
import pytest

from bench.config import load_config
from bench.experiments import (
    LOWER_BOUND_COLUMNS,
    SCALING_COLUMNS,
    WALKS_COLUMNS,
    exp_bibfs_scaling,
    exp_lower_bound,
    exp_walks_success,
    fit_slope,
    sample_pairs,
)
from bench.output import read_csv, write_csv
from bench.plots import detect_schema, emit_plots
from core.errors import ConfigError, SchemaError

# ── config ────────────────────────────────────────────────────────────────────

def test_config_file_and_overrides(tmp_path):
    path = tmp_path / "scaling.env"
    path.write_text("# comment\nEXPERIMENT=bibfs_scaling\nN_GRID=64,128\nPAIRS=7\nSEED=3\n")
    config = load_config(path, pairs=9, seed=None)
    assert config.n_grid == [64, 128]
    assert config.pairs == 9
    assert config.seed == 3
    assert config.provenance()["n_grid"] == "64,128"

@pytest.mark.parametrize("bad", [
    {"n_grid": "128,64"},
    {"n_grid": "64", "trials": 0},
    {"n_grid": "64", "colour": "blue"},
    {"n_grid": "64", "deltas": "1.5"},
    {"n_grid": "50", "model": "margulis"},
])
def test_config_rejects_bad_values(bad):
    with pytest.raises(ConfigError):
        load_config(experiment="bibfs_scaling", **bad)

def test_config_missing_file(tmp_path):
    with pytest.raises(ConfigError):
        load_config(tmp_path / "missing.env")

# ── helpers ───────────────────────────────────────────────────────────────────

def test_sample_pairs_are_distinct_endpoints():
    pairs = sample_pairs(5, 200, seed=1)
    assert len(pairs) == 200
    assert all(s != t and 0 <= s < 5 and 0 <= t < 5 for s, t in pairs)
    assert sample_pairs(5, 200, seed=1) == pairs

def test_fit_slope():
    assert fit_slope([10, 100, 1000], [1, 10, 100]) == pytest.approx(1.0)
    assert fit_slope([10, 100, 1000], [2, 2, 2]) == pytest.approx(0.0)

# ── runners ───────────────────────────────────────────────────────────────────

def test_scaling_on_k4():
    config = load_config(experiment="bibfs_scaling", model="regular", d=3, n_grid="4", pairs=5, record_wall_time=False)
    df, summary = exp_bibfs_scaling(config)
    assert list(df.columns) == SCALING_COLUMNS
    assert df.loc[0, "median_visited"] <= 4
    assert df.loc[0, "success_rate"] == 1.0
    assert summary["rows"] == 1

def test_scaling_is_bit_reproducible(tmp_path):
    config = load_config(experiment="bibfs_scaling", n_grid="256,1024", pairs=10, seed=4,
                         lambda_source="exact", record_wall_time=False)
    first, _ = exp_bibfs_scaling(config)
    second, _ = exp_bibfs_scaling(config)
    a = write_csv(first, tmp_path / "a.csv", config.provenance())
    b = write_csv(second, tmp_path / "b.csv", config.provenance())
    assert a.read_bytes() == b.read_bytes()

def test_scaling_rejects_er():
    config = load_config(experiment="bibfs_scaling", model="er", n_grid="64")
    with pytest.raises(ConfigError):
        exp_bibfs_scaling(config)

@pytest.mark.slow
def test_scaling_slope_is_sublinear():
    config = load_config(experiment="bibfs_scaling", n_grid="4096,16384,65536", pairs=30, seed=1,
                         lambda_source="proxy", record_wall_time=False)
    _, summary = exp_bibfs_scaling(config)
    assert 0.4 <= summary["slope"] <= 0.75

def test_walks_ball_grows_as_delta_shrinks():
    config = load_config(experiment="walks_success", d=8, method="pairing", n_grid="1024", deltas="0.5,0.01",
                         trials=20, lambda_source="proxy", seed=2, record_wall_time=False)
    df, summary = exp_walks_success(config)
    assert list(df.columns) == WALKS_COLUMNS
    k_by_delta = dict(zip(df["delta"], df["k"]))
    assert k_by_delta[0.01] > k_by_delta[0.5]
    assert summary["bound_violations"] == 0
    assert df["success_rate"].min() >= 0.8

def test_lower_bound_rows():
    config = load_config(experiment="lower_bound", n_grid="256", strategies="bibfs,random",
                         budget_factors="0,1,4", trials=10, seed=5)
    df, summary = exp_lower_bound(config)
    assert list(df.columns) == LOWER_BOUND_COLUMNS
    assert len(df) == summary["rows"] == 6
    assert df["budget"].tolist() == [0, 16, 64, 0, 16, 64]
    assert (df.loc[df["budget"] == 0, "success_rate"] == 0.0).all()

# ── csv and plots ─────────────────────────────────────────────────────────────

def test_csv_provenance_round_trip(tmp_path):
    df = pd.DataFrame({"budget": [1, 2], "success_rate": [0.0, 0.5], "connected_rate": [0.0, 0.5],
                       "mean_edges_discovered": [3.0, 6.0], "trials": [4, 4]})
    path = write_csv(df, tmp_path / "game.csv", {"seed": 3}, trailer={"note": "x"})
    lines = path.read_text().splitlines()
    assert lines[0].startswith("# xp ")
    assert lines[1] == "# seed=3"
    table, meta = read_csv(path)
    assert table.equals(df)
    assert meta["seed"] == "3" and meta["note"] == "x"

def test_detect_schema():
    assert detect_schema(WALKS_COLUMNS) == "walks"
    assert detect_schema(SCALING_COLUMNS) == "scaling"
    with pytest.raises(SchemaError):
        detect_schema(["n", "median_visited"])

def test_emit_plots_for_scaling(tmp_path):
    config = load_config(experiment="bibfs_scaling", n_grid="64,128", pairs=3, lambda_source="exact")
    df, _ = exp_bibfs_scaling(config)
    csv = write_csv(df, tmp_path / "scaling.csv", config.provenance())
    script = emit_plots(csv)
    assert script.name == "scaling_plot.py"
    text = script.read_text()
    assert "loglog" in text
    compile(text, str(script), "exec")

def test_emit_plots_for_game(tmp_path):
    df = pd.DataFrame({"budget": [1], "success_rate": [0.0], "connected_rate": [0.0],
                       "mean_edges_discovered": [3.0], "trials": [1]})
    script = emit_plots(write_csv(df, tmp_path / "game.csv", {}), tmp_path / "out" / "game.py")
    assert 'groupby("n")' in script.read_text()

def test_emit_plots_rejects_bad_csvs(tmp_path):
    empty = tmp_path / "empty.csv"
    empty.write_text("")
    with pytest.raises(SchemaError):
        emit_plots(empty)
    header_only = write_csv(pd.DataFrame(columns=SCALING_COLUMNS), tmp_path / "header.csv", {})
    with pytest.raises(SchemaError):
        emit_plots(header_only)
    wrong = write_csv(pd.DataFrame({"n": [1], "median_visited": [2.0]}), tmp_path / "wrong.csv", {})
    with pytest.raises(SchemaError):
        emit_plots(wrong)
