# the `xp` command line, driven through click's test runner
import json

import pytest
from click.testing import CliRunner

from bench.output import read_csv
from cli import EXIT_CONFIG, EXIT_ERROR, cli
from generators.matching import gen_matching_model
from graph.io import read_matching

@pytest.fixture
def runner() -> CliRunner:
    return CliRunner()

@pytest.fixture
def petersen_file(runner, tmp_path):
    path = tmp_path / "petersen.txt"
    result = runner.invoke(cli, ["gen", "--model", "petersen", "--out", str(path)])
    assert result.exit_code == 0, result.output
    return path

def _json(output: str) -> dict:
    return json.loads(output[output.index("{"):])

def test_gen_writes_a_graph(runner, tmp_path):
    path = tmp_path / "ring.xpgr"
    result = runner.invoke(cli, ["gen", "--model", "cycle", "--n", "6", "--out", str(path)])
    assert result.exit_code == 0
    payload = _json(result.output)
    assert payload["n"] == 6 and payload["m"] == 6 and payload["regular_degree"] == 2
    assert path.is_file()

def test_gen_missing_parameter_exits_2(runner, tmp_path):
    result = runner.invoke(cli, ["gen", "--model", "regular", "--n", "10", "--out", str(tmp_path / "g.txt")])
    assert result.exit_code == EXIT_CONFIG

def test_gen_matching_model(runner, tmp_path):
    path = tmp_path / "m42.txt"
    result = runner.invoke(cli, ["gen", "--model", "matching", "--n", "4", "--d", "2", "--seed", "3", "--out", str(path)])
    assert result.exit_code == 0, result.output
    payload = _json(result.output)
    assert payload["n"] == 4 and payload["d"] == 2 and payload["pairs"] == 4
    mg = read_matching(path)
    assert mg == gen_matching_model(4, 2, 3)
    lines = path.read_text().splitlines()
    assert lines[0] == "matching 4 2"
    assert len(lines) == 5

def test_gen_matching_needs_even_nd(runner, tmp_path):
    result = runner.invoke(cli, ["gen", "--model", "matching", "--n", "3", "--d", "3", "--out", str(tmp_path / "m.txt")])
    assert result.exit_code == EXIT_CONFIG

def test_gen_model_is_an_option(runner, tmp_path):
    positional = runner.invoke(cli, ["gen", "petersen", "--out", str(tmp_path / "p.txt")])
    assert positional.exit_code != 0

def test_spectral(runner, petersen_file):
    result = runner.invoke(cli, ["spectral", str(petersen_file), "--method", "exact"])
    assert result.exit_code == 0
    report = _json(result.output)
    assert report["lambda_est"] == pytest.approx(2.0)
    assert report["is_ramanujan"] is True

def test_path(runner, petersen_file):
    result = runner.invoke(cli, ["path", str(petersen_file), "--s", "0", "--t", "7"])
    assert result.exit_code == 0
    payload = _json(result.output)
    assert payload["result"]["status"] == "Found"
    assert payload["result"]["length"] == 2
    assert payload["queries"]["total"] == payload["result"]["query_count"]

def test_path_errors(runner, petersen_file):
    same = runner.invoke(cli, ["path", str(petersen_file), "--s", "3", "--t", "3"])
    assert same.exit_code == EXIT_CONFIG
    outside = runner.invoke(cli, ["path", str(petersen_file), "--t", "10"])
    assert outside.exit_code == EXIT_ERROR

def test_bounds_csv(runner, petersen_file, tmp_path):
    out = tmp_path / "bounds.csv"
    result = runner.invoke(cli, ["bounds", str(petersen_file), "--sources", "2", "--walk-sets", "2", "--out", str(out)])
    assert result.exit_code == 0
    df, meta = read_csv(out)
    assert meta["command"] == "bounds"
    assert _json(result.output)["violations"] == 0
    assert len(df) == _json(result.output)["rows"]

def test_game_prints_csv(runner):
    result = runner.invoke(cli, ["game", "--n", "64", "--budgets", "0,500", "--trials", "5"])
    assert result.exit_code == 0
    lines = result.output.strip().splitlines()
    assert lines[0] == "budget,success_rate,connected_rate,mean_edges_discovered,trials"
    assert len(lines) == 3

def test_game_unknown_strategy(runner):
    result = runner.invoke(cli, ["game", "--n", "64", "--budgets", "5", "--strategy", "dfs"])
    assert result.exit_code == EXIT_ERROR

def test_exp_with_config_and_flags(runner, tmp_path):
    config = tmp_path / "scaling.env"
    config.write_text("EXPERIMENT=bibfs_scaling\nN_GRID=64,128\nPAIRS=4\nLAMBDA_SOURCE=exact\n")
    out = tmp_path / "scaling.csv"
    result = runner.invoke(cli, ["exp", "--config", str(config), "--pairs", "3", "--output", str(out)])
    assert result.exit_code == 0, result.output
    df, meta = read_csv(out)
    assert meta["pairs"] == "3"
    assert "slope" in meta
    assert df["n"].tolist() == [64, 128]

def test_exp_bad_config_exits_2(runner, tmp_path):
    config = tmp_path / "bad.env"
    config.write_text("EXPERIMENT=bibfs_scaling\nN_GRID=128,64\n")
    result = runner.invoke(cli, ["exp", "--config", str(config)])
    assert result.exit_code == EXIT_CONFIG
    assert "n_grid" in result.output

def test_plots(runner, tmp_path):
    empty = tmp_path / "empty.csv"
    empty.write_text("")
    assert runner.invoke(cli, ["plots", str(empty)]).exit_code == EXIT_ERROR
