# `xp` command line: generate graphs, measure them, search them, play query games and run
# the desk-scale experiments
# usage: python cli.py --help
import functools
import json
import uuid
from pathlib import Path

import click

from common.logger import CustomLogger, logger, run_id_var
from core.config import get_settings
from core.errors import ConfigError, ParameterError, XPError

# exit codes
EXIT_ERROR = 1
EXIT_CONFIG = 2

def _csv_list(cast):
    def convert(ctx, param, value):
        if value is None:
            return None
        try:
            return [cast(part.strip()) for part in value.split(",") if part.strip()]
        except ValueError as exc:
            raise click.BadParameter(f"expected a comma-separated list, got {value!r}") from exc
    return convert

def _echo_json(payload) -> None:
    if hasattr(payload, "model_dump_json"):
        click.echo(payload.model_dump_json(indent=2))
    else:
        click.echo(json.dumps(payload, indent=2, sort_keys=True, default=str))

def handle_errors(func):
    """Maps toolkit errors to exit codes: config/parameter problems 2, everything else 1."""
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        ctx = click.get_current_context()
        run_id_var.set(f"cli:{ctx.info_name}:{uuid.uuid4().hex[:8]}")
        try:
            return func(*args, **kwargs)
        except (ConfigError, ParameterError) as exc:
            click.echo(f"error: {exc}", err=True)
            ctx.exit(EXIT_CONFIG)
        except XPError as exc:
            click.echo(f"error: {type(exc).__name__}: {exc}", err=True)
            ctx.exit(EXIT_ERROR)
    return wrapper

@click.group(name="xp")
@click.option("--log-level", default=None, help="Overrides XP_LOG_LEVEL.")
def cli(log_level):
    """Sublinear s-t paths on expander graphs: generators, spectra, searches, bounds, games."""
    CustomLogger.set_level((log_level or get_settings().XP_LOG_LEVEL).upper())

# ── graphs ────────────────────────────────────────────────────────────────────

@cli.command()
@click.option("--model", required=True,
              type=click.Choice(["er", "regular", "matching", "margulis", "cycle", "complete", "petersen"]))
@click.option("--n", type=int)
@click.option("--p", type=float)
@click.option("--d", type=int)
@click.option("--m", type=int, help="Margulis torus side; n = m^2.")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--out", type=click.Path(dir_okay=False, path_type=Path), required=True,
              help="Graph file; .xpgr/.bin is binary, anything else an edge list. "
                   "Matching graphs are always written as half-node pairs.")
@handle_errors
def gen(model, n, p, d, m, seed, out):
    """Generate a graph of --model and write it to OUT."""
    from graph.io import save_graph, write_matching
    from graph_store import materialize

    if model == "matching":
        from generators.matching import gen_matching_model

        if n is None or d is None:
            raise ParameterError("model 'matching' needs parameters n and d")
        mg = gen_matching_model(n, d, seed)
        write_matching(mg, out)
        _echo_json({"path": str(out), "model": model, "n": mg.n, "d": mg.d, "pairs": len(mg.pairs())})
        return
    graph = materialize(model, n=n, p=p, d=d, m=m, seed=seed)
    save_graph(graph, out)
    _echo_json({"path": str(out), "model": model, "n": graph.n, "m": graph.m,
                "regular_degree": graph.regular_degree, "fingerprint": graph.fingerprint()})

@cli.command()
@click.argument("graph_file", type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.option("--method", type=click.Choice(["auto", "exact", "power"]), default="auto", show_default=True)
@click.option("--tol", type=float, help="Power-iteration tolerance, relative to d.")
@click.option("--max-iter", type=int)
@click.option("--seed", type=int)
@handle_errors
def spectral(graph_file, method, tol, max_iter, seed):
    """Estimate lambda = max(|lambda_2|, |lambda_n|) of GRAPH_FILE."""
    from graph.io import load_graph
    from spectral.estimators import estimate_lambda, lambda_exact, lambda_power

    graph = load_graph(graph_file)
    if method == "exact":
        report = lambda_exact(graph)
    elif method == "power":
        report = lambda_power(graph, tol=tol, max_iter=max_iter, seed=seed)
    else:
        report = estimate_lambda(graph, tol=tol, max_iter=max_iter, seed=seed)
    _echo_json(report)

@cli.command()
@click.argument("graph_file", type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.option("--algo", type=click.Choice(["bibfs", "bfswalks", "bfs"]), default="bibfs", show_default=True)
@click.option("--s", "s", type=int, default=0, show_default=True)
@click.option("--t", "t", type=int, help="Defaults to n - 1.")
@click.option("--delta", type=float, default=0.1, show_default=True)
@click.option("--lambda", "lambda_", type=float, help="Defaults to 2 sqrt(d - 1).")
@click.option("--seed", type=int, default=0, show_default=True)
@handle_errors
def path(graph_file, algo, s, t, delta, lambda_, seed):
    """Search an s-t path in GRAPH_FILE through the metered oracle."""
    from graph.io import load_graph
    from graph.oracle import QueryOracle
    from pathfind.bfs import bfs_shortest_path
    from pathfind.bidirectional import bidirectional_bfs
    from pathfind.walks import WalkParams, bfs_plus_walks
    from spectral.estimators import ramanujan_threshold

    graph = load_graph(graph_file)
    t = graph.n - 1 if t is None else t
    oracle = QueryOracle(graph, record_visits=False)
    if algo == "bibfs":
        result = bidirectional_bfs(oracle, s, t)
    elif algo == "bfs":
        result = bfs_shortest_path(oracle, s, t)
    else:
        d = graph.regular_degree
        if d is None:
            raise ParameterError("bfswalks needs a regular graph")
        lam = lambda_ if lambda_ is not None else ramanujan_threshold(d)
        params = WalkParams.from_spectrum(graph.n, d, lam, delta, enforce_hypothesis=False)
        result = bfs_plus_walks(oracle, s, t, params, seed)
    _echo_json({"s": s, "t": t, "algo": algo, "result": result.model_dump(mode="json"),
                "queries": oracle.snapshot().model_dump()})

# ── bounds and games ──────────────────────────────────────────────────────────

@cli.command()
@click.argument("graph_file", type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.option("--lambda", "lambda_", type=float, help="Defaults to the exact eigensolve.")
@click.option("--sources", type=int, default=8, show_default=True)
@click.option("--walk-sets", type=int, default=10, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--out", type=click.Path(dir_okay=False, path_type=Path), required=True)
@handle_errors
def bounds(graph_file, lambda_, sources, walk_sets, seed, out):
    """Every (n, d, lambda) bound next to its exact value on GRAPH_FILE, as CSV."""
    from bench.output import write_csv
    from bounds.report import bound_report, count_violations
    from graph.io import load_graph

    graph = load_graph(graph_file)
    df = bound_report(graph, lam=lambda_, sources=sources, walk_sets=walk_sets, seed=seed)
    write_csv(df, out, {"command": "bounds", "graph": graph_file.name, "lambda": lambda_,
                        "sources": sources, "walk_sets": walk_sets, "seed": seed})
    _echo_json({"path": str(out), "rows": len(df), "violations": count_violations(df)})

@cli.command()
@click.option("--model", type=click.Choice(["er", "regular", "matching"]), default="regular", show_default=True)
@click.option("--n", type=int, required=True)
@click.option("--d", type=int, default=3, show_default=True)
@click.option("--p", type=float, help="ER edge probability; defaults to 2 ln(n)/n.")
@click.option("--strategy", default="bibfs", show_default=True)
@click.option("--budgets", callback=_csv_list(int), required=True, help="Comma-separated query budgets.")
@click.option("--trials", type=int, default=100, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--out", type=click.Path(dir_okay=False, path_type=Path))
@handle_errors
def game(model, n, d, p, strategy, budgets, trials, seed, out):
    """Success and connected-trace rates of a strategy against query budgets."""
    from bench.output import write_csv
    from querygame.game import success_vs_budget
    from querygame.models import make_model
    from querygame.strategies import get_strategy

    graph_model = make_model(model, n, d=d, p=p)
    df = success_vs_budget(get_strategy(strategy), graph_model, budgets, trials, seed)
    if out is not None:
        write_csv(df, out, {"command": "game", **graph_model.describe(), "strategy": strategy,
                            "trials": trials, "seed": seed})
    click.echo(df.to_csv(index=False), nl=False)

# ── experiments ───────────────────────────────────────────────────────────────

@cli.command()
@click.option("--config", "config_path", type=click.Path(dir_okay=False, path_type=Path),
              help="Flat key=value experiment file; flags override its keys.")
@click.option("--experiment", type=click.Choice(["bibfs_scaling", "walks_success", "lower_bound"]))
@click.option("--model", type=click.Choice(["regular", "margulis", "er", "matching"]))
@click.option("--d", type=int)
@click.option("--p", type=float)
@click.option("--method", type=click.Choice(["configuration", "pairing", "auto"]))
@click.option("--n-grid", callback=_csv_list(int))
@click.option("--pairs", type=int)
@click.option("--trials", type=int)
@click.option("--seed", type=int)
@click.option("--output", type=click.Path(dir_okay=False, path_type=Path))
@click.option("--deltas", callback=_csv_list(float))
@click.option("--lambda-source", type=click.Choice(["power", "exact", "proxy"]))
@click.option("--strategies", callback=_csv_list(str))
@click.option("--budget-factors", callback=_csv_list(float))
@click.option("--workers", type=int)
@click.option("--summary", type=click.Path(dir_okay=False, path_type=Path), help="Also write the JSON summary here.")
@handle_errors
def exp(config_path, summary, **flags):
    """Run one desk-scale experiment and write its CSV."""
    from bench.config import load_config
    from bench.experiments import run_experiment
    from bench.output import write_csv, write_json

    config = load_config(config_path, **flags)
    df, result = run_experiment(config)
    trailer = {"slope": result["slope"]} if "slope" in result else None
    if config.output is not None:
        write_csv(df, config.output, config.provenance(), trailer)
    else:
        click.echo(df.to_csv(index=False), nl=False)
    if summary is not None:
        write_json({**result, "config": config.provenance()}, summary)
    logger.info(f"[exp] {config.experiment}: {result}")
    if config.output is not None:
        _echo_json(result)

@cli.command()
@click.argument("csv_file", type=click.Path(dir_okay=False, path_type=Path))
@click.option("--out", type=click.Path(dir_okay=False, path_type=Path), help="Defaults to <csv>_plot.py.")
@handle_errors
def plots(csv_file, out):
    """Write a matplotlib script that plots CSV_FILE."""
    from bench.plots import emit_plots

    click.echo(str(emit_plots(csv_file, out)))

if __name__ == "__main__":
    cli()
