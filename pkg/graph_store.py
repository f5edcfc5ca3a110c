# registry of materialized graphs shared by the HTTP service
from __future__ import annotations

from collections import OrderedDict
from pathlib import Path
from typing import Literal

from pydantic import BaseModel

from common.logger import logger
from core.errors import ParameterError
from generators.deterministic import complete_graph, cycle_graph, gen_margulis_expander, petersen_graph
from generators.random_graphs import gen_erdos_renyi, gen_random_regular
from graph.io import load_graph
from graph.model import Graph

GraphModelName = Literal["er", "regular", "margulis", "cycle", "complete", "petersen"]

class GraphSummary(BaseModel):
    id: str
    n: int
    m: int
    regular_degree: int | None
    fingerprint: str

class GraphStore:
    """
    Keeps recently used graphs in memory (LRU via OrderedDict).

    NOTE:
    - generated graphs are keyed "<model>::<params>::<seed>"; generation is a pure function
      of the key, so an evicted entry is simply regenerated on the next request
    - graphs loaded from files are keyed "file::<name>" and are dropped for good on eviction
    """

    def __init__(self, max_size: int = 16):
        if max_size < 1:
            raise ParameterError(f"graph store needs room for at least one graph, got {max_size}")
        self._graphs: OrderedDict[str, Graph] = OrderedDict()
        self._max_size = max_size

    # utils
    @staticmethod
    def make_key(model: str, params: dict[str, object], seed: int) -> str:
        """
        Canonical key: parameters sorted by name, unset ones left out.
        """
        rendered = ",".join(f"{k}={v}" for k, v in sorted(params.items()) if v is not None)
        return f"{model}::{rendered}::{seed}"

    def _put(self, key: str, graph: Graph) -> None:
        if key in self._graphs:
            self._graphs.move_to_end(key)
        self._graphs[key] = graph
        if len(self._graphs) > self._max_size:
            evicted, _ = self._graphs.popitem(last=False)  # evict LRU
            logger.info(f"[graph_store] evicted {evicted}")

    def __len__(self) -> int:
        return len(self._graphs)

    def __contains__(self, key: str) -> bool:
        return key in self._graphs

    def get(self, key: str) -> Graph:
        """The graph stored under key; raises KeyError when it is unknown."""
        graph = self._graphs[key]
        self._graphs.move_to_end(key)
        return graph

    def summary(self, key: str) -> GraphSummary:
        graph = self.get(key)
        return GraphSummary(id=key, n=graph.n, m=graph.m, regular_degree=graph.regular_degree,
                            fingerprint=graph.fingerprint())

    def keys(self) -> list[str]:
        return list(self._graphs)

    def clear(self) -> int:
        count = len(self._graphs)
        self._graphs.clear()
        return count

    def generate(
        self,
        model: GraphModelName,
        *,
        n: int | None = None,
        p: float | None = None,
        d: int | None = None,
        m: int | None = None,
        seed: int = 0,
    ) -> str:
        """Materializes (or reuses) the graph for these parameters and returns its key."""
        params = {"n": n, "p": p, "d": d, "m": m}
        key = self.make_key(model, params, seed)
        if key in self._graphs:
            logger.info(f"[graph_store] hit {key}")
            self._graphs.move_to_end(key)
            return key
        self._put(key, materialize(model, n=n, p=p, d=d, m=m, seed=seed))
        logger.info(f"[graph_store] stored {key}")
        return key

    def load_dir(self, directory: str | Path) -> list[str]:
        """Loads every *.txt / *.xpgr graph in directory, in name order."""
        directory = Path(directory)
        loaded = []
        for path in sorted(directory.glob("*")):
            if path.suffix not in (".txt", ".xpgr"):
                continue
            key = f"file::{path.name}"
            self._put(key, load_graph(path))
            loaded.append(key)
        logger.info(f"[graph_store] preloaded {len(loaded)} graph(s) from {directory}")
        return loaded

def _require(value, name: str, model: str):
    if value is None:
        raise ParameterError(f"model {model!r} needs parameter {name}")
    return value

def materialize(model: str, *, n=None, p=None, d=None, m=None, seed: int = 0) -> Graph:
    """Builds the graph a store key stands for."""
    if model == "er":
        return gen_erdos_renyi(_require(n, "n", model), _require(p, "p", model), seed)
    if model == "regular":
        return gen_random_regular(_require(n, "n", model), _require(d, "d", model), seed)
    if model == "margulis":
        return gen_margulis_expander(_require(m, "m", model))
    if model == "cycle":
        return cycle_graph(_require(n, "n", model))
    if model == "complete":
        return complete_graph(_require(n, "n", model))
    if model == "petersen":
        return petersen_graph()
    raise ParameterError(f"unknown graph model {model!r}")
