# graph routes: generate graphs into the store, then validate / measure / search them
from typing import Literal

from fastapi import APIRouter, Depends, HTTPException, Query
from pydantic import BaseModel, Field

from common.logger import logger
from common.timer import timer
from core.dependencies import get_graph_store
from core.errors import ParameterError
from graph.model import Graph, PathResult, QueryCounts
from graph.oracle import QueryOracle
from graph.validation import ValidationReport, validate
from graph_store import GraphModelName, GraphStore, GraphSummary
from pathfind.bfs import bfs_shortest_path
from pathfind.bidirectional import bidirectional_bfs
from pathfind.walks import WalkParams, bfs_plus_walks
from spectral.estimators import SpectralReport, lambda_exact, lambda_power, ramanujan_threshold

router = APIRouter(prefix="/graphs", tags=["Graphs"])

# request / response bodies using pydantic
class GenerateRequest(BaseModel):
    model: GraphModelName
    n: int | None = Field(default=None, ge=1)
    p: float | None = None
    d: int | None = Field(default=None, ge=1)
    m: int | None = Field(default=None, ge=1)
    seed: int = Field(default=0, ge=0)

class PathResponse(BaseModel):
    graph_id: str
    algo: str
    s: int
    t: int
    result: PathResult
    queries: QueryCounts
    elapsed_ms: float

def _lookup(store: GraphStore, graph_id: str) -> Graph:
    try:
        return store.get(graph_id)
    except KeyError:
        raise HTTPException(status_code=404, detail=f"unknown graph {graph_id!r}") from None

@router.post("/generate", response_model=GraphSummary)
def generate_graph(body: GenerateRequest, store: GraphStore = Depends(get_graph_store)):
    logger.info(f"[graphs/generate] {body.model_dump()}")
    key = store.generate(body.model, n=body.n, p=body.p, d=body.d, m=body.m, seed=body.seed)
    return store.summary(key)

@router.get("", response_model=list[GraphSummary])
def list_graphs(store: GraphStore = Depends(get_graph_store)):
    return [store.summary(key) for key in store.keys()]

@router.get("/{graph_id}/validate", response_model=ValidationReport)
def validate_graph(graph_id: str, store: GraphStore = Depends(get_graph_store)):
    return validate(_lookup(store, graph_id))

@router.get("/{graph_id}/spectral", response_model=SpectralReport)
def spectral_graph(
    graph_id: str,
    method: Literal["exact", "power"] = "exact",
    store: GraphStore = Depends(get_graph_store),
):
    graph = _lookup(store, graph_id)
    logger.info(f"[graphs/spectral] {graph_id} method={method}")
    return lambda_exact(graph) if method == "exact" else lambda_power(graph)

@router.get("/{graph_id}/path", response_model=PathResponse)
def path_graph(
    graph_id: str,
    algo: Literal["bibfs", "bfswalks", "bfs"] = "bibfs",
    s: int = Query(default=0, ge=0),
    t: int | None = Query(default=None, ge=0, description="defaults to n - 1"),
    delta: float = Query(default=0.1, gt=0.0, lt=1.0),
    lambda_: float | None = Query(default=None, gt=0.0, description="defaults to 2 sqrt(d - 1)"),
    seed: int = Query(default=0, ge=0),
    store: GraphStore = Depends(get_graph_store),
):
    graph = _lookup(store, graph_id)
    t = graph.n - 1 if t is None else t
    oracle = QueryOracle(graph, record_visits=False)
    logger.info(f"[graphs/path] {graph_id} algo={algo} s={s} t={t}")

    with timer(f"path {algo}", log=False) as sw:
        if algo == "bibfs":
            result = bidirectional_bfs(oracle, s, t)
        elif algo == "bfswalks":
            d = graph.regular_degree
            if d is None:
                raise ParameterError("bfswalks needs a regular graph")
            lam = lambda_ if lambda_ is not None else ramanujan_threshold(d)
            params = WalkParams.from_spectrum(graph.n, d, lam, delta, enforce_hypothesis=False)
            result = bfs_plus_walks(oracle, s, t, params, seed)
        else:
            result = bfs_shortest_path(oracle, s, t)

    return PathResponse(graph_id=graph_id, algo=algo, s=s, t=t, result=result,
                        queries=oracle.snapshot(), elapsed_ms=round(sw.elapsed_ms, 2))

@router.post("/clear")
def clear_graphs(store: GraphStore = Depends(get_graph_store)):
    cleared = store.clear()
    logger.info(f"[graphs/clear] dropped {cleared} graph(s)")
    return {"cleared": cleared}
