# shared fixtures: small graphs with known structure, and a sealed mode in which every
# public adjacency read of Graph fails, so searches are forced through the query oracle
import pytest

from common.logger import logger
from core.config import get_settings
from generators.deterministic import complete_graph, cycle_graph, petersen_graph, star_graph
from generators.random_graphs import gen_random_regular
from graph.model import Graph

@pytest.fixture
def c6() -> Graph:
    return cycle_graph(6)

@pytest.fixture
def k4() -> Graph:
    return complete_graph(4)

@pytest.fixture
def petersen() -> Graph:
    return petersen_graph()

@pytest.fixture
def star5() -> Graph:
    return star_graph(5)

@pytest.fixture(scope="session")
def cubic_128() -> Graph:
    return gen_random_regular(128, 3, seed=3)

@pytest.fixture
def sealed(monkeypatch):
    """Request after the graph fixtures; any public neighbor read then raises."""

    def _blocked(*args, **kwargs):
        raise AssertionError("public adjacency read outside the query oracle")

    for name in ("neighbors", "has_edge", "edges", "adjacency_matrix"):
        monkeypatch.setattr(Graph, name, _blocked)

@pytest.fixture(autouse=True)
def _fresh_settings():
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()

@pytest.fixture
def xp_log(caplog):
    """caplog wired to the toolkit logger, which does not propagate to the root logger."""
    logger.addHandler(caplog.handler)
    caplog.set_level("INFO")
    yield caplog
    logger.removeHandler(caplog.handler)
