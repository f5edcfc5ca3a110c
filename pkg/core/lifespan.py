from contextlib import asynccontextmanager, AsyncExitStack
from fastapi import FastAPI
from core.config import get_settings
from common.logger import logger, CustomLogger
from graph_store import GraphStore

@asynccontextmanager
async def lifespan(app: FastAPI):
    """
    Manages the service's startup and shutdown events.
    Uses the AsyncExitStack to clean up resources.
    Register resources to the app state to be used as dependencies.

    NOTE:
    - the graph store is purely in-memory, shutdown only drops the cached graphs
    - XP_GRAPH_DIR (optional) names a directory of graph files preloaded at startup
    """
    # default start up message
    logger.info(f"Starting expander path service!")

    settings = get_settings()
    CustomLogger.set_level(settings.XP_LOG_LEVEL)

    async with AsyncExitStack() as stack:

        # graph store, LRU over materialized graphs
        graph_store = GraphStore(max_size=settings.XP_GRAPH_CACHE_MAX)
        if settings.XP_GRAPH_DIR is not None:
            graph_store.load_dir(settings.XP_GRAPH_DIR)
        app.state.graph_store = graph_store
        stack.callback(graph_store.clear)
        logger.info(f"Graph store initialized (capacity={settings.XP_GRAPH_CACHE_MAX}).")

        # lets FastAPI process requests during yield
        yield

        logger.info("Shutting down service resources...")

    # The AsyncExitStack calls the registered cleanup callbacks in reverse order.
    logger.info("All global resources have been gracefully closed.")
