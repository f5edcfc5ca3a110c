from fastapi import Request
from graph_store import GraphStore

# conveniently return any app lifetime dependencies to be used in routes
def get_graph_store(request: Request) -> GraphStore:
    """
    FastAPI dependency to get the shared GraphStore from the application state.
    """
    return request.app.state.graph_store
