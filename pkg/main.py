# main FastAPI app

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from typing import Any
from common.logger import logger
from core.errors import XPError, BudgetError, ConvergenceError, NodeIndexError
from core.lifespan import lifespan

# logging middleware
from core.logging_middleware import LoggingMiddleware

# API / routes
from api.graph_routes import router as graph_router

# allow docs for testing
docs_config: dict[str, Any] = {
    "docs_url": "/docs",
    "redoc_url": "/redoc",
    "openapi_url": "/openapi.json"
}

# main app, asgi entrypoint
app = FastAPI(
    title="Expander-Paths",
    description="Sublinear s-t path search on expander graphs under metered query access",
    version="0.1.0",
    lifespan=lifespan,
    **docs_config,
)

# add CORS middleware
app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)

# add logging middleware for requests
app.add_middleware(LoggingMiddleware)

# toolkit errors become 4xx JSON bodies
_STATUS_BY_ERROR: list[tuple[type[XPError], int]] = [
    (NodeIndexError, 404),
    (BudgetError, 413),
    (ConvergenceError, 422),
]

@app.exception_handler(XPError)
async def xp_error_handler(request: Request, exc: XPError) -> JSONResponse:
    status = next((code for cls, code in _STATUS_BY_ERROR if isinstance(exc, cls)), 400)
    body: dict[str, Any] = {"error": type(exc).__name__, "detail": str(exc)}
    if isinstance(exc, ConvergenceError):
        body["best_estimate"] = exc.best_estimate
    logger.warning(f"[http] {request.url.path} -> {status} {type(exc).__name__}: {exc}")
    return JSONResponse(status_code=status, content=body)

# graph routes
app.include_router(graph_router)

# health endpoint
@app.get("/", tags=["Application"])
async def root():
    return {"message": "expander path service"}
