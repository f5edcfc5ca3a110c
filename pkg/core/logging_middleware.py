import uuid
from starlette.middleware.base import BaseHTTPMiddleware, RequestResponseEndpoint
from starlette.requests import Request
from starlette.responses import Response
from common.logger import run_id_var

class LoggingMiddleware(BaseHTTPMiddleware):
    async def dispatch(
        self, request: Request, call_next: RequestResponseEndpoint
    ) -> Response:
        """
        This middleware is called for every incoming HTTP request.
        It generates a unique ID and sets it as the run id of the request's log records.
        """
        request_id = str(uuid.uuid4())
        token = run_id_var.set(f"request_id:{request_id}")
        try:
            response = await call_next(request)
        finally:
            run_id_var.reset(token)

        # Add the request ID to the response headers so it can be traced
        # from the client or in logs from other systems (like a load balancer)
        response.headers["X-Request-ID"] = request_id
        return response
