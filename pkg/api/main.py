# api/main.py

"""Hybrid Tucker API - entry point"""

from contextlib import asynccontextmanager
from datetime import datetime, timezone

import uvicorn
from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from api import __version__
from api.routes import analysis, decompositions, health
from utils.config_loader import config
from utils.logger import logger


@asynccontextmanager
async def lifespan(app: FastAPI):
    limit = config.get("api", "max_entries", default=8_000_000)
    logger.info(f"🚀 Hybrid Tucker API {__version__} starting (max_entries={limit})")
    yield
    logger.info("🛑 Hybrid Tucker API shutting down...")


app = FastAPI(
    title="Hybrid Tucker API",
    description="Hybrid CUR-type Tucker decompositions and their error bounds",
    version=__version__,
    lifespan=lifespan,
)

for router in (health.router, decompositions.router, analysis.router):
    app.include_router(router)


def _error_body(detail: str) -> dict:
    return {"detail": detail, "timestamp": datetime.now(timezone.utc).isoformat()}


@app.exception_handler(Exception)
async def global_exception_handler(request: Request, exc: Exception):
    logger.error(f"❌ Unhandled exception on {request.url.path}: {exc}")
    return JSONResponse(status_code=500, content=_error_body("Internal server error"))


if __name__ == "__main__":
    uvicorn.run(
        "api.main:app",
        host=config.get("api", "host", default="0.0.0.0"),
        port=int(config.get("api", "port", default=8000)),
        reload=True,
    )
