"""FastAPI application factory."""

import logging
from contextlib import asynccontextmanager

from fastapi import FastAPI

from rbtrees import __version__
from rbtrees.api.routes import router
from rbtrees.core import get_engine

logger = logging.getLogger(__name__)


@asynccontextmanager
async def lifespan(app: FastAPI):
    """Lifespan context manager for startup/shutdown events."""
    logger.info("Starting Rota-Baxter tree identities API...")
    yield
    logger.info("Shutting down; dropping %d memo entries", get_engine().table_size)
    get_engine().clear()


def create_app() -> FastAPI:
    """Create and configure FastAPI application."""
    app = FastAPI(
        title="Rota-Baxter Tree Identities",
        description="Normal forms, closed-form identities and model checks for trees T(a,b,c)",
        version=__version__,
        lifespan=lifespan,
    )

    app.include_router(router, prefix="/api/v1", tags=["identities"])

    return app
