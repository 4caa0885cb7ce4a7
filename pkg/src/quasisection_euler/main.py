import logging

from fastapi import FastAPI

from .api import health
from .api.routes.euler import router as euler_router
from .api.routes.gallery import router as gallery_router
from .api.routes.portraits import router as portraits_router
from .api.routes.uniqueness import router as uniqueness_router
from .api.routes.weights import router as weights_router
from .logging_setup import setup_logging

setup_logging()
logger = logging.getLogger(__name__)

app = FastAPI(title="Quasisection Euler")

# Подключаем роуты
app.include_router(health.router)
app.include_router(weights_router)
app.include_router(portraits_router)
app.include_router(gallery_router)
app.include_router(euler_router)
app.include_router(uniqueness_router)


@app.on_event("startup")
async def on_startup():
    logger.info("Application started")


@app.on_event("shutdown")
async def on_shutdown():
    logger.info("Application stopped")
