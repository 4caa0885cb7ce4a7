import logging
from logging.config import fileConfig
from pathlib import Path

from .config import settings

LOGGING_INI = Path(__file__).resolve().parents[2] / "logging.ini"


def setup_logging(level: str | None = None) -> None:
    """
    Настраивает логирование: logging.ini из корня проекта, если он есть,
    иначе basicConfig с уровнем из настроек.
    """
    if LOGGING_INI.exists():
        fileConfig(LOGGING_INI, disable_existing_loggers=False)
    else:
        logging.basicConfig(format="%(levelname)-5.5s [%(name)s] %(message)s")
    logging.getLogger("quasisection_euler").setLevel(level or settings.LOG_LEVEL)
