"""
Logging Setup

Installs the console (and optional file) handlers for the hardy-verify
loggers from Settings.log_level and Settings.log_file.
"""

import logging
from pathlib import Path
from typing import Optional

from ..config import Settings, settings as default_settings

CONSOLE_FORMAT = "%(levelname)-5.5s [%(name)s] %(message)s"
FILE_FORMAT = "%(asctime)s " + CONSOLE_FORMAT

ROOT_LOGGER = "src"


def configure_logging(
    config: Optional[Settings] = None,
    level: Optional[str] = None
) -> logging.Logger:
    """
    Configure the package logger.

    Args:
        config: Settings to read log_level and log_file from
        level: Explicit level overriding the settings

    Returns:
        The configured package logger
    """
    config = config or default_settings
    logger = logging.getLogger(ROOT_LOGGER)
    logger.setLevel((level or config.log_level).upper())

    for handler in list(logger.handlers):
        logger.removeHandler(handler)
        handler.close()

    console = logging.StreamHandler()
    console.setFormatter(logging.Formatter(CONSOLE_FORMAT))
    logger.addHandler(console)

    if config.log_file:
        path = Path(config.log_file)
        path.parent.mkdir(parents=True, exist_ok=True)
        file_handler = logging.FileHandler(path)
        file_handler.setFormatter(logging.Formatter(FILE_FORMAT))
        logger.addHandler(file_handler)

    return logger
