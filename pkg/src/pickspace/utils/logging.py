"""Logging utility functions."""

import logging
import sys

from ..config.settings import DEFAULT_LOG_FORMAT, LogLevel, Settings


def setup_logging(
    name: str = "pickspace",
    level: LogLevel | None = None,
) -> logging.Logger:
    """Set up and configure logging.

    Reports go to standard output, so log records are written to standard error. Settings
    are not read here since loggers are created at import time; ``configure_logging``
    applies them once they are loaded.

    Args:
        name: Logger name
        level: Log level (defaults to WARNING)

    Returns:
        logging.Logger: Configured logger
    """
    log_level = level or LogLevel.WARNING

    logger = logging.getLogger(name)
    logger.setLevel(log_level.value)

    if not logger.handlers:
        handler = logging.StreamHandler(sys.stderr)
        handler.setLevel(log_level.value)
        handler.setFormatter(logging.Formatter(DEFAULT_LOG_FORMAT))
        logger.addHandler(handler)
        logger.propagate = False

    return logger


def _toolkit_loggers() -> list[logging.Logger]:
    return [
        logging.getLogger(name)
        for name in list(logging.root.manager.loggerDict)
        if name == "pickspace" or name.startswith("pickspace.")
    ]


def set_level(level: LogLevel) -> None:
    """Change the level of every toolkit logger already created.

    Args:
        level: New log level
    """
    for logger in _toolkit_loggers():
        logger.setLevel(level.value)
        for handler in logger.handlers:
            handler.setLevel(level.value)


def configure_logging(settings: Settings, level: LogLevel | None = None) -> None:
    """Apply the level and format of loaded settings to every toolkit logger.

    Args:
        settings: Validated settings
        level: Level overriding the one from settings
    """
    formatter = logging.Formatter(settings.log_format)
    for logger in _toolkit_loggers():
        for handler in logger.handlers:
            handler.setFormatter(formatter)
    set_level(level or settings.log_level)
