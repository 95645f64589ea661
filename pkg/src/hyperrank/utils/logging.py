"""
Console and file logging.

Every module obtains its logger with `get_logger(__name__)`. Messages are written to
standard error so that tables printed by the CLI are not interleaved with them.
"""

import logging
from pathlib import Path
from typing import Optional, Union

LOGGERS: dict[str, logging.Logger] = {}

FORMAT = "%(message)s"


def _handlers(log_path: Optional[Union[str, Path]]) -> list[logging.Handler]:
    handlers: list[logging.Handler] = [logging.StreamHandler()]
    if log_path:
        handlers.append(logging.FileHandler(log_path))
    return handlers


def _configured_parent(name: str) -> Optional[logging.Logger]:
    parts = name.split(".")
    for depth in range(len(parts) - 1, 0, -1):
        parent = LOGGERS.get(".".join(parts[:depth]))
        if parent is not None:
            return parent
    return None


def get_logger(
    name: str,
    log_level: int = logging.INFO,
    log_path: Optional[Union[str, Path]] = None,
) -> logging.Logger:
    """
    Return the logger `name`, adding handlers the first time it is requested.

    Children of a configured logger (e.g. `hyperrank.solver` once `hyperrank` is
    configured) get no handlers of their own and propagate to it.

    Parameters
    ----------
    name : str
        Name of the logger.
    log_level : int, optional
        Log level (info, error etc.), by default logging.INFO.
    log_path : Optional[Union[str, Path]], optional
        Path in which to save the log, by default None.

    Returns
    -------
    logging.Logger
        Logger.
    """
    if name in LOGGERS:
        return LOGGERS[name]

    logger = logging.getLogger(name)
    if _configured_parent(name) is not None:
        logger.propagate = True
        return logger

    formatter = logging.Formatter(FORMAT)
    for handler in _handlers(log_path):
        handler.setFormatter(formatter)
        handler.setLevel(log_level)
        logger.addHandler(handler)

    logger.setLevel(log_level)
    logger.propagate = False
    LOGGERS[name] = logger

    return logger
