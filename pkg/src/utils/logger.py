"""
Logging Utilities

Module: src.utils.logger
Purpose: Configure stdlib logging for the CLI and the verification runs
Status: Complete
Created: 2026-10-17

Library modules only call logging.getLogger(__name__); handlers are
attached here, once, by the entry point. Diagnostics go to stderr so
stdout stays reserved for results (JSON in particular).
"""

import logging
import sys
from typing import Optional, TextIO, Union

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

VALID_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")

_handler: Optional[logging.Handler] = None

def resolve_level(level: Union[str, int]) -> int:
    """
    Convert a level name or number to the logging module's integer level.

    Raises:
        ValueError: If the name is not a standard level name
    """
    if isinstance(level, int):
        return level
    name = level.upper()
    if name not in VALID_LEVELS:
        raise ValueError(
            f"Unknown log level: '{level}'. Must be one of: {', '.join(VALID_LEVELS)}"
        )
    return getattr(logging, name)

def setup_logging(level: Union[str, int] = "WARNING", stream: TextIO = None) -> logging.Logger:
    """
    Attach a single stream handler to the project logger.

    Repeated calls only change the level, so tests and the CLI can call
    this freely.

    Args:
        level: Level name or number
        stream: Destination (default: sys.stderr)

    Returns:
        The configured project logger ("src")
    """
    global _handler

    root = logging.getLogger("src")
    root.setLevel(resolve_level(level))

    if _handler is None:
        _handler = logging.StreamHandler(stream or sys.stderr)
        _handler.setFormatter(logging.Formatter(LOG_FORMAT))
        root.addHandler(_handler)
    elif stream is not None:
        _handler.setStream(stream)

    return root


__all__ = ["LOG_FORMAT", "VALID_LEVELS", "resolve_level", "setup_logging"]
