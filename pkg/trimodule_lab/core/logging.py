"""
Structured logging for the trimodule lab.

Reports are printed on stdout, so log events always go to stderr. Events
emitted while an acceptance criterion runs carry its identifier through the
``criterion`` context variable.
"""

import logging
import sys
from typing import Any, MutableMapping, Optional

import structlog
from structlog import stdlib

from .config import settings


def render_shapes(_logger: Any, _method: str, event_dict: MutableMapping[str, Any]) -> MutableMapping[str, Any]:
    """Matrix shapes are logged as ``rows x cols``."""
    shape = event_dict.get("shape")
    if isinstance(shape, tuple) and len(shape) == 2:
        event_dict["shape"] = f"{shape[0]}x{shape[1]}"
    return event_dict


def setup_logging(level: Optional[str] = None) -> None:
    """Configure structlog on top of stdlib logging at ``level`` or ``settings.log_level``."""
    level_name = (level or settings.log_level).upper()
    logging.basicConfig(format="%(message)s", stream=sys.stderr, level=getattr(logging, level_name), force=True)

    renderer = structlog.dev.ConsoleRenderer(colors=True) if settings.debug else structlog.processors.JSONRenderer()
    structlog.configure(
        processors=[
            structlog.contextvars.merge_contextvars,
            stdlib.filter_by_level,
            stdlib.add_logger_name,
            stdlib.add_log_level,
            render_shapes,
            structlog.processors.TimeStamper(fmt="iso"),
            structlog.processors.format_exc_info,
            renderer,
        ],
        logger_factory=stdlib.LoggerFactory(),
        wrapper_class=stdlib.BoundLogger,
        cache_logger_on_first_use=True,
    )


def get_logger(name: str) -> structlog.stdlib.BoundLogger:
    return structlog.get_logger(name)
