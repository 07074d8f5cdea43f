"""
Logging for the series engine.

Check results are the engine's output and go to stdout; log events are
diagnostics and always go to a separate stream (stderr by default). Events carry
exact values: Fractions render as ``p/q`` and weight tuples as ``[a,b,c]`` so
the JSON renderer never meets a type it cannot serialize.
"""

from __future__ import annotations

import logging
import os
import sys
from fractions import Fraction
from typing import Any, TextIO

import structlog


def _exact(value: Any) -> Any:
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, tuple) and value and all(type(v) is int for v in value):
        return "[" + ",".join(map(str, value)) + "]"
    if isinstance(value, (list, tuple)):
        return [_exact(v) for v in value]
    return value


def render_exact_values(logger: Any, method_name: str, event_dict: dict[str, Any]) -> dict[str, Any]:
    """Processor: weights and rationals in the notation the reports use."""
    return {key: _exact(value) for key, value in event_dict.items()}


def bind_run_context(command: str, **context: Any) -> None:
    """Attach the sub-command (and worker pid) to every event of this run."""
    structlog.contextvars.clear_contextvars()
    structlog.contextvars.bind_contextvars(command=command, pid=os.getpid(), **context)


def setup_logging(log_level: str = "WARNING", log_format: str = "console", stream: TextIO | None = None) -> None:
    shared_processors: list[structlog.types.Processor] = [
        structlog.contextvars.merge_contextvars,
        structlog.stdlib.add_log_level,
        structlog.stdlib.add_logger_name,
        structlog.processors.TimeStamper(fmt="iso"),
        render_exact_values,
    ]

    if log_format == "json":
        renderer: structlog.types.Processor = structlog.processors.JSONRenderer(ensure_ascii=False)
    else:
        renderer = structlog.dev.ConsoleRenderer(colors=False)

    structlog.configure(
        processors=[
            *shared_processors,
            structlog.stdlib.ProcessorFormatter.wrap_for_formatter,
        ],
        logger_factory=structlog.stdlib.LoggerFactory(),
        wrapper_class=structlog.stdlib.BoundLogger,
        cache_logger_on_first_use=True,
    )

    formatter = structlog.stdlib.ProcessorFormatter(
        processors=[
            structlog.stdlib.ProcessorFormatter.remove_processors_meta,
            renderer,
        ],
        foreign_pre_chain=shared_processors,
    )

    handler = logging.StreamHandler(stream or sys.stderr)
    handler.setFormatter(formatter)

    root_logger = logging.getLogger()
    root_logger.handlers.clear()
    root_logger.addHandler(handler)
    root_logger.setLevel(getattr(logging, log_level.upper(), logging.WARNING))

    # joblib reports every batch at INFO
    logging.getLogger("joblib").setLevel(logging.WARNING)
