"""
Command Logging Middleware
File: app/gateway/middleware/logging.py
Created: 2025-09-25
Purpose: Start, finish and duration events for each command invocation
"""

from __future__ import annotations

import functools
import time
from typing import Any, Callable, TypeVar

import click

from app.shared_kernel import get_logger

logger = get_logger(__name__)

F = TypeVar("F", bound=Callable[..., Any])


def log_command(name: str) -> Callable[[F], F]:
    def decorator(func: F) -> F:
        @functools.wraps(func)
        def wrapper(*args: Any, **kwargs: Any) -> Any:
            start_time = time.perf_counter()
            logger.info("command_started", command=name)
            try:
                result = func(*args, **kwargs)
            except click.exceptions.Exit as exc:
                logger.info("command_finished", command=name, exit_code=exc.exit_code,
                            duration=round(time.perf_counter() - start_time, 3))
                raise
            except Exception as exc:
                logger.info(
                    "command_failed",
                    command=name,
                    duration=round(time.perf_counter() - start_time, 3),
                    error=type(exc).__name__,
                )
                raise
            logger.info("command_finished", command=name, duration=round(time.perf_counter() - start_time, 3))
            return result

        return wrapper  # type: ignore[return-value]

    return decorator
