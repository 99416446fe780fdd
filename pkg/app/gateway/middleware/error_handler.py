"""
Error Handling Middleware
File: app/gateway/middleware/error_handler.py
Created: 2025-09-25
Purpose: Uniform exit codes and one-line diagnostics for every command
"""

from __future__ import annotations

import functools
from typing import Any, Callable, TypeVar

import click
import typer
from rich.console import Console

from app.shared_kernel import ElastiNetException, get_logger

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_NOT_CONVERGED = 2

F = TypeVar("F", bound=Callable[..., Any])

error_console = Console(stderr=True, highlight=False, soft_wrap=True)


def report_error(kind: str, message: str) -> None:
    error_console.print(f"error: {kind}: {message}", markup=False)


def handle_cli_errors(func: F) -> F:
    """Map library exceptions to exit code 1 with an ``error: <Type>: <message>`` line."""

    @functools.wraps(func)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        try:
            return func(*args, **kwargs)
        except (click.exceptions.Exit, click.exceptions.Abort, click.ClickException):
            raise
        except ElastiNetException as exc:
            logger.debug("command_error", error=type(exc).__name__, details=exc.details)
            report_error(type(exc).__name__, exc.message)
            raise typer.Exit(code=EXIT_ERROR) from exc
        except Exception as exc:
            logger.error("unhandled_error", error=type(exc).__name__, message=str(exc), exc_info=True)
            report_error("InternalError", f"{type(exc).__name__}: {exc}")
            raise typer.Exit(code=EXIT_ERROR) from exc

    return wrapper  # type: ignore[return-value]


def exit_unless_converged(converged: bool) -> None:
    """Exit with code 2 after the outputs of a non-converged run were written."""
    if not converged:
        report_error("NotConverged", "solver stopped before reaching the tolerances; result written anyway")
        raise typer.Exit(code=EXIT_NOT_CONVERGED)
