"""
ElastiNet Command Line Entry Point
File: app/main.py
Created: 2025-09-26
Purpose: typer application wiring the command modules, global options and exit codes
"""

from __future__ import annotations

import sys
from pathlib import Path
from typing import Optional, Sequence

import click
import typer

from app.gateway.commands import analyze, classify, construct, minimize, render
from app.gateway.middleware import EXIT_ERROR, EXIT_OK, report_error
from app.shared_kernel import ElastiNetException, configure_logging, use_config


def create_app() -> typer.Typer:
    """Create and configure the command-line application."""
    cli = typer.Typer(
        name="elastinet",
        help="Elastic networks of curves with prescribed junction angles.",
        no_args_is_help=True,
        add_completion=False,
        pretty_exceptions_enable=False,
    )

    @cli.callback()
    def global_options(
        verbose: bool = typer.Option(False, "--verbose", "-v", help="Debug logging on stderr"),
        log_json: bool = typer.Option(False, "--log-json", help="Log events as JSON lines"),
        config: Optional[Path] = typer.Option(
            None, "--config", help="Solver configuration YAML [default: config/solver_config.yaml]"
        ),
    ) -> None:
        configure_logging("DEBUG" if verbose else "INFO", json_output=log_json)
        if config is not None:
            try:
                use_config(config)
            except ElastiNetException as exc:
                report_error(type(exc).__name__, exc.message)
                raise typer.Exit(code=EXIT_ERROR) from exc

    cli.command("classify")(classify.classify_command)
    cli.command("minimize")(minimize.minimize_command)
    cli.command("analyze")(analyze.analyze_command)
    cli.command("render")(render.render_command)
    cli.add_typer(construct.router, name="construct")
    return cli


app = create_app()


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Run one command and return its exit code; usage errors count as malformed input."""
    try:
        result = app(args=list(argv) if argv is not None else None, prog_name="elastinet",
                     standalone_mode=False)
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.ClickException as exc:
        exc.show()
        return EXIT_ERROR
    except click.exceptions.Abort:
        return EXIT_ERROR
    return result if isinstance(result, int) else EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
