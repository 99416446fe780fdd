"""
Render Command
File: app/gateway/commands/render.py
Created: 2025-09-26
Purpose: SVG figure of a network file
"""

from pathlib import Path
from typing import Optional

import typer

from app.geometry.documents import load_network
from app.geometry.plotting import render_svg
from app.shared_kernel import get_settings

from ..middleware import handle_cli_errors, log_command
from ..reports import print_written


@handle_cli_errors
@log_command("render")
def render_command(
    path: Path = typer.Argument(..., help="Network file"),
    output: Path = typer.Option(..., "--output", "-o", help="SVG file to write"),
    scale: Optional[float] = typer.Option(None, "--scale", help="Pixels per unit length [config: 200]"),
) -> None:
    """Curves as polylines, junctions as dots, collapsed parts as crosses; 5% margin around the bounding box."""
    network = load_network(path)
    settings = get_settings().render
    written = render_svg(network, output, scale if scale is not None else settings.scale, settings.margin)
    print_written(written, "figure")
