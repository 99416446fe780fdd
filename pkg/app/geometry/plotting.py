"""
Network Figures
File: app/geometry/plotting.py
Created: 2025-09-24
Purpose: SVG rendering of networks with matplotlib
"""

from __future__ import annotations

from pathlib import Path as FilePath
from typing import Optional, Union

import matplotlib

matplotlib.use("Agg")

from matplotlib.collections import LineCollection  # noqa: E402
from matplotlib.figure import Figure  # noqa: E402

from app.shared_kernel import SVG_DEFAULT_SCALE, SVG_MARGIN, get_logger, require_positive  # noqa: E402

from .network import Network  # noqa: E402

logger = get_logger(__name__)

POINTS_PER_INCH = 72.0
CURVE_COLOR = "#1f4e79"
JUNCTION_COLOR = "#202020"
COLLAPSED_COLOR = "#c0392b"


def network_figure(n: Network, scale: float = SVG_DEFAULT_SCALE, margin: float = SVG_MARGIN) -> Figure:
    """Figure whose canvas is the bounding box plus ``margin`` of its extent on every side.

    ``scale`` is in output units (points) per unit length.
    """
    scale = require_positive(scale, "scale")
    low, high = n.bounding_box()
    extent = high - low
    pad = margin * max(float(extent.max()), 1e-9)
    low, high = low - pad, high + pad
    width, height = (high - low) * scale / POINTS_PER_INCH

    fig = Figure(figsize=(float(width), float(height)), dpi=POINTS_PER_INCH)
    ax = fig.add_axes((0.0, 0.0, 1.0, 1.0))
    ax.set_xlim(low[0], high[0])
    ax.set_ylim(low[1], high[1])
    ax.set_aspect("equal")
    ax.set_axis_off()

    regular = [n.curves[i].points for i in sorted(n.regular_edges)]
    ax.add_collection(LineCollection(regular, colors=CURVE_COLOR, linewidths=1.5))

    collapsed = n.positions[sorted(n.graph.vertices_of(n.singular_edges))] if n.singular_edges else None
    ax.scatter(n.positions[:, 0], n.positions[:, 1], s=12, c=JUNCTION_COLOR, zorder=3)
    if collapsed is not None:
        ax.scatter(collapsed[:, 0], collapsed[:, 1], s=60, marker="x", c=COLLAPSED_COLOR, zorder=4)
    return fig


def render_svg(n: Network, path: Union[str, FilePath], scale: Optional[float] = None,
               margin: float = SVG_MARGIN) -> FilePath:
    """Write ``n`` as an SVG: curves as polylines, junctions as dots, collapsed parts as crosses."""
    file_path = FilePath(path)
    file_path.parent.mkdir(parents=True, exist_ok=True)
    fig = network_figure(n, scale if scale is not None else SVG_DEFAULT_SCALE, margin)
    fig.savefig(file_path, format="svg")
    logger.info("svg_written", path=str(file_path), edges=n.graph.num_edges)
    return file_path
