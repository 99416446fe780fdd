"""
Reference Networks
File: app/geometry/catalog.py
Created: 2025-09-10
Purpose: Exact geometries for the catalog graphs (regular and degenerate)
"""

from __future__ import annotations

import math
from typing import Callable, Dict

import numpy as np

from app.graph_core.catalog import (
    collapsed_cycle_graph,
    fan_limit_graph,
    loop_graph,
    single_edge_graph,
    theta_graph,
    two_loops_graph,
)
from app.shared_kernel import GraphValidationError

from .curve import DiscreteCurve, arc_curve, concatenate_curves, segment_curve, singular_curve
from .network import Network

SQRT3 = math.sqrt(3.0)


def theta_network(samples: int = 64) -> Network:
    """Regular Theta: two 240-degree arcs and a segment between a=(-1,0) and b=(1,0)."""
    top = arc_curve((0.0, 1.0 / SQRT3), 2.0 / SQRT3, 7 * math.pi / 6, -4 * math.pi / 3, samples)
    middle = segment_curve((-1.0, 0.0), (1.0, 0.0), samples)
    bottom = arc_curve((0.0, -1.0 / SQRT3), 2.0 / SQRT3, 5 * math.pi / 6, 4 * math.pi / 3, samples)
    return Network(theta_graph(), (top, middle, bottom))


def unit_circle_network(samples: int = 512) -> Network:
    return Network(loop_graph(), (arc_curve((0.0, 1.0), 1.0, -math.pi / 2, 2 * math.pi, samples),))


def segment_network(length: float = 1.0, samples: int = 64) -> Network:
    return Network(single_edge_graph(), (segment_curve((0.0, 0.0), (length, 0.0), samples),))


def teardrop_loop(heading: float, samples: int = 128) -> DiscreteCurve:
    """Closed loop at the origin leaving along ``heading`` and returning along ``heading - pi/3``.

    Two unit legs joined by a 300-degree arc of radius sqrt(3); tangent continuous.
    """
    direction = np.array([math.cos(heading), math.sin(heading)])
    radius = SQRT3
    arc_length = radius * 5 * math.pi / 3
    total = 2.0 + arc_length
    leg_samples = max(2, round(samples / total))
    arc_samples = max(8, samples - 2 * leg_samples)

    first_leg = segment_curve((0.0, 0.0), direction, leg_samples)
    center = direction + radius * np.array([math.cos(heading + math.pi / 2), math.sin(heading + math.pi / 2)])
    arc = arc_curve(center, radius, heading - math.pi / 2, 5 * math.pi / 3, arc_samples)
    second_leg = segment_curve(arc.end, (0.0, 0.0), leg_samples)
    return concatenate_curves([first_leg, arc, second_leg])


def two_loops_degenerate_network(samples: int = 128) -> Network:
    """Two teardrop loops joined by a collapsed bridge at the origin."""
    first = teardrop_loop(2 * math.pi / 3, samples)
    second = teardrop_loop(5 * math.pi / 3, samples)
    return Network(two_loops_graph(), (first, singular_curve((0.0, 0.0)), second))


def fan_limit_degenerate_network(samples: int = 128) -> Network:
    """Triangle E1 E2 E3 collapsed at the origin with two unit circles E4, E5."""
    origin = singular_curve((0.0, 0.0))
    left = arc_curve((-1.0, 0.0), 1.0, 0.0, 2 * math.pi, samples)
    right = arc_curve((1.0, 0.0), 1.0, math.pi, 2 * math.pi, samples)
    return Network(fan_limit_graph(), (origin, origin, origin, left, right))


def collapsed_cycle_network(samples: int = 128, twist: float = 0.0) -> Network:
    """Cycle E1..E4 collapsed at the origin; E5 and E6 are circles of radius 1 and 1/2.

    ``twist`` rotates E5 about the origin, breaking the junction rotations.
    """
    origin = singular_curve((0.0, 0.0))
    ccw = arc_curve(
        (math.cos(5 * math.pi / 6), math.sin(5 * math.pi / 6)), 1.0, -math.pi / 6, 2 * math.pi, samples
    )
    if twist:
        ccw = ccw.transformed(rotation=twist)
    cw = arc_curve(
        (0.5 * math.cos(-math.pi / 6), 0.5 * math.sin(-math.pi / 6)), 0.5, 5 * math.pi / 6, -2 * math.pi, samples
    )
    return Network(collapsed_cycle_graph(), (origin, origin, origin, origin, ccw, cw))


NETWORK_CATALOG: Dict[str, Callable[[], Network]] = {
    "theta": theta_network,
    "unit-circle": unit_circle_network,
    "segment": segment_network,
    "two-loops-degenerate": two_loops_degenerate_network,
    "fan-limit-degenerate": fan_limit_degenerate_network,
    "collapsed-cycle": collapsed_cycle_network,
}


def get_network(name: str) -> Network:
    try:
        return NETWORK_CATALOG[name]()
    except KeyError as exc:
        raise GraphValidationError(
            f"Unknown catalog network '{name}'", {"known": sorted(NETWORK_CATALOG)}
        ) from exc
