"""
Explicit Curve Constructions
File: app/analysis/constructions.py
Created: 2025-09-21
Purpose: Train-track splices, endpoint straightening and the collapsing fan
"""

from __future__ import annotations

import math
from typing import Sequence, Tuple

import numpy as np

from app.geometry import DiscreteCurve, Network, arc_curve, curve_energy, straight_prefix_length
from app.graph_core import EdgeSpec, build_graph
from app.shared_kernel import (
    CONSTRUCTION_SAMPLES,
    SEGMENT_SAMPLES,
    STRAIGHTEN_MAX_HALVINGS,
    HALF_PI,
    ConstructionError,
    ParameterRangeError,
    get_logger,
    require_positive,
)

logger = get_logger(__name__)


def train_track_angle(h: float) -> float:
    """Opening angle of each unit arc for a lateral offset h; h = 2(1 - cos theta)."""
    return 2.0 * math.asin(0.5 * math.sqrt(h))


def make_train_tracks(h: float, samples: int = CONSTRUCTION_SAMPLES) -> DiscreteCurve:
    """Two unit-radius arcs joining (0, 0) to (2 sin theta, h), heading +x at both ends.

    The arcs are sampled relative to the start point so tiny offsets keep
    their relative accuracy.
    """
    if not (math.isfinite(h) and 0.0 < h <= 2.0):
        raise ParameterRangeError("Train-track offset must lie in (0, 2]", {"h": h})
    if samples < 2:
        raise ParameterRangeError("samples must be at least 2", {"samples": samples})
    theta = train_track_angle(h)
    base = 2.0 * math.sin(theta)
    half = max(samples // 2, 1)
    rising = np.linspace(0.0, theta, half + 1)
    first = np.column_stack([np.sin(rising), 2.0 * np.sin(0.5 * rising) ** 2])
    falling = rising[::-1]
    second = np.column_stack([base - np.sin(falling), h - 2.0 * np.sin(0.5 * falling) ** 2])
    points = np.vstack([first, second[1:]])
    points[-1] = (base, h)
    return DiscreteCurve(points, False, (0.0, 0.0))


def _cutoff(t: np.ndarray) -> np.ndarray:
    """C2 step: 1 on [0, 1/4], 0 on [1/2, 1], quintic smoothstep between."""
    u = np.clip((t - 0.25) / 0.25, 0.0, 1.0)
    return 1.0 - u ** 3 * (10.0 - 15.0 * u + 6.0 * u * u)


def _straightened(c: DiscreteCurve, delta: float, run_samples: int) -> DiscreteCurve:
    heading = c.start_heading
    direction = np.array([math.cos(heading), math.sin(heading)])
    s = np.concatenate([[0.0], np.cumsum(c.chord_lengths)])
    shifted = c.points + delta * _cutoff(s / s[-1])[:, None] * direction
    run = c.points[0] + np.outer(np.linspace(0.0, delta, run_samples + 1)[:-1], direction)
    points = np.vstack([run, shifted])
    points[-1] = c.points[-1]
    return DiscreteCurve(points, False, (heading, c.end_heading))


def straighten_endpoint(c: DiscreteCurve, eps: float, run_samples: int = SEGMENT_SAMPLES) -> DiscreteCurve:
    """Make the curve start with a straight run of length at most eps along its start heading.

    The curve is pushed forward by delta near its start through a cutoff and
    a straight run of length delta is prepended; delta halves until the
    energy stays within a factor (1 + eps).
    """
    eps = require_positive(eps, "eps")
    if c.singular:
        raise ConstructionError("Cannot straighten a collapsed curve")
    target = min(eps, c.length / 8.0)
    if straight_prefix_length(c) >= target * (1.0 - 1e-9):
        return c
    budget = curve_energy(c) * (1.0 + eps)
    delta = target
    for _ in range(STRAIGHTEN_MAX_HALVINGS):
        candidate = _straightened(c, delta, run_samples)
        if curve_energy(candidate) <= budget:
            logger.debug("endpoint_straightened", run=delta)
            return candidate
        delta *= 0.5
    raise ConstructionError("Straightening did not meet the energy budget", {"eps": eps})


def make_collapsing_fan(r: float, a: float, samples: int = CONSTRUCTION_SAMPLES) -> Tuple[DiscreteCurve, DiscreteCurve, DiscreteCurve]:
    """Three arcs that shrink to a point with energy tending to 2 as r, a -> 0.

    Returns (E1, E2, E3): E3 has radius r and opening 2a and is symmetric
    about the x-axis; E1 and E2 have radius r*cot(a) and opening a, meet E3
    at right angles and leave their free ends heading +x.
    """
    r = require_positive(r, "r")
    if not (0.0 < a < HALF_PI):
        raise ParameterRangeError("Fan half-angle must lie in (0, pi/2)", {"a": a})
    big = r * math.cos(a) / math.sin(a)
    offset = r / math.sin(a)
    upper = arc_curve((0.0, offset), big, -HALF_PI, a, samples)
    lower = arc_curve((0.0, -offset), big, HALF_PI, -a, samples)
    middle = arc_curve((0.0, 0.0), r, -a, 2.0 * a, samples)
    return upper, lower, middle


def fan_energy(r: float, a: float) -> float:
    """Closed-form energy of make_collapsing_fan with unit weights."""
    return 2.0 * (r * a / math.tan(a) + a * math.tan(a) / r) + 2.0 * a * r + 2.0 * a / r


def _network_of(curves: Sequence[DiscreteCurve], ends: Sequence[Tuple[str, str]]) -> Network:
    """Network whose prescribed directions are the curves' own outer tangents."""
    specs = [
        EdgeSpec(v0, v1, c.start_heading, c.end_heading + math.pi, id=f"E{i + 1}")
        for i, (c, (v0, v1)) in enumerate(zip(curves, ends))
    ]
    return Network(build_graph(specs), tuple(curves))


def train_tracks_network(h: float, samples: int = CONSTRUCTION_SAMPLES) -> Network:
    return _network_of([make_train_tracks(h, samples)], [("a", "b")])


def fan_network(r: float, a: float, samples: int = CONSTRUCTION_SAMPLES) -> Network:
    """The collapsing fan as a network: E1 and E2 meet E3 at right angles, free ends a1 and a2."""
    upper, lower, middle = make_collapsing_fan(r, a, samples)
    return _network_of([upper, lower, middle], [("a1", "b"), ("a2", "c"), ("c", "b")])
