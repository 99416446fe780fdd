"""
Energy Lower Bounds
File: app/analysis/bounds.py
Created: 2025-09-20
Purpose: Turning-based lower bounds, tangent oscillation and the zero-energy criterion
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from app.classify import StrataVerdict, stratify
from app.geometry import DiscreteCurve, Network, bending_energy, total_curvature
from app.graph_core import AngledGraph, Path
from app.shared_kernel import TWO_PI, GeometryError, ParameterRangeError, get_logger, signed_angle

logger = get_logger(__name__)


def lower_bound_cycle(angles: Sequence[float], length: float) -> float:
    """Bound max(0, 2*pi - sum of junction turns)^2 / L on the bending of a closed cycle."""
    if not (math.isfinite(length) and length > 0.0):
        raise ParameterRangeError("Cycle length must be positive", {"length": length})
    deficit = TWO_PI - math.fsum(abs(a) for a in angles)
    return max(0.0, deficit) ** 2 / length


def lemma2c_bound(curves: Iterable[DiscreteCurve]) -> float:
    """Twice the total curvature; the energy of any regular network is at least this."""
    total = 0.0
    for c in curves:
        if c.singular:
            raise GeometryError("The turning bound needs regular curves")
        total += total_curvature(c)
    return 2.0 * total


def cycle_turning_total(n: Network, cycle: Path) -> float:
    """Total curvature along a closed cycle plus the absolute junction turns.

    Each step (z, i) traverses curve i leaving its end z; the turn at a
    junction is measured between the arriving and departing travel headings.
    """
    if not cycle.closed:
        raise GeometryError("cycle_turning_total needs a closed path")
    total = 0.0
    steps = list(cycle.steps)
    for k, step in enumerate(steps):
        curve = n.curves[step.edge]
        if curve.singular:
            raise GeometryError("Cycle crosses a collapsed edge", {"edge": n.graph.edge_ids[step.edge]})
        total += total_curvature(curve)
        following = steps[(k + 1) % len(steps)]
        arriving = n.real_tangent(step.opposite) + math.pi
        departing = n.real_tangent(following)
        total += abs(signed_angle(departing - arriving))
    return total


@dataclass(frozen=True)
class TangentOscillation:
    oscillation: float  # largest distance between two unit tangents
    bound: float  # sqrt(length * int k^2)


def tangent_oscillation(c: DiscreteCurve) -> TangentOscillation:
    if c.singular:
        raise GeometryError("Tangent oscillation of a collapsed curve is undefined")
    angles = c.chord_angles
    if c.tangents is not None:
        angles = np.concatenate([[c.tangents[0]], angles, [c.tangents[1]]])
    units = np.column_stack([np.cos(angles), np.sin(angles)])
    gaps = np.linalg.norm(units[:, None, :] - units[None, :, :], axis=-1)
    return TangentOscillation(float(gaps.max()), math.sqrt(c.length * bending_energy(c)))


def zero_energy_attainable(g: AngledGraph) -> bool:
    """True when every edge can collapse at once, i.e. the whole graph is stratified straight."""
    report = stratify(g, None)
    attainable = report.verdict is not StrataVerdict.NOT_STRATIFIED
    logger.debug("zero_energy_check", attainable=attainable, step=report.step)
    return attainable
