"""
Direction Propagation
File: app/classify/propagation.py
Created: 2025-09-11
Purpose: Propagate virtual tangents through a connected subgraph and check its cycles
"""

from __future__ import annotations

import math
from collections import deque
from typing import Dict, Optional

from app.graph_core import AngledGraph, EdgeSet, HalfEdgeId, fundamental_cycles, path_angle
from app.shared_kernel import EPS_ANG, TWO_PI, PreconditionError, get_logger, wrap_angle

from .models import Propagation, TangentAssignment

logger = get_logger(__name__)


def crossing_rotation(g: AngledGraph, h: HalfEdgeId, rotation: float) -> float:
    """Rotation at the far end of h's edge when the edge is straight (or collapsed)."""
    far = h.opposite
    return rotation + g.direction(h) + math.pi - g.direction(far)


def relative_rotations(g: AngledGraph, subset: EdgeSet, root: int, root_rotation: float) -> Dict[int, float]:
    """Breadth-first rotations from ``root``; ties broken by half-edge order."""
    rotation = {root: root_rotation}
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for h in sorted(g.half_edges_at(v, subset)):
            w = g.vertex_of(h.opposite)
            if w not in rotation:
                rotation[w] = crossing_rotation(g, h, rotation[v])
                queue.append(w)
    return rotation


def propagate_directions(
    g: AngledGraph,
    subgraph: Optional[EdgeSet],
    seed: HalfEdgeId,
    seed_angle: float,
) -> Propagation:
    """Assign tangents to every half-edge of a connected subgraph.

    The seed half-edge receives ``seed_angle``; the rest follows from the
    rule that a collapsed edge carries opposite tangents at its two ends.
    Fails on the first fundamental cycle whose path angle is not 0 mod 2*pi.
    """
    subset = g.edge_subset(subgraph)
    if seed.edge not in subset:
        raise PreconditionError("Seed half-edge is not in the subgraph", {"seed": str(seed)})
    if not g.is_connected(subset):
        raise PreconditionError("propagate_directions needs a connected subgraph",
                                {"components": len(g.components(subset))})

    for cycle in fundamental_cycles(g, subset):
        theta = path_angle(g, cycle)
        if min(theta, TWO_PI - theta) > EPS_ANG:
            logger.debug("propagation_failed", cycle=cycle.describe(g), theta=theta)
            return Propagation(None, cycle, theta)

    root = g.vertex_of(seed)
    rotation = relative_rotations(g, subset, root, seed_angle - g.direction(seed))
    rotation = {v: wrap_angle(phi) for v, phi in rotation.items()}
    tangent = {h: wrap_angle(rotation[g.vertex_of(h)] + g.direction(h)) for h in g.half_edges(subset)}
    return Propagation(TangentAssignment(tangent, rotation))
