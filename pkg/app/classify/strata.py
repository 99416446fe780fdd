"""
Straight Realizations and Stratification
File: app/classify/strata.py
Created: 2025-09-12
Purpose: Maximal-support straight realizations and the greedy strata chain of a subgraph
"""

from __future__ import annotations

import math
from collections import deque
from typing import Dict, FrozenSet, List, Optional

import numpy as np

from app.graph_core import AngledGraph, EdgeSet, HalfEdgeId, fundamental_cycles
from app.shared_kernel import SUPPORT_TOL, PreconditionError, get_logger, get_settings

from .models import StrataReport, StrataVerdict, SupportRealization, TangentAssignment
from .propagation import propagate_directions
from .simplex import maximize

logger = get_logger(__name__)


def _closure_rows(g: AngledGraph, subset: EdgeSet, order: List[int], tangents: TangentAssignment) -> np.ndarray:
    """Two rows per fundamental cycle: the cycle's straight edges must close up."""
    column = {edge: k for k, edge in enumerate(order)}
    rows = []
    for cycle in fundamental_cycles(g, subset):
        row = np.zeros((2, len(order)))
        for step in cycle.steps:
            angle = tangents.tangent[HalfEdgeId(step.edge, 0)]
            sign = 1.0 if step.end == 0 else -1.0
            row[0, column[step.edge]] += sign * math.cos(angle)
            row[1, column[step.edge]] += sign * math.sin(angle)
        rows.append(row)
    return np.vstack(rows) if rows else np.zeros((0, len(order)))


def _integrate_positions(g: AngledGraph, subset: EdgeSet, lengths: Dict[int, float],
                         tangents: TangentAssignment) -> Dict[int, np.ndarray]:
    positions: Dict[int, np.ndarray] = {}
    for component in g.components(subset):
        root = g.vertex_of(HalfEdgeId(min(component), 0))
        positions[root] = np.zeros(2)
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for h in sorted(g.half_edges_at(v, component)):
                w = g.vertex_of(h.opposite)
                if w in positions:
                    continue
                angle = tangents.tangent[HalfEdgeId(h.edge, 0)]
                step = lengths[h.edge] * np.array([math.cos(angle), math.sin(angle)])
                positions[w] = positions[v] + (step if h.end == 0 else -step)
                queue.append(w)
    return positions


def max_support_realization(g: AngledGraph, subgraph: Optional[EdgeSet],
                            tangents: TangentAssignment) -> SupportRealization:
    """Straight realization whose set of positive-length edges is as large as possible.

    Maximizes the total length in the box 0 <= l <= 1, re-solves for each edge
    left at zero, and averages the solutions to land in the relative interior.
    Lengths are normalized so the longest is 1.
    """
    subset = g.edge_subset(subgraph)
    missing = [h for h in g.half_edges(subset) if h.end == 0 and h not in tangents.tangent]
    if missing:
        raise PreconditionError("Tangents do not cover the subgraph", {"missing": [str(h) for h in missing]})
    order = sorted(subset)
    n = len(order)
    if n == 0:
        return SupportRealization({}, {}, frozenset())

    a_eq = _closure_rows(g, subset, order, tangents)
    b_eq = np.zeros(a_eq.shape[0])
    ones = np.ones(n)
    pivot_tol = get_settings().tolerances.pivot
    first = maximize(ones, a_eq, b_eq, ones, pivot_tol)
    solutions = [first.x]
    reached = first.x > SUPPORT_TOL
    for k in range(n):
        if reached[k]:
            continue
        target = np.zeros(n)
        target[k] = 1.0
        candidate = maximize(target, a_eq, b_eq, ones, pivot_tol)
        if candidate.x[k] > SUPPORT_TOL:
            solutions.append(candidate.x)
            reached |= candidate.x > SUPPORT_TOL

    average = np.mean(solutions, axis=0)
    average[average <= SUPPORT_TOL] = 0.0
    peak = float(average.max())
    if peak > 0.0:
        average /= peak
    lengths = {edge: float(average[k]) for k, edge in enumerate(order)}
    support = frozenset(edge for edge, length in lengths.items() if length > 0.0)
    positions = _integrate_positions(g, subset, lengths, tangents)
    return SupportRealization(positions, lengths, support)


def component_tangents(g: AngledGraph, subset: EdgeSet):
    """Propagate from the lowest half-edge of each component with its own direction.

    Returns the merged assignment, or None with the failure reasons.
    """
    merged: Optional[TangentAssignment] = TangentAssignment({}, {})
    reasons: List[str] = []
    for component in g.components(subset):
        seed = HalfEdgeId(min(component), 0)
        result = propagate_directions(g, component, seed, g.direction(seed))
        if not result.ok:
            reasons.append(
                f"cycle {result.failed_cycle.describe(g)} has path angle {result.failed_angle:.6f}"
            )
            merged = None
        elif merged is not None:
            merged = merged.merged(result.assignment)
    return merged, reasons


def stratify(g: AngledGraph, subgraph: Optional[EdgeSet],
             tangents: Optional[TangentAssignment] = None) -> StrataReport:
    """Greedy strata chain: each level removes the maximal support of the previous one.

    Tangents are propagated once on the whole subgraph (or taken from the
    caller) and reused at every level.
    """
    subset = g.edge_subset(subgraph)
    if tangents is None:
        tangents, reasons = component_tangents(g, subset)
        if tangents is None:
            return StrataReport(StrataVerdict.NOT_STRATIFIED, reasons=reasons)

    strata: List[FrozenSet[int]] = []
    realizations: List[SupportRealization] = []
    current = subset
    while current:
        strata.append(current)
        realization = max_support_realization(g, current, tangents)
        if not realization.support:
            edges = ", ".join(g.edge_ids[i] for i in sorted(current))
            logger.debug("stratum_without_support", level=len(strata) - 1, edges=edges)
            return StrataReport(
                StrataVerdict.NOT_STRATIFIED,
                strata,
                realizations,
                tangents,
                [f"stratum {len(strata) - 1} ({edges}) admits no straight edge of positive length"],
            )
        realizations.append(realization)
        current = current - realization.support

    verdict = StrataVerdict.STRAIGHT if len(strata) <= 1 else StrataVerdict.STRATIFIED_STRAIGHT
    logger.debug("stratified", step=len(strata) - 1, verdict=verdict.value)
    return StrataReport(verdict, strata, realizations, tangents)
