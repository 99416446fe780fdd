"""
Angle Condition and Network Classification
File: app/classify/verdict.py
Created: 2025-09-13
Purpose: Decide the angle condition of possibly singular networks and classify them
"""

from __future__ import annotations

from typing import Dict, List, Mapping

from app.geometry.network import Network
from app.graph_core import AngledGraph, EdgeSet, HalfEdgeId
from app.shared_kernel import EPS_ANG, angle_distance, format_angle, get_logger, get_settings, wrap_angle

from .models import AngleConditionResult, StrataVerdict, TangentAssignment, Verdict, VerdictKind
from .propagation import propagate_directions
from .strata import stratify

logger = get_logger(__name__)


def _real_rotations(g: AngledGraph, real_tangents: Mapping[HalfEdgeId, float],
                    reasons: List[str], tol: float = EPS_ANG) -> Dict[int, float]:
    """Junction rotations fixed by real tangents; disagreements are reported."""
    rotations: Dict[int, float] = {}
    for v in range(g.num_vertices):
        implied = [
            (h, wrap_angle(real_tangents[h] - g.direction(h)))
            for h in g.half_edges_at(v)
            if h in real_tangents
        ]
        if not implied:
            continue
        first_h, first = implied[0]
        for h, phi in implied[1:]:
            if angle_distance(phi, first) > tol:
                reasons.append(
                    f"junction '{g.vertex_labels[v]}': real tangents at {first_h} and {h} "
                    f"need rotations {first:.9f} and {phi:.9f}"
                )
                break
        rotations[v] = first
    return rotations


def angle_condition(g: AngledGraph, singular_edges: EdgeSet,
                    real_tangents: Mapping[HalfEdgeId, float]) -> AngleConditionResult:
    """Angle condition from the graph, its singular part and the real tangents.

    i) real tangents at a junction agree on one rotation; ii) every singular
    component propagates without a failing cycle; iii) each singular
    component admits one global rotation matching all junctions that real
    tangents already fix.
    """
    reasons: List[str] = []
    tol = get_settings().tolerances.angle
    rotations = _real_rotations(g, real_tangents, reasons, tol)
    tangents: Dict[HalfEdgeId, float] = {h: wrap_angle(t) for h, t in real_tangents.items()}
    final_rotations: Dict[int, float] = dict(rotations)

    for component in g.components(singular_edges):
        seed = HalfEdgeId(min(component), 0)
        result = propagate_directions(g, component, seed, g.direction(seed))
        if not result.ok:
            reasons.append(
                f"singular cycle {result.failed_cycle.describe(g)} has path angle "
                f"{format_angle(result.failed_angle)}"
            )
            continue
        relative = result.assignment.rotation
        offsets = [
            (v, wrap_angle(rotations[v] - relative[v])) for v in sorted(relative) if v in rotations
        ]
        offset = offsets[0][1] if offsets else 0.0
        for v, candidate in offsets[1:]:
            if angle_distance(candidate, offset) > tol:
                reasons.append(
                    f"singular component {{{', '.join(g.edge_ids[i] for i in sorted(component))}}}: "
                    f"junctions '{g.vertex_labels[offsets[0][0]]}' and '{g.vertex_labels[v]}' "
                    f"need rotations differing by {angle_distance(candidate, offset):.9f}"
                )
                break
        for v, phi in relative.items():
            final_rotations.setdefault(v, wrap_angle(phi + offset))
        for h in g.half_edges(component):
            tangents[h] = wrap_angle(final_rotations[g.vertex_of(h)] + g.direction(h))

    assignment = TangentAssignment(tangents, final_rotations)
    passed = not reasons
    if not passed:
        logger.debug("angle_condition_failed", reasons=reasons)
    return AngleConditionResult(passed, assignment, reasons)


def check_angle_condition(n: Network) -> AngleConditionResult:
    return angle_condition(n.graph, n.singular_edges, n.real_tangents())


def classify_network(n: Network) -> Verdict:
    """Regular, Degenerate (with its strata) or Inadmissible."""
    condition = check_angle_condition(n)
    if not condition.passed:
        return Verdict(VerdictKind.INADMISSIBLE, condition.reasons, condition.assignment)
    if not n.singular_edges:
        return Verdict(VerdictKind.REGULAR, [], condition.assignment)

    report = stratify(n.graph, n.singular_edges, condition.assignment)
    if report.verdict is StrataVerdict.NOT_STRATIFIED:
        return Verdict(VerdictKind.INADMISSIBLE, report.reasons, condition.assignment, report)
    logger.debug("network_degenerate", strata=len(report.strata))
    return Verdict(VerdictKind.DEGENERATE, [], condition.assignment, report)
