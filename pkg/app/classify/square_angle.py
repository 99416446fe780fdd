"""
Right-Angle Straightness Criterion
File: app/classify/square_angle.py
Created: 2025-09-14
Purpose: Combinatorial straightness test for graphs whose junction directions meet at right angles
"""

from __future__ import annotations

from collections import deque
from typing import Dict, FrozenSet, List, Optional, Set, Tuple

from app.graph_core import AngledGraph, EdgeSet, HalfEdgeId, Path
from app.shared_kernel import EPS_ANG, HALF_PI, PreconditionError, get_logger, wrap_angle

from .models import SquareAngleReport, SquareAngleVerdict, StrataVerdict
from .propagation import propagate_directions
from .strata import stratify

logger = get_logger(__name__)

EAST, NORTH, WEST, SOUTH = 0, 1, 2, 3


def _quadrant(angle: float) -> Optional[int]:
    steps = wrap_angle(angle) / HALF_PI
    nearest = round(steps)
    if abs(steps - nearest) * HALF_PI > EPS_ANG:
        return None
    return int(nearest) % 4


def check_right_angle_junctions(g: AngledGraph, subset: EdgeSet) -> None:
    """Order at most 4, distinct directions, pairwise angles multiple of pi/2."""
    for v in g.vertices_of(subset):
        incident = g.half_edges_at(v, subset)
        label = g.vertex_labels[v]
        if len(incident) > 4:
            raise PreconditionError(f"Junction '{label}' has order {len(incident)} > 4", {"vertex": label})
        base = g.direction(incident[0])
        seen: Set[int] = set()
        for h in incident:
            q = _quadrant(g.direction(h) - base)
            if q is None:
                raise PreconditionError(
                    f"Directions at junction '{label}' are not at right angles", {"vertex": label}
                )
            if q in seen:
                raise PreconditionError(f"Repeated direction at junction '{label}'", {"vertex": label})
            seen.add(q)


def canonical_quadrants(g: AngledGraph, subset: EdgeSet, i0: int) -> Dict[HalfEdgeId, int]:
    """Quadrant (east=0, north, west, south) of every half-edge when (0, i0) points east."""
    component = next(c for c in g.components(subset) if i0 in c)
    result = propagate_directions(g, component, HalfEdgeId(i0, 0), 0.0)
    if not result.ok:
        raise PreconditionError("Subgraph does not admit a canonical assignment",
                                {"cycle": result.failed_cycle.describe(g)})
    quadrants = {}
    for h, angle in result.assignment.tangent.items():
        q = _quadrant(angle)
        if q is None:
            raise PreconditionError("Canonical tangent is not axis-aligned", {"half_edge": str(h)})
        quadrants[h] = q
    return quadrants


def reachable(g: AngledGraph, quadrants: Dict[HalfEdgeId, int], start: int) -> FrozenSet[int]:
    """Vertices reachable from ``start`` by steps that never point west (start included)."""
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for h in g.half_edges_at(v):
            if h not in quadrants or quadrants[h] == WEST:
                continue
            w = g.vertex_of(h.opposite)
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return frozenset(seen)


def precedes(g: AngledGraph, quadrants: Dict[HalfEdgeId, int], v: int, w: int) -> bool:
    return w in reachable(g, quadrants, v)


def order_sets(g: AngledGraph, subset: EdgeSet, i0: int) -> Tuple[FrozenSet[int], FrozenSet[int]]:
    """X(i0): vertices strictly after pi(0, i0); Y(i0): the rest of the component."""
    quadrants = canonical_quadrants(g, subset, i0)
    u = g.vertex_of(HalfEdgeId(i0, 0))
    component = next(c for c in g.components(subset) if i0 in c)
    vertices = frozenset(g.vertices_of(component))
    after = {w for w in reachable(g, quadrants, u) if not precedes(g, quadrants, w, u)}
    x_set = frozenset(after)
    return x_set, vertices - x_set


def find_forbidden_cycle(g: AngledGraph, subset: EdgeSet, i0: int,
                         quadrants: Optional[Dict[HalfEdgeId, int]] = None) -> Optional[Path]:
    """Edge-simple cycle leaving pi(0, i0) east along i0 whose intermediate steps never point west.

    The closing step may point anywhere. Returns None when no such cycle exists.
    """
    quadrants = quadrants or canonical_quadrants(g, subset, i0)
    first = HalfEdgeId(i0, 0)
    u = g.vertex_of(first)
    if g.vertex_of(first.opposite) == u:
        return Path((first,), True)

    def extend(current: int, steps: List[HalfEdgeId], used: Set[int]) -> Optional[List[HalfEdgeId]]:
        candidates = [h for h in g.half_edges_at(current, subset) if h.edge not in used]
        for h in candidates:
            if g.vertex_of(h.opposite) == u:
                return steps + [h]
        for h in candidates:
            if quadrants[h] == WEST:
                continue
            found = extend(g.vertex_of(h.opposite), steps + [h], used | {h.edge})
            if found:
                return found
        return None

    found = extend(g.vertex_of(first.opposite), [first], {i0})
    return Path(tuple(found), True) if found else None


def square_angle_straightness(g: AngledGraph, subgraph: Optional[EdgeSet] = None) -> SquareAngleReport:
    """Straight / StratifiedNotStraight / NotStratified by the no-forbidden-cycle criterion.

    Every first-stratum singular edge is examined; the first forbidden cycle
    found is returned as witness together with the order sets of its edge.
    """
    subset = g.edge_subset(subgraph)
    check_right_angle_junctions(g, subset)
    report = stratify(g, subset)
    if report.verdict is StrataVerdict.NOT_STRATIFIED:
        raise PreconditionError("Subgraph is not stratified straight", {"reasons": report.reasons})

    singular = sorted(report.strata[1]) if report.step >= 1 else []
    if not singular:
        return SquareAngleReport(SquareAngleVerdict.STRAIGHT)

    for i0 in singular:
        quadrants = canonical_quadrants(g, subset, i0)
        witness = find_forbidden_cycle(g, subset, i0, quadrants)
        if witness is not None:
            x_set, y_set = order_sets(g, subset, i0)
            logger.debug("forbidden_cycle", edge=g.edge_ids[i0], cycle=witness.describe(g))
            return SquareAngleReport(
                SquareAngleVerdict.STRATIFIED_NOT_STRAIGHT,
                witness=witness,
                witness_edge=i0,
                examined_edges=tuple(singular),
                x_set=x_set,
                y_set=y_set,
            )

    logger.warning("criterion_disagrees_with_realization", step=report.step,
                   edges=[g.edge_ids[i] for i in singular])
    x_set, y_set = order_sets(g, subset, singular[0])
    return SquareAngleReport(
        SquareAngleVerdict.STRATIFIED_NOT_STRAIGHT,
        examined_edges=tuple(singular),
        x_set=x_set,
        y_set=y_set,
        reasons=["no forbidden cycle found although the maximal straight realization collapses edges"],
    )
