"""
Paths, Cycles and the Path Angle
File: app/graph_core/paths.py
Created: 2025-09-05
Purpose: Path consistency, turning angle of a path and fundamental cycle bases
"""

from __future__ import annotations

import math
from collections import deque
from typing import Dict, List, Optional, Sequence, Tuple

from app.shared_kernel import EPS_ANG, TWO_PI, GraphValidationError, ccw_angle, wrap_angle

from .models import AngledGraph, EdgeSet, HalfEdgeId, Path


def make_path(steps: Sequence[Tuple[int, int]], closed: bool = False) -> Path:
    """Path from ``(end, edge)`` pairs with zero-based edges."""
    return Path(tuple(HalfEdgeId(edge, end) for end, edge in steps), closed)


def is_consistent(g: AngledGraph, p: Path) -> bool:
    if not p.steps:
        return False
    for h in p.steps:
        if not 0 <= h.edge < g.num_edges:
            return False
    pairs = list(zip(p.steps, p.steps[1:]))
    if p.closed:
        pairs.append((p.steps[-1], p.steps[0]))
    return all(g.vertex_of(a.opposite) == g.vertex_of(b) for a, b in pairs)


def validate_path(g: AngledGraph, p: Path) -> None:
    if not is_consistent(g, p):
        raise GraphValidationError("Inconsistent path", {"path": p.describe(g) if p.steps else "[]"})


def junction_turn(g: AngledGraph, incoming: HalfEdgeId, outgoing: HalfEdgeId) -> float:
    """Counterclockwise angle from -d of the arriving half-edge to d of the leaving one."""
    arriving = g.direction(incoming.opposite) + math.pi
    return ccw_angle(arriving, g.direction(outgoing))


def path_angle(g: AngledGraph, p: Path) -> float:
    """Sum of the junction turns along a path, in [0, 2*pi).

    Open paths contribute one turn per interior junction; cycles also
    contribute the turn from the last step back to the first.
    """
    validate_path(g, p)
    pairs = list(zip(p.steps, p.steps[1:]))
    if p.closed:
        pairs.append((p.steps[-1], p.steps[0]))
    total = wrap_angle(sum(junction_turn(g, a, b) for a, b in pairs))
    return 0.0 if TWO_PI - total <= EPS_ANG else total


def reverse_path(p: Path) -> Path:
    return Path(tuple(h.opposite for h in reversed(p.steps)), p.closed)


def rotate_cycle(p: Path, shift: int) -> Path:
    if not p.closed:
        raise GraphValidationError("Only cycles can be rotated")
    k = shift % len(p.steps)
    return Path(p.steps[k:] + p.steps[:k], True)


def _spanning_forest(
    g: AngledGraph, subset: EdgeSet
) -> Tuple[Dict[int, Optional[HalfEdgeId]], Dict[int, int], List[int]]:
    """BFS forest; ``parent[v]`` is the half-edge at v leading to its parent."""
    parent: Dict[int, Optional[HalfEdgeId]] = {}
    depth: Dict[int, int] = {}
    tree_edges: List[int] = []
    for start_edge in sorted(subset):
        root = g.endpoints[start_edge][0]
        if root in parent:
            continue
        parent[root] = None
        depth[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for h in sorted(g.half_edges_at(v, subset)):
                w = g.vertex_of(h.opposite)
                if w in parent:
                    continue
                parent[w] = h.opposite
                depth[w] = depth[v] + 1
                tree_edges.append(h.edge)
                queue.append(w)
    return parent, depth, tree_edges


def _climb(g: AngledGraph, parent: Dict[int, Optional[HalfEdgeId]], v: int) -> Tuple[HalfEdgeId, int]:
    h = parent[v]
    assert h is not None
    return h, g.vertex_of(h.opposite)


def fundamental_cycles(g: AngledGraph, subgraph: Optional[EdgeSet] = None) -> List[Path]:
    """One cycle per non-tree edge of the deterministic BFS spanning forest.

    Each cycle starts by traversing its chord from end 0 and returns through
    the tree.
    """
    subset = g.edge_subset(subgraph)
    parent, depth, tree_edges = _spanning_forest(g, subset)
    tree = set(tree_edges)
    cycles: List[Path] = []
    for chord in sorted(subset - tree):
        u, w = g.endpoints[chord]
        up_from_w: List[HalfEdgeId] = []
        up_from_u: List[HalfEdgeId] = []
        a, b = w, u
        while depth[a] > depth[b]:
            h, a = _climb(g, parent, a)
            up_from_w.append(h)
        while depth[b] > depth[a]:
            h, b = _climb(g, parent, b)
            up_from_u.append(h)
        while a != b:
            h, a = _climb(g, parent, a)
            up_from_w.append(h)
            h, b = _climb(g, parent, b)
            up_from_u.append(h)
        down_to_u = [h.opposite for h in reversed(up_from_u)]
        steps = (HalfEdgeId(chord, 0), *up_from_w, *down_to_u)
        cycles.append(Path(tuple(steps), True))
    return cycles
