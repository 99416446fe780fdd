"""
Angled Graph Construction
File: app/graph_core/graph.py
Created: 2025-09-04
Purpose: Build AngledGraph values from edge lists and answer incidence queries
"""

from __future__ import annotations

from typing import Dict, List, Sequence, Tuple, Union

from app.shared_kernel import GraphValidationError, parse_angle
from app.shared_kernel.validators import AngleLike

from .models import AngledGraph, EdgeSpec

EdgeInput = Union[EdgeSpec, Tuple[str, str, AngleLike, AngleLike]]


def build_graph(edges: Sequence[EdgeInput]) -> AngledGraph:
    """Build an angled graph from ``(v0, v1, dir0, dir1)`` records.

    Edges are indexed in input order and vertices in order of first
    appearance. Missing edge ids default to ``E1``, ``E2``, ...
    """
    if not edges:
        raise GraphValidationError("A graph needs at least one edge")

    labels: Dict[str, int] = {}
    edge_ids: List[str] = []
    endpoints: List[Tuple[int, int]] = []
    directions: List[Tuple[float, float]] = []

    for position, raw in enumerate(edges):
        spec = raw if isinstance(raw, EdgeSpec) else EdgeSpec(*raw)
        edge_id = spec.id if spec.id is not None else f"E{position + 1}"
        if edge_id in edge_ids:
            raise GraphValidationError(f"Duplicate edge id '{edge_id}'", {"edge": edge_id})

        ends = []
        for label in (spec.v0, spec.v1):
            key = str(label)
            if key not in labels:
                labels[key] = len(labels)
            ends.append(labels[key])

        try:
            angles = (parse_angle(spec.dir0), parse_angle(spec.dir1))
        except GraphValidationError as exc:
            raise GraphValidationError(
                f"Invalid direction on edge '{edge_id}': {exc.message}",
                {"edge": edge_id, **exc.details},
            ) from exc

        edge_ids.append(edge_id)
        endpoints.append((ends[0], ends[1]))
        directions.append(angles)

    return AngledGraph(
        edge_ids=tuple(edge_ids),
        vertex_labels=tuple(labels),
        endpoints=tuple(endpoints),
        directions=tuple(directions),
    )


def junction_order(g: AngledGraph, vertex: Union[int, str]) -> int:
    """Number of half-edges incident to a vertex (index or label)."""
    index = g.vertex_index(vertex) if isinstance(vertex, str) else vertex
    return len(g.half_edges_at(index))
