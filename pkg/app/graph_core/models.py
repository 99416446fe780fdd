"""
Graph Core Data Models
File: app/graph_core/models.py
Created: 2025-09-04
Purpose: Immutable N-graphs with assigned directions, half-edges and paths
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Tuple

import networkx as nx

from app.shared_kernel import GraphValidationError

EdgeSet = FrozenSet[int]


@dataclass(frozen=True, order=True)
class HalfEdgeId:
    """Endpoint ``end`` (0 or 1) of edge ``edge`` (zero-based index)."""

    edge: int
    end: int

    def __post_init__(self) -> None:
        if self.end not in (0, 1):
            raise GraphValidationError("Half-edge end must be 0 or 1", {"end": self.end})

    @property
    def opposite(self) -> "HalfEdgeId":
        return HalfEdgeId(self.edge, 1 - self.end)

    def __str__(self) -> str:
        return f"({self.end},{self.edge + 1})"


@dataclass(frozen=True)
class AngledGraph:
    """Planar N-graph: edges, the endpoint identification and one direction per half-edge.

    Vertices are dense integers in first-appearance order; ``vertex_labels``
    keeps the user-facing names. ``endpoints[i]`` holds the vertices of
    half-edges (0,i) and (1,i), ``directions[i]`` their assigned angles.
    """

    edge_ids: Tuple[str, ...]
    vertex_labels: Tuple[str, ...]
    endpoints: Tuple[Tuple[int, int], ...]
    directions: Tuple[Tuple[float, float], ...]

    @property
    def num_edges(self) -> int:
        return len(self.edge_ids)

    @property
    def num_vertices(self) -> int:
        return len(self.vertex_labels)

    @property
    def all_edges(self) -> EdgeSet:
        return frozenset(range(self.num_edges))

    def half_edges(self, edges: Optional[Iterable[int]] = None) -> List[HalfEdgeId]:
        chosen = sorted(self.all_edges if edges is None else edges)
        return [HalfEdgeId(i, z) for i in chosen for z in (0, 1)]

    def vertex_of(self, h: HalfEdgeId) -> int:
        return self.endpoints[h.edge][h.end]

    def direction(self, h: HalfEdgeId) -> float:
        return self.directions[h.edge][h.end]

    def is_loop(self, edge: int) -> bool:
        v0, v1 = self.endpoints[edge]
        return v0 == v1

    @cached_property
    def _incidence(self) -> Dict[int, Tuple[HalfEdgeId, ...]]:
        table: Dict[int, List[HalfEdgeId]] = {v: [] for v in range(self.num_vertices)}
        for h in self.half_edges():
            table[self.vertex_of(h)].append(h)
        return {v: tuple(hs) for v, hs in table.items()}

    def half_edges_at(self, vertex: int, edges: Optional[EdgeSet] = None) -> Tuple[HalfEdgeId, ...]:
        self.require_vertex(vertex)
        incident = self._incidence[vertex]
        if edges is None:
            return incident
        return tuple(h for h in incident if h.edge in edges)

    def vertices_of(self, edges: Iterable[int]) -> List[int]:
        return sorted({v for i in edges for v in self.endpoints[i]})

    def require_vertex(self, vertex: int) -> None:
        if not 0 <= vertex < self.num_vertices:
            raise GraphValidationError(f"Unknown vertex {vertex}", {"vertex": vertex})

    def vertex_index(self, label: str) -> int:
        try:
            return self.vertex_labels.index(label)
        except ValueError as exc:
            raise GraphValidationError(f"Unknown vertex '{label}'", {"vertex": label}) from exc

    def edge_index(self, edge_id: str) -> int:
        try:
            return self.edge_ids.index(edge_id)
        except ValueError as exc:
            raise GraphValidationError(f"Unknown edge '{edge_id}'", {"edge": edge_id}) from exc

    def edge_subset(self, edges: Optional[Iterable[int]]) -> EdgeSet:
        if edges is None:
            return self.all_edges
        subset = frozenset(edges)
        unknown = [i for i in subset if not 0 <= i < self.num_edges]
        if unknown:
            raise GraphValidationError("Subgraph refers to unknown edges", {"edges": unknown})
        return subset

    def multigraph(self, edges: Optional[Iterable[int]] = None) -> nx.MultiGraph:
        """networkx view of the subgraph; keys are edge indices."""
        subset = self.edge_subset(edges)
        mg = nx.MultiGraph()
        mg.add_nodes_from(self.vertices_of(subset))
        for i in sorted(subset):
            v0, v1 = self.endpoints[i]
            mg.add_edge(v0, v1, key=i)
        return mg

    def components(self, edges: Optional[Iterable[int]] = None) -> List[EdgeSet]:
        """Connected components of a subgraph as edge sets, ordered by lowest edge."""
        subset = self.edge_subset(edges)
        mg = self.multigraph(subset)
        result = []
        for nodes in nx.connected_components(mg):
            comp = frozenset(k for _, _, k in mg.edges(nodes, keys=True))
            if comp:
                result.append(comp)
        return sorted(result, key=min)

    def is_connected(self, edges: Optional[Iterable[int]] = None) -> bool:
        return len(self.components(edges)) <= 1


@dataclass(frozen=True)
class Path:
    """Ordered half-edges; step (z, i) traverses edge i starting from its end z."""

    steps: Tuple[HalfEdgeId, ...]
    closed: bool = False

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self) -> Iterator[HalfEdgeId]:
        return iter(self.steps)

    @property
    def edges(self) -> Tuple[int, ...]:
        return tuple(h.edge for h in self.steps)

    def describe(self, g: AngledGraph) -> str:
        body = " -> ".join(f"({h.end},{g.edge_ids[h.edge]})" for h in self.steps)
        return f"cycle[{body}]" if self.closed else f"path[{body}]"


@dataclass(frozen=True)
class EdgeSpec:
    """Input record for build_graph."""

    v0: str
    v1: str
    dir0: float
    dir1: float
    id: Optional[str] = field(default=None)
