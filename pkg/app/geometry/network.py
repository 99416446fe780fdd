"""
Networks of Curves
File: app/geometry/network.py
Created: 2025-09-08
Purpose: Pairing of an angled graph with per-edge geometry, incidence checks and transforms
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, Sequence, Tuple

import numpy as np

from app.graph_core import AngledGraph, HalfEdgeId
from app.shared_kernel import INCIDENCE_TOL, IncidenceError, ParameterRangeError

from .curve import DiscreteCurve


@dataclass(frozen=True, eq=False)
class Network:
    """Graph plus one curve per edge; singular curves are collapsed points."""

    graph: AngledGraph
    curves: Tuple[DiscreteCurve, ...]
    incidence_tol: float = INCIDENCE_TOL

    def __post_init__(self) -> None:
        object.__setattr__(self, "curves", tuple(self.curves))
        if len(self.curves) != self.graph.num_edges:
            raise IncidenceError(
                "Network needs exactly one curve per edge",
                {"edges": self.graph.num_edges, "curves": len(self.curves)},
            )
        self._check_incidence()

    def _check_incidence(self) -> None:
        for v in range(self.graph.num_vertices):
            ends = [self.endpoint(h) for h in self.graph.half_edges_at(v)]
            spread = max(float(np.linalg.norm(p - ends[0])) for p in ends)
            if spread > self.incidence_tol:
                raise IncidenceError(
                    f"Endpoints at junction '{self.graph.vertex_labels[v]}' do not meet",
                    {"vertex": self.graph.vertex_labels[v], "spread": spread},
                )

    def endpoint(self, h: HalfEdgeId) -> np.ndarray:
        return self.curves[h.edge].endpoint(h.end)

    @cached_property
    def positions(self) -> np.ndarray:
        """Junction positions, shape (V, 2)."""
        return np.array([
            self.endpoint(self.graph.half_edges_at(v)[0]) for v in range(self.graph.num_vertices)
        ])

    @cached_property
    def singular_edges(self) -> FrozenSet[int]:
        return frozenset(i for i, c in enumerate(self.curves) if c.singular)

    @cached_property
    def regular_edges(self) -> FrozenSet[int]:
        return self.graph.all_edges - self.singular_edges

    def real_tangent(self, h: HalfEdgeId) -> float:
        return self.curves[h.edge].outer_tangent(h.end)

    def real_tangents(self) -> Dict[HalfEdgeId, float]:
        return {h: self.real_tangent(h) for h in self.graph.half_edges(self.regular_edges)}

    @property
    def total_length(self) -> float:
        return sum(c.length for c in self.curves)

    def bounding_box(self) -> Tuple[np.ndarray, np.ndarray]:
        pts = np.vstack([c.points for c in self.curves])
        return pts.min(axis=0), pts.max(axis=0)

    def with_curves(self, curves: Sequence[DiscreteCurve]) -> "Network":
        return Network(self.graph, tuple(curves), self.incidence_tol)

    def transformed(self, scale: float = 1.0, rotation: float = 0.0,
                    shift: Sequence[float] = (0.0, 0.0)) -> "Network":
        return self.with_curves([c.transformed(scale, rotation, shift) for c in self.curves])


def rescale(n: Network, factor: float) -> Network:
    """Scale every point about the origin."""
    if not (math.isfinite(factor) and factor > 0):
        raise ParameterRangeError(f"Scale factor must be positive, got {factor}", {"factor": factor})
    return Network(n.graph, tuple(c.transformed(scale=factor) for c in n.curves),
                   n.incidence_tol * max(1.0, factor))
