"""
Elastic Energy Functionals
File: app/geometry/energy.py
Created: 2025-09-09
Purpose: Elastic energy of networks, its relaxed extension and the scaling identity
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import List

from app.shared_kernel import get_logger

from .curve import bending_energy
from .network import Network

logger = get_logger(__name__)


@dataclass(frozen=True)
class EdgeEnergy:
    edge: int
    edge_id: str
    length: float
    bending: float
    energy: float
    singular: bool = False


@dataclass(frozen=True)
class EnergyBreakdown:
    total: float
    alpha: float
    beta: float
    edges: List[EdgeEnergy] = field(default_factory=list)

    @property
    def bending(self) -> float:
        return sum(e.bending for e in self.edges)

    @property
    def length(self) -> float:
        return sum(e.length for e in self.edges)


def elastic_energy(n: Network, alpha: float = 1.0, beta: float = 1.0) -> EnergyBreakdown:
    """alpha * int k^2 ds + beta * length summed over regular curves, in edge order."""
    edges: List[EdgeEnergy] = []
    for i, curve in enumerate(n.curves):
        if curve.singular:
            edges.append(EdgeEnergy(i, n.graph.edge_ids[i], 0.0, 0.0, 0.0, True))
            continue
        bend = bending_energy(curve)
        length = curve.length
        edges.append(EdgeEnergy(i, n.graph.edge_ids[i], length, bend, alpha * bend + beta * length))
    total = math.fsum(e.energy for e in edges)
    return EnergyBreakdown(total=total, alpha=alpha, beta=beta, edges=edges)


def relaxed_energy(n: Network, alpha: float = 1.0, beta: float = 1.0) -> float:
    """Elastic energy on regular and degenerate networks, +inf otherwise."""
    from app.classify.verdict import VerdictKind, classify_network

    verdict = classify_network(n)
    if verdict.kind is VerdictKind.INADMISSIBLE:
        logger.info("relaxed_energy_infinite", reasons=verdict.reasons)
        return math.inf
    return elastic_energy(n, alpha, beta).total
