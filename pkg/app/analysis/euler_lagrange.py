"""
Euler-Lagrange Residuals
File: app/analysis/euler_lagrange.py
Created: 2025-09-20
Purpose: Interior and junction residuals of the criticality system for discrete networks
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Tuple, Union

import numpy as np
import pandas as pd

from app.geometry import DiscreteCurve, Network, curvature, resample_constant_speed
from app.shared_kernel import CHORD_EQUALITY_RTOL, GeometryError, get_logger, require_positive

logger = get_logger(__name__)


@dataclass(frozen=True, eq=False)
class EdgeResidual:
    edge: int
    edge_id: str
    sup: float
    l2: float
    arclength: np.ndarray  # nodes where the residual is evaluated
    values: np.ndarray  # signed residual 2*alpha*k'' + alpha*k^3 - beta*k


@dataclass(frozen=True)
class JunctionResidual:
    vertex: int
    label: str
    curvature_balance: float
    force_balance: float


@dataclass(frozen=True, eq=False)
class ELReport:
    alpha: float
    beta: float
    edges: List[EdgeResidual] = field(default_factory=list)
    junctions: List[JunctionResidual] = field(default_factory=list)
    skipped: List[str] = field(default_factory=list)

    @property
    def max_interior(self) -> float:
        return max((e.sup for e in self.edges), default=0.0)

    @property
    def max_junction(self) -> float:
        return max(
            (max(j.curvature_balance, j.force_balance) for j in self.junctions), default=0.0
        )

    def to_frame(self) -> pd.DataFrame:
        rows = [
            {"kind": "edge", "name": e.edge_id, "sup": e.sup, "l2": e.l2,
             "curvature_balance": np.nan, "force_balance": np.nan}
            for e in self.edges
        ]
        rows += [
            {"kind": "junction", "name": j.label, "sup": np.nan, "l2": np.nan,
             "curvature_balance": j.curvature_balance, "force_balance": j.force_balance}
            for j in self.junctions
        ]
        return pd.DataFrame(rows, columns=["kind", "name", "sup", "l2", "curvature_balance", "force_balance"])

    def write_csv(self, path: Union[str, Path]) -> Path:
        target = Path(path)
        self.to_frame().to_csv(target, index=False)
        return target


@dataclass(frozen=True)
class _EndData:
    """Curvature, its arclength derivative and the travel frame at one curve end."""

    k: float
    dk: float
    tangent: np.ndarray
    normal: np.ndarray


def _constant_speed(c: DiscreteCurve) -> DiscreteCurve:
    h = c.chord_lengths
    if float(np.ptp(h)) <= CHORD_EQUALITY_RTOL * float(h.mean()):
        return c
    return resample_constant_speed(c, c.num_chords)


def _end_data(c: DiscreteCurve, k: np.ndarray, h: float) -> Tuple[_EndData, _EndData]:
    # quadratic extrapolation from the first three interior nodes
    k_start = 3.0 * k[1] - 3.0 * k[2] + k[3]
    dk_start = (-2.5 * k[1] + 4.0 * k[2] - 1.5 * k[3]) / h
    k_end = 3.0 * k[-2] - 3.0 * k[-3] + k[-4]
    dk_end = (2.5 * k[-2] - 4.0 * k[-3] + 1.5 * k[-4]) / h

    def frame(angle: float) -> Tuple[np.ndarray, np.ndarray]:
        return (np.array([math.cos(angle), math.sin(angle)]),
                np.array([-math.sin(angle), math.cos(angle)]))

    t0, n0 = frame(c.start_heading)
    t1, n1 = frame(c.end_heading)
    return _EndData(k_start, dk_start, t0, n0), _EndData(k_end, dk_end, t1, n1)


def el_residual(n: Network, alpha: float = 1.0, beta: float = 1.0) -> ELReport:
    """Residuals of 2*alpha*k'' + alpha*k^3 - beta*k = 0 and of the junction balances.

    At each junction the curvatures at curve ends must equal those at curve
    starts, and the same holds for the force 2*alpha*k'*nu + alpha*k^2*tau - beta*tau.
    Junctions touching a collapsed curve are skipped.
    """
    alpha = require_positive(alpha, "alpha")
    beta = require_positive(beta, "beta")
    g = n.graph
    edges: List[EdgeResidual] = []
    ends: Dict[Tuple[int, int], _EndData] = {}
    skipped: List[str] = []

    for i, raw in enumerate(n.curves):
        if raw.singular:
            skipped.append(f"edge {g.edge_ids[i]} is collapsed")
            continue
        if raw.num_chords < 6:
            raise GeometryError("Residuals need at least 6 chords per curve",
                                {"edge": g.edge_ids[i], "chords": raw.num_chords})
        c = _constant_speed(raw)
        h = c.length / c.num_chords
        k = curvature(c)
        second = (k[3:-1] - 2.0 * k[2:-2] + k[1:-3]) / (h * h)
        inner = k[2:-2]
        values = 2.0 * alpha * second + alpha * inner ** 3 - beta * inner
        arclength = h * np.arange(2, c.num_chords - 1)
        edges.append(EdgeResidual(
            i, g.edge_ids[i], float(np.max(np.abs(values))),
            float(math.sqrt(h * float(np.sum(values * values)))), arclength, values,
        ))
        start, end = _end_data(c, k, h)
        ends[(i, 0)], ends[(i, 1)] = start, end

    junctions: List[JunctionResidual] = []
    for v in range(g.num_vertices):
        incident = g.half_edges_at(v)
        if any(n.curves[h.edge].singular for h in incident):
            skipped.append(f"junction {g.vertex_labels[v]} touches a collapsed edge")
            continue
        k_sum = 0.0
        force = np.zeros(2)
        for h in incident:
            data = ends[(h.edge, h.end)]
            sign = 1.0 if h.end == 1 else -1.0
            k_sum += sign * data.k
            force += sign * (2.0 * alpha * data.dk * data.normal
                             + (alpha * data.k ** 2 - beta) * data.tangent)
        junctions.append(JunctionResidual(v, g.vertex_labels[v], abs(k_sum), float(np.linalg.norm(force))))

    if skipped:
        logger.info("el_residual_skipped", items=skipped)
    return ELReport(alpha, beta, edges, junctions, skipped)
