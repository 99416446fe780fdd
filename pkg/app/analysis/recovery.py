"""
Desingularization of Degenerate Networks
File: app/analysis/recovery.py
Created: 2025-09-22
Purpose: Regular networks approximating a degenerate one, built stratum by stratum
"""

from __future__ import annotations

import math
from typing import Dict, List, Tuple

import numpy as np

from app.classify import VerdictKind, classify_network
from app.geometry import DiscreteCurve, Network, concatenate_curves, elastic_energy, straight_prefix_length
from app.graph_core import HalfEdgeId
from app.shared_kernel import (
    ConstructionError,
    PreconditionError,
    get_logger,
    get_settings,
    require_positive,
)

from .constructions import make_train_tracks, straighten_endpoint

logger = get_logger(__name__)

Segment = Tuple[np.ndarray, np.ndarray, float]


def _frame(heading: float) -> Tuple[np.ndarray, np.ndarray]:
    return (np.array([math.cos(heading), math.sin(heading)]),
            np.array([-math.sin(heading), math.cos(heading)]))


def _reroute_start(c: DiscreteCurve, target: np.ndarray, run: float) -> DiscreteCurve:
    """Move the start of ``c`` to ``target`` keeping its start heading.

    The new start runs straight, crosses to the original line with a train
    track and rejoins the curve half way along its initial straight run.
    """
    heading = c.start_heading
    along, across = _frame(heading)
    origin = c.points[0]
    shift = target - origin
    a, lateral = float(shift @ along), float(shift @ across)
    cut = 0.5 * run

    def world(local: np.ndarray) -> np.ndarray:
        return origin + np.outer(local[:, 0], along) + np.outer(local[:, 1], across)

    pieces: List[DiscreteCurve] = []
    if lateral != 0.0:
        track = make_train_tracks(abs(lateral), get_settings().construction.splice_samples)
        base = float(track.end[0])
        local = track.points.copy()
        if lateral > 0.0:
            local[:, 1] = -local[:, 1]
        local += (cut - base, lateral)
        track_start = cut - base
    else:
        local = None
        track_start = cut
    if track_start - a <= 0.0:
        raise ConstructionError(
            "Straight run too short for the splice",
            {"run": run, "longitudinal": a, "lateral": lateral},
        )

    lead = world(np.array([[a, lateral], [track_start, lateral]]))
    lead[0] = target
    pieces.append(DiscreteCurve(lead, False, (heading, heading)))
    if local is not None:
        spliced = world(local)
        spliced[0] = lead[-1]
        pieces.append(DiscreteCurve(spliced, False, (heading, heading)))

    arclength = np.concatenate([[0.0], np.cumsum(c.chord_lengths)])
    keep = arclength > cut + 1e-6 * run
    joint = origin + cut * along
    rest = np.vstack([joint, c.points[keep]])
    rest[0] = pieces[-1].end
    pieces.append(DiscreteCurve(rest, False, (heading, c.end_heading)))
    return concatenate_curves(pieces)


def _reroute(c: DiscreteCurve, end: int, target: np.ndarray, run: float) -> DiscreteCurve:
    if not np.any(target != c.endpoint(end)):
        return c
    if end == 0:
        return _reroute_start(c, target, run)
    return _reroute_start(c.reversed(), target, run).reversed()


def _end_run(c: DiscreteCurve, end: int) -> float:
    return straight_prefix_length(c if end == 0 else c.reversed())


def _extent(positions: Dict[int, np.ndarray], vertices: List[int]) -> float:
    pts = np.array([positions[v] for v in vertices])
    return float(np.max(np.linalg.norm(pts[:, None, :] - pts[None, :, :], axis=-1)))


def desingularize(n: Network, eps: float) -> Network:
    """Regular network close to the degenerate network ``n`` with nearly its energy.

    Regular curves are first straightened at collapsed junctions. Each
    stratum's straight realization is then scaled to diameter
    min(eps^3, eps*run, (run/8)^2), where run is the straight length available
    at the previous level, and every curve end that moved is spliced back
    with a train track.
    """
    eps = require_positive(eps, "eps")
    verdict = classify_network(n)
    if verdict.kind is not VerdictKind.DEGENERATE or verdict.strata is None:
        raise PreconditionError(
            "desingularize needs a degenerate network",
            {"verdict": verdict.kind.value, "reasons": verdict.reasons},
        )
    g = n.graph
    report = verdict.strata
    collapsed_vertices = set(g.vertices_of(n.singular_edges))

    curves = list(n.curves)
    runs: List[float] = []
    for i in sorted(n.regular_edges):
        c = curves[i]
        for end in (0, 1):
            if g.endpoints[i][end] not in collapsed_vertices:
                continue
            if end == 0:
                c = straighten_endpoint(c, eps)
            else:
                c = straighten_endpoint(c.reversed(), eps).reversed()
        curves[i] = c
        runs += [_end_run(c, end) for end in (0, 1) if g.endpoints[i][end] in collapsed_vertices]
    run = min(runs) if runs else 1.0

    positions = np.array(n.positions, dtype=float)
    segments: Dict[int, Segment] = {}
    for level, (stratum, realization) in enumerate(zip(report.strata, report.realizations)):
        diameter = min(eps ** 3, eps * run, (run / 8.0) ** 2)
        components = g.components(stratum)
        extent = max(_extent(realization.positions, g.vertices_of(comp)) for comp in components)
        scale = diameter / extent
        for comp in components:
            vertices = g.vertices_of(comp)
            offsets = np.array([realization.positions[v] for v in vertices])
            offsets -= offsets.mean(axis=0)
            for v, offset in zip(vertices, offsets):
                positions[v] = positions[v] + scale * offset
        lengths = []
        for i in sorted(realization.support):
            p0, p1 = g.endpoints[i]
            heading = report.tangents.tangent[HalfEdgeId(i, 0)]
            segments[i] = (positions[p0].copy(), positions[p1].copy(), heading)
            lengths.append(scale * realization.lengths[i])
        logger.debug("stratum_realized", level=level, diameter=diameter, edges=len(lengths))
        run = 0.5 * min(lengths)

    for i, (start, finish, heading) in segments.items():
        seg = DiscreteCurve(np.array([start, finish]), False, (heading, heading))
        half = 0.5 * float(np.linalg.norm(finish - start))
        for end in (0, 1):
            seg = _reroute(seg, end, positions[g.endpoints[i][end]], half)
        curves[i] = seg

    for i in sorted(n.regular_edges):
        c = curves[i]
        for end in (0, 1):
            v = g.endpoints[i][end]
            if v in collapsed_vertices:
                c = _reroute(c, end, positions[v], _end_run(c, end))
        curves[i] = c

    result = Network(g, tuple(curves), n.incidence_tol)
    check = classify_network(result)
    if check.kind is not VerdictKind.REGULAR:
        raise ConstructionError("Desingularized network is not regular", {"reasons": check.reasons})
    logger.info("desingularized", eps=eps, levels=len(report.strata),
                energy=elastic_energy(result).total, limit_energy=elastic_energy(n).total)
    return result
