"""
Classification Documents
File: app/classify/documents.py
Created: 2025-09-24
Purpose: Verdicts, strata and tangent assignments in the graph document format
"""

from __future__ import annotations

from typing import Dict, List, Optional

from app.geometry import Network
from app.geometry.documents import NetworkDocument, network_to_document
from app.graph_core import AngledGraph, HalfEdgeId
from app.graph_core.documents import GraphDocument, StratumDocument, graph_to_document, serialize_angle

from .models import SquareAngleReport, StrataReport, TangentAssignment, Verdict


def half_edge_key(g: AngledGraph, h: HalfEdgeId) -> str:
    return f"{g.edge_ids[h.edge]}/{h.end}"


def strata_documents(g: AngledGraph, report: StrataReport) -> List[StratumDocument]:
    documents = []
    for level, stratum in enumerate(report.strata):
        edges = [g.edge_ids[i] for i in sorted(stratum)]
        if level >= len(report.realizations):
            documents.append(StratumDocument(edges=edges))
            continue
        realization = report.realizations[level]
        documents.append(StratumDocument(
            edges=edges,
            positions={g.vertex_labels[v]: [float(x) for x in p] for v, p in sorted(realization.positions.items())},
            lengths={g.edge_ids[i]: float(length) for i, length in sorted(realization.lengths.items())},
        ))
    return documents


def _tangent_fields(g: AngledGraph, tangents: Optional[TangentAssignment]) -> Dict[str, object]:
    if tangents is None:
        return {}
    return {
        "tangents": {
            half_edge_key(g, h): serialize_angle(float(value))
            for h, value in sorted(tangents.tangent.items(), key=lambda item: (item[0].edge, item[0].end))
        },
        "rotations": {
            g.vertex_labels[v]: serialize_angle(float(value)) for v, value in sorted(tangents.rotation.items())
        },
    }


def strata_report_document(g: AngledGraph, report: StrataReport) -> GraphDocument:
    doc = graph_to_document(g)
    return doc.model_copy(update={
        "verdict": report.verdict.value,
        "step": report.step,
        "strata": strata_documents(g, report),
        **_tangent_fields(g, report.tangents),
    })


def square_angle_document(g: AngledGraph, report: SquareAngleReport) -> GraphDocument:
    doc = graph_to_document(g)
    return doc.model_copy(update={
        "verdict": report.verdict.value,
        "witness": report.witness.describe(g) if report.witness is not None else None,
    })


def verdict_document(n: Network, verdict: Verdict) -> NetworkDocument:
    """The network document annotated with its verdict and, when degenerate, its strata."""
    doc = network_to_document(n)
    update: Dict[str, object] = {"verdict": verdict.kind.value, **_tangent_fields(n.graph, verdict.tangents)}
    if verdict.strata is not None:
        update["step"] = verdict.step
        update["strata"] = strata_documents(n.graph, verdict.strata)
    return doc.model_copy(update=update)
