"""
Network Documents
File: app/geometry/documents.py
Created: 2025-09-09
Purpose: Network files (graph document plus per-edge geometry) and CSV energy tables
"""

from __future__ import annotations

from pathlib import Path as FilePath
from typing import Dict, List, Optional, Tuple, Union

import numpy as np
import pandas as pd
from pydantic import BaseModel, ConfigDict, model_validator

from app.graph_core.documents import (
    GraphDocument,
    graph_from_document,
    graph_to_document,
    parse_model,
    read_mapping,
    write_model,
)
from app.graph_core import AngledGraph
from app.shared_kernel import DocumentFormatError, GeometryError, get_settings

from .curve import DiscreteCurve, singular_curve
from .energy import EnergyBreakdown
from .network import Network


class CurveDocument(BaseModel):
    model_config = ConfigDict(extra="forbid")

    points: Optional[List[List[float]]] = None
    singular_at: Optional[List[float]] = None
    tangents: Optional[List[float]] = None

    @model_validator(mode="after")
    def _one_kind(self) -> "CurveDocument":
        if (self.points is None) == (self.singular_at is None):
            raise ValueError("exactly one of 'points' or 'singular_at' is required")
        return self


class NetworkDocument(GraphDocument):
    geometry: Dict[str, CurveDocument]


def curve_to_document(c: DiscreteCurve) -> CurveDocument:
    if c.singular:
        return CurveDocument(singular_at=[float(x) for x in c.points[0]])
    tangents = list(c.tangents) if c.tangents is not None else None
    return CurveDocument(points=c.points.tolist(), tangents=tangents)


def curve_from_document(doc: CurveDocument) -> DiscreteCurve:
    if doc.singular_at is not None:
        return singular_curve(doc.singular_at)
    tangents = tuple(doc.tangents) if doc.tangents is not None else None
    return DiscreteCurve(np.asarray(doc.points, dtype=float), False, tangents)


def network_to_document(n: Network) -> NetworkDocument:
    base = graph_to_document(n.graph)
    geometry = {n.graph.edge_ids[i]: curve_to_document(c) for i, c in enumerate(n.curves)}
    return NetworkDocument(edges=base.edges, geometry=geometry)


def network_from_document(doc: NetworkDocument) -> Network:
    g = graph_from_document(doc)
    missing = [eid for eid in g.edge_ids if eid not in doc.geometry]
    if missing:
        raise DocumentFormatError("Geometry missing for edges", {"edges": missing})
    try:
        curves = [curve_from_document(doc.geometry[eid]) for eid in g.edge_ids]
    except GeometryError as exc:
        raise DocumentFormatError(f"Invalid geometry: {exc.message}", exc.details) from exc
    return Network(g, tuple(curves), get_settings().tolerances.incidence)


def is_network_mapping(data: dict) -> bool:
    return "geometry" in data


def load_network(path: Union[str, FilePath]) -> Network:
    doc = parse_model(NetworkDocument, read_mapping(path), "network document")
    return network_from_document(doc)


def load_graph_or_network(path: Union[str, FilePath]) -> Tuple[AngledGraph, Optional[Network]]:
    """Graph of a graph or network file, plus the network when the file has geometry."""
    data = read_mapping(path)
    if is_network_mapping(data):
        n = network_from_document(parse_model(NetworkDocument, data, "network document"))
        return n.graph, n
    return graph_from_document(parse_model(GraphDocument, data, "graph document")), None


def save_network(path: Union[str, FilePath], n: Network) -> None:
    write_model(path, network_to_document(n))


def energy_table(breakdown: EnergyBreakdown) -> pd.DataFrame:
    return pd.DataFrame(
        [
            {
                "edge": e.edge_id,
                "singular": e.singular,
                "length": e.length,
                "bending": e.bending,
                "energy": e.energy,
            }
            for e in breakdown.edges
        ],
        columns=["edge", "singular", "length", "bending", "energy"],
    )


def write_energy_csv(path: Union[str, FilePath], breakdown: EnergyBreakdown) -> None:
    energy_table(breakdown).to_csv(path, index=False)
