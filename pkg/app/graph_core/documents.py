"""
Graph Documents
File: app/graph_core/documents.py
Created: 2025-09-06
Purpose: JSON/YAML graph documents validated with pydantic
"""

from __future__ import annotations

import json
from pathlib import Path as FilePath
from typing import Any, Dict, List, Literal, Optional, Union

import yaml
from pydantic import BaseModel, ConfigDict, Field, ValidationError

from app.shared_kernel import DocumentFormatError, GraphValidationError, format_angle, parse_angle

from .graph import build_graph
from .models import AngledGraph, EdgeSpec

AngleValue = Union[float, str]


def serialize_angle(angle: float) -> AngleValue:
    """Exact ``k*pi/n`` text when it parses back to the same float, else the float."""
    text = format_angle(angle)
    try:
        if parse_angle(text) == angle:
            return text
    except GraphValidationError:
        pass
    return float(angle)


class EdgeDocument(BaseModel):
    model_config = ConfigDict(extra="forbid")

    id: str
    v0: str
    v1: str
    dir0_rad: AngleValue
    dir1_rad: AngleValue


class StratumDocument(BaseModel):
    edges: List[str]
    positions: Dict[str, List[float]] = Field(default_factory=dict)
    lengths: Dict[str, float] = Field(default_factory=dict)


class GraphDocument(BaseModel):
    """Top-level graph file; classification output adds verdict fields."""

    model_config = ConfigDict(extra="forbid")

    dimension: Literal[2] = 2
    edges: List[EdgeDocument]
    verdict: Optional[str] = None
    step: Optional[int] = None
    strata: Optional[List[StratumDocument]] = None
    tangents: Optional[Dict[str, AngleValue]] = None
    rotations: Optional[Dict[str, AngleValue]] = None
    witness: Optional[str] = None


def graph_to_document(g: AngledGraph) -> GraphDocument:
    edges = [
        EdgeDocument(
            id=g.edge_ids[i],
            v0=g.vertex_labels[g.endpoints[i][0]],
            v1=g.vertex_labels[g.endpoints[i][1]],
            dir0_rad=serialize_angle(g.directions[i][0]),
            dir1_rad=serialize_angle(g.directions[i][1]),
        )
        for i in range(g.num_edges)
    ]
    return GraphDocument(edges=edges)


def graph_from_document(doc: GraphDocument) -> AngledGraph:
    return build_graph(
        [EdgeSpec(e.v0, e.v1, e.dir0_rad, e.dir1_rad, id=e.id) for e in doc.edges]
    )


def read_mapping(path: Union[str, FilePath]) -> Dict[str, Any]:
    """Read a JSON or YAML document into a mapping."""
    file_path = FilePath(path)
    if not file_path.exists():
        raise DocumentFormatError(f"File not found: {file_path}", {"path": str(file_path)})
    try:
        with open(file_path, "r", encoding="utf-8") as f:
            if file_path.suffix.lower() == ".json":
                data = json.load(f)
            else:
                data = yaml.safe_load(f)
    except (json.JSONDecodeError, yaml.YAMLError) as exc:
        raise DocumentFormatError(f"Cannot parse {file_path}: {exc}", {"path": str(file_path)}) from exc
    if not isinstance(data, dict):
        raise DocumentFormatError(f"{file_path} must contain a top-level object", {"path": str(file_path)})
    return data


def write_model(path: Union[str, FilePath], model: BaseModel) -> None:
    """Write a document as YAML for .yaml/.yml suffixes, JSON otherwise."""
    file_path = FilePath(path)
    file_path.parent.mkdir(parents=True, exist_ok=True)
    payload = model.model_dump(mode="json", exclude_none=True)
    with open(file_path, "w", encoding="utf-8") as f:
        if file_path.suffix.lower() in (".yaml", ".yml"):
            yaml.safe_dump(payload, f, sort_keys=False)
        else:
            json.dump(payload, f, indent=2)
            f.write("\n")


def parse_model(model_cls: type, data: Dict[str, Any], source: str = "document") -> Any:
    try:
        return model_cls.model_validate(data)
    except ValidationError as exc:
        first = exc.errors()[0]
        where = ".".join(str(part) for part in first.get("loc", ()))
        raise DocumentFormatError(
            f"Invalid {source}: {where}: {first.get('msg')}", {"errors": exc.errors()}
        ) from exc


def load_graph(path: Union[str, FilePath]) -> AngledGraph:
    doc = parse_model(GraphDocument, read_mapping(path), "graph document")
    return graph_from_document(doc)


def save_graph(path: Union[str, FilePath], g: AngledGraph) -> None:
    write_model(path, graph_to_document(g))
