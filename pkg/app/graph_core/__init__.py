"""
Graph Core Module
File: app/graph_core/__init__.py
Created: 2025-09-04
Purpose: Combinatorial N-graphs with assigned directions, paths and cycle bases
"""

__module_name__ = "graph_core"
__description__ = "Angled graphs, half-edges, paths and path angles"

from .models import AngledGraph, EdgeSet, EdgeSpec, HalfEdgeId, Path
from .graph import build_graph, junction_order
from .paths import (
    fundamental_cycles,
    is_consistent,
    junction_turn,
    make_path,
    path_angle,
    reverse_path,
    rotate_cycle,
    validate_path,
)
