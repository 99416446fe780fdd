"""
Named Graph Catalog
File: app/graph_core/catalog.py
Created: 2025-09-06
Purpose: Reference angled graphs used by tests, the optimizer acceptance runs and the CLI
"""

from __future__ import annotations

from typing import Callable, Dict, List

from app.shared_kernel import GraphValidationError

from .graph import build_graph
from .models import AngledGraph, EdgeSpec


def theta_graph() -> AngledGraph:
    """Two triple junctions a, b joined by three edges at 2*pi/3 (top, middle, bottom)."""
    return build_graph([
        EdgeSpec("a", "b", "2*pi/3", "pi/3"),
        EdgeSpec("a", "b", "0", "pi"),
        EdgeSpec("a", "b", "4*pi/3", "5*pi/3"),
    ])


def single_edge_graph() -> AngledGraph:
    return build_graph([EdgeSpec("a", "b", "0", "pi")])


def loop_graph() -> AngledGraph:
    """One loop whose end directions are opposite, so a circle fits."""
    return build_graph([EdgeSpec("p", "p", "0", "pi")])


def straight_path_graph() -> AngledGraph:
    return build_graph([
        EdgeSpec("a", "b", "0", "pi"),
        EdgeSpec("b", "c", "0", "pi"),
    ])


def two_loops_graph() -> AngledGraph:
    """Two loops joined by a bridge; minimizers collapse the bridge."""
    return build_graph([
        EdgeSpec("p", "p", "2*pi/3", "4*pi/3"),
        EdgeSpec("p", "q", "0", "pi"),
        EdgeSpec("q", "q", "5*pi/3", "pi/3"),
    ])


def stacked_strata_graph() -> AngledGraph:
    """Five edges whose triangle E3 E4 E5 needs two strata."""
    return build_graph([
        EdgeSpec("A", "C", "0", "pi"),
        EdgeSpec("A", "B", "0", "pi"),
        EdgeSpec("C", "B", "3*pi/2", "pi/2"),
        EdgeSpec("C", "D", "3*pi/2", "pi/2"),
        EdgeSpec("B", "D", "0", "pi"),
    ])


def fan_limit_graph() -> AngledGraph:
    """Triangle E1 E2 E3 with two loops through A; the triangle can collapse in two strata."""
    return build_graph([
        EdgeSpec("A", "C", "0", "pi"),
        EdgeSpec("A", "B", "0", "pi"),
        EdgeSpec("C", "B", "3*pi/2", "pi/2"),
        EdgeSpec("A", "C", "pi/2", "3*pi/2"),
        EdgeSpec("A", "B", "3*pi/2", "pi/2"),
    ])


def collapsed_cycle_graph() -> AngledGraph:
    """Four-edge cycle E1..E4 with zero turning total but no straight realization."""
    return build_graph([
        EdgeSpec("J41", "J12", "0", "pi"),
        EdgeSpec("J12", "J23", "5*pi/3", "2*pi/3"),
        EdgeSpec("J23", "J34", "0", "pi"),
        EdgeSpec("J34", "J41", "5*pi/3", "2*pi/3"),
        EdgeSpec("J12", "J23", "pi/3", "4*pi/3"),
        EdgeSpec("J34", "J41", "pi/3", "4*pi/3"),
    ])


def right_angle_counterexample_graph() -> AngledGraph:
    """Right-angle 4-cycle that is stratified straight with H1 = E1, E3 but not straight."""
    return build_graph([
        EdgeSpec("a", "b", "0", "pi"),
        EdgeSpec("b", "c", "pi/2", "3*pi/2"),
        EdgeSpec("c", "d", "0", "pi"),
        EdgeSpec("d", "a", "3*pi/2", "pi/2"),
    ])


def square_graph() -> AngledGraph:
    return build_graph([
        EdgeSpec("a", "b", "0", "pi"),
        EdgeSpec("b", "c", "pi/2", "3*pi/2"),
        EdgeSpec("c", "d", "pi", "0"),
        EdgeSpec("d", "a", "3*pi/2", "pi/2"),
    ])


def right_angle_tree_graph() -> AngledGraph:
    return build_graph([
        EdgeSpec("o", "a", "0", "pi"),
        EdgeSpec("o", "b", "pi/2", "3*pi/2"),
        EdgeSpec("o", "c", "pi", "0"),
    ])


def eight_edge_graph() -> AngledGraph:
    """Eight edges with identifications (0,1)~(0,2), (1,1)~(0,3), (1,2)~(0,4)~(1,5)~(0,7),
    (1,3)~(1,4), (0,5)~(0,6), (1,6)~(0,8), (1,7)~(1,8)."""
    return build_graph([
        EdgeSpec("p1", "p2", 0.0, "pi"),
        EdgeSpec("p1", "p3", "pi/2", "pi"),
        EdgeSpec("p2", "p4", 0.0, "pi"),
        EdgeSpec("p3", "p4", 0.0, "pi/2"),
        EdgeSpec("p5", "p3", 0.0, "3*pi/2"),
        EdgeSpec("p5", "p6", "pi", "pi"),
        EdgeSpec("p3", "p7", "pi/4", "pi"),
        EdgeSpec("p6", "p7", 0.0, "3*pi/2"),
    ])


GRAPH_CATALOG: Dict[str, Callable[[], AngledGraph]] = {
    "theta": theta_graph,
    "single-edge": single_edge_graph,
    "loop": loop_graph,
    "straight-path": straight_path_graph,
    "two-loops": two_loops_graph,
    "stacked-strata": stacked_strata_graph,
    "fan-limit": fan_limit_graph,
    "collapsed-cycle": collapsed_cycle_graph,
    "right-angle-counterexample": right_angle_counterexample_graph,
    "square": square_graph,
    "right-angle-tree": right_angle_tree_graph,
    "eight-edge": eight_edge_graph,
}


def catalog_names() -> List[str]:
    return sorted(GRAPH_CATALOG)


def get_graph(name: str) -> AngledGraph:
    try:
        return GRAPH_CATALOG[name]()
    except KeyError as exc:
        raise GraphValidationError(f"Unknown catalog graph '{name}'", {"known": catalog_names()}) from exc
