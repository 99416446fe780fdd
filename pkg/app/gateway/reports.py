"""
Console Reports
File: app/gateway/reports.py
Created: 2025-09-25
Purpose: rich-formatted summaries printed to stdout by the commands
"""

from __future__ import annotations

import math
from pathlib import Path
from typing import Iterable, Optional

from rich.console import Console
from rich.table import Table

from app.analysis import ELReport
from app.classify import SquareAngleReport, StrataReport, Verdict
from app.geometry import EnergyBreakdown
from app.graph_core import AngledGraph
from app.optimize import MinimizeResult

console = Console(highlight=False, soft_wrap=True)


def _fmt(value: float) -> str:
    return "nan" if math.isnan(value) else f"{value:.6g}"


def _edge_list(g: AngledGraph, edges: Iterable[int]) -> str:
    return ", ".join(g.edge_ids[i] for i in sorted(edges)) or "-"


def print_strata(g: AngledGraph, report: StrataReport) -> None:
    if not report.strata:
        return
    table = Table(title="Strata")
    table.add_column("level", justify="right")
    table.add_column("edges")
    table.add_column("straight support")
    for level, stratum in enumerate(report.strata):
        support = report.realizations[level].support if level < len(report.realizations) else ()
        table.add_row(str(level), _edge_list(g, stratum), _edge_list(g, support))
    console.print(table)


def print_strata_report(g: AngledGraph, report: StrataReport) -> None:
    console.print(f"verdict: {report.verdict.value}")
    console.print(f"step: {report.step}")
    print_strata(g, report)
    for reason in report.reasons:
        console.print(f"  reason: {reason}", markup=False)


def print_square_angle(g: AngledGraph, report: SquareAngleReport) -> None:
    console.print(f"square-angle verdict: {report.verdict.value}")
    if report.witness is not None:
        console.print(f"forbidden cycle: {report.witness.describe(g)}", markup=False)
    if report.witness_edge is not None:
        labels = g.vertex_labels
        console.print(f"X: {sorted(labels[v] for v in report.x_set)}", markup=False)
        console.print(f"Y: {sorted(labels[v] for v in report.y_set)}", markup=False)
    for reason in report.reasons:
        console.print(f"  reason: {reason}", markup=False)


def print_verdict(g: AngledGraph, verdict: Verdict) -> None:
    console.print(f"verdict: {verdict.kind.value}")
    for reason in verdict.reasons:
        console.print(f"  reason: {reason}", markup=False)
    if verdict.strata is not None:
        console.print(f"step: {verdict.step}")
        print_strata(g, verdict.strata)


def print_energy(breakdown: EnergyBreakdown) -> None:
    table = Table(title=f"Energy (alpha={breakdown.alpha:g}, beta={breakdown.beta:g})")
    for column in ("edge", "length", "bending", "energy"):
        table.add_column(column, justify="left" if column == "edge" else "right")
    for e in breakdown.edges:
        name = f"{e.edge_id} (collapsed)" if e.singular else e.edge_id
        table.add_row(name, _fmt(e.length), _fmt(e.bending), _fmt(e.energy))
    console.print(table)
    console.print(f"total energy: {breakdown.total:.10g}")


def print_el_report(report: ELReport) -> None:
    table = Table(title="Euler-Lagrange residuals")
    table.add_column("part")
    table.add_column("sup / curvature", justify="right")
    table.add_column("l2 / force", justify="right")
    for e in report.edges:
        table.add_row(e.edge_id, _fmt(e.sup), _fmt(e.l2))
    for j in report.junctions:
        table.add_row(f"junction {j.label}", _fmt(j.curvature_balance), _fmt(j.force_balance))
    console.print(table)
    console.print(f"max interior residual: {report.max_interior:.6g}")
    console.print(f"max junction residual: {report.max_junction:.6g}")
    for name in report.skipped:
        console.print(f"  skipped: {name}", markup=False)


def print_minimize_summary(result: MinimizeResult) -> None:
    summary = result.summary()
    console.print(f"energy: {summary['energy']:.10g}")
    console.print(f"bending: {summary['bending']:.10g}  length: {summary['length']:.10g}")
    console.print(f"closure residual: {summary['closure_residual']:.3e}")
    console.print(f"converged: {summary['converged']}  iterations: {summary['iterations']}  seed: {summary['seed']}")
    console.print(f"verdict: {summary['verdict']}")
    if summary["degenerate_edges"]:
        console.print(f"collapsed edges: {', '.join(summary['degenerate_edges'])}")
    if summary["suspicious"]:
        console.print("[yellow]warning:[/yellow] collapsed network does not classify as Degenerate")

    table = Table(title="Restarts")
    for column in ("seed", "energy", "objective", "residual", "converged"):
        table.add_column(column, justify="right")
    for record in result.restart_energies:
        table.add_row(str(record.seed), _fmt(record.energy), _fmt(record.objective),
                      f"{record.residual:.2e}", str(record.converged))
    console.print(table)


def print_written(path: Path, what: str, extra: Optional[str] = None) -> None:
    line = f"wrote {what}: {path}"
    console.print(f"{line} ({extra})" if extra else line, markup=False)
