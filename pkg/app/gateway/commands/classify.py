"""
Classify Command
File: app/gateway/commands/classify.py
Created: 2025-09-25
Purpose: Verdicts for graph files (stratification) and network files (regular/degenerate/inadmissible)
"""

from pathlib import Path
from typing import Optional

import typer

from app.classify import classify_network, square_angle_straightness, stratify
from app.classify.documents import square_angle_document, strata_report_document, verdict_document
from app.geometry.documents import load_graph_or_network
from app.graph_core.documents import write_model

from ..middleware import handle_cli_errors, log_command
from ..reports import console, print_square_angle, print_strata_report, print_verdict, print_written


@handle_cli_errors
@log_command("classify")
def classify_command(
    path: Path = typer.Argument(..., help="Graph or network file (JSON or YAML)"),
    square_angle: bool = typer.Option(
        False, "--square-angle", help="Use the no-forbidden-cycle criterion (right-angle junctions only)"
    ),
    output: Optional[Path] = typer.Option(
        None, "--output", "-o", help="Write the input document annotated with verdict, strata and tangents"
    ),
) -> None:
    """Classify a graph as Straight / StratifiedStraight / NotStratified, or a network as
    Regular / Degenerate / Inadmissible."""
    g, network = load_graph_or_network(path)

    if network is not None:
        verdict = classify_network(network)
        print_verdict(g, verdict)
        document = verdict_document(network, verdict)
        if square_angle:
            if network.singular_edges:
                print_square_angle(g, square_angle_straightness(g, network.singular_edges))
            else:
                console.print("square-angle: no collapsed edges to examine")
    elif square_angle:
        report = square_angle_straightness(g)
        print_square_angle(g, report)
        document = square_angle_document(g, report)
    else:
        strata = stratify(g, None)
        print_strata_report(g, strata)
        document = strata_report_document(g, strata)

    if output is not None:
        write_model(output, document)
        print_written(output, "classification")
