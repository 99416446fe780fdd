"""
Analyze Command
File: app/gateway/commands/analyze.py
Created: 2025-09-26
Purpose: Energy breakdown and Euler-Lagrange residuals of a network file
"""

from pathlib import Path
from typing import Optional

import typer

from app.analysis import el_residual, lemma2c_bound
from app.classify import classify_network
from app.geometry import elastic_energy
from app.geometry.documents import load_network, write_energy_csv

from ..middleware import handle_cli_errors, log_command
from ..reports import console, print_el_report, print_energy, print_written


@handle_cli_errors
@log_command("analyze")
def analyze_command(
    path: Path = typer.Argument(..., help="Network file"),
    alpha: float = typer.Option(1.0, "--alpha", help="Bending weight"),
    beta: float = typer.Option(1.0, "--beta", help="Length weight"),
    output_dir: Optional[Path] = typer.Option(
        None, "--output-dir", "-d", help="Where to write the CSV tables [default: next to the input]"
    ),
) -> None:
    """Write <name>_energy.csv and <name>_el.csv and print both tables."""
    network = load_network(path)
    target = output_dir if output_dir is not None else path.parent
    target.mkdir(parents=True, exist_ok=True)

    breakdown = elastic_energy(network, alpha, beta)
    print_energy(breakdown)
    energy_path = target / f"{path.stem}_energy.csv"
    write_energy_csv(energy_path, breakdown)

    verdict = classify_network(network)
    console.print(f"verdict: {verdict.kind.value}")
    if not network.singular_edges:
        regular = [c for c in network.curves if not c.singular]
        console.print(f"twice total curvature: {lemma2c_bound(regular):.6g}")

    report = el_residual(network, alpha, beta)
    print_el_report(report)
    el_path = report.write_csv(target / f"{path.stem}_el.csv")

    print_written(energy_path, "energy table")
    print_written(el_path, "Euler-Lagrange report")
