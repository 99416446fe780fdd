"""
Minimize Command
File: app/gateway/commands/minimize.py
Created: 2025-09-25
Purpose: Relaxed or fixed-length minimization from a graph or network file
"""

from pathlib import Path
from typing import List, Optional

import typer

from app.geometry.documents import load_graph_or_network, save_network
from app.optimize import MinimizeOptions, extract, minimize_fixed_length, minimize_relaxed
from app.shared_kernel import ParameterRangeError, get_logger

from ..middleware import exit_unless_converged, handle_cli_errors, log_command
from ..reports import print_minimize_summary, print_written

logger = get_logger(__name__)


def parse_lengths(text: str) -> List[float]:
    """Comma-separated positive lengths, one per edge in file order."""
    try:
        values = [float(part) for part in text.split(",") if part.strip()]
    except ValueError as exc:
        raise ParameterRangeError(f"Cannot parse lengths '{text}'", {"lengths": text}) from exc
    if not values:
        raise ParameterRangeError("No lengths given", {"lengths": text})
    return values


def convergence_path(output: Path) -> Path:
    return output.with_name(f"{output.stem}_convergence.csv")


@handle_cli_errors
@log_command("minimize")
def minimize_command(
    path: Path = typer.Argument(..., help="Graph file, or network file used as the first starting point"),
    alpha: float = typer.Option(1.0, "--alpha", help="Bending weight"),
    beta: float = typer.Option(1.0, "--beta", help="Length weight (ignored with --fixed-lengths)"),
    fixed_lengths: Optional[str] = typer.Option(
        None, "--fixed-lengths", help="Comma-separated edge lengths l1,l2,... held fixed"
    ),
    samples: Optional[int] = typer.Option(None, "--samples", help="Chords per edge [config: 64]"),
    seed: Optional[int] = typer.Option(None, "--seed", help="Seed of the first restart [config: 0]"),
    restarts: Optional[int] = typer.Option(None, "--restarts", help="Number of restarts [config: 4]"),
    max_iter: Optional[int] = typer.Option(None, "--max-iter", help="Inner iteration budget [config: 5000]"),
    output: Path = typer.Option(Path("minimizer.json"), "--output", "-o", help="Network file to write"),
) -> None:
    """Minimize the elastic energy over networks on the graph; writes the network,
    a convergence CSV next to it and prints a summary."""
    g, network = load_graph_or_network(path)
    options = MinimizeOptions.from_settings(samples=samples, seed=seed, restarts=restarts, max_iter=max_iter)
    if fixed_lengths is not None:
        result = minimize_fixed_length(g, parse_lengths(fixed_lengths), alpha, options)
    else:
        warm = network is not None and not network.singular_edges
        initial = extract(network, options.samples) if warm else None
        result = minimize_relaxed(g, alpha, beta, options, initial)

    save_network(output, result.network)
    log_path = result.write_convergence_csv(convergence_path(output))
    print_minimize_summary(result)
    print_written(output, "network")
    print_written(log_path, "convergence log", f"{len(result.history)} rows")
    exit_unless_converged(result.converged)
