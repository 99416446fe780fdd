"""
Construct Commands
File: app/gateway/commands/construct.py
Created: 2025-09-26
Purpose: Explicit constructions and catalog fixtures written as network or graph files
"""

from pathlib import Path
from typing import Optional

import typer

from app.analysis import desingularize, fan_energy, fan_network, train_track_angle, train_tracks_network
from app.geometry import Network, elastic_energy
from app.geometry.catalog import NETWORK_CATALOG, get_network
from app.geometry.documents import load_network, save_network
from app.graph_core.catalog import catalog_names, get_graph
from app.graph_core.documents import save_graph
from app.shared_kernel import get_settings

from ..middleware import handle_cli_errors, log_command
from ..reports import console, print_written

router = typer.Typer(help="Explicit constructions and fixtures", no_args_is_help=True)


def _write(network: Network, output: Path, what: str) -> None:
    save_network(output, network)
    print_written(output, what, f"energy {elastic_energy(network).total:.10g}")


@router.command("train-tracks")
@handle_cli_errors
@log_command("construct train-tracks")
def train_tracks_command(
    h: float = typer.Option(..., "--h", help="Lateral offset in (0, 2]"),
    samples: Optional[int] = typer.Option(None, "--samples", help="Chords per curve [config: 512]"),
    output: Path = typer.Option(Path("train_tracks.json"), "--output", "-o"),
) -> None:
    """Two unit arcs joining parallel lines at distance h; energy 4*arccos(1 - h/2)."""
    samples = samples or get_settings().construction.samples
    console.print(f"arc angle: {train_track_angle(h):.10g}")
    _write(train_tracks_network(h, samples), output, "train tracks")


@router.command("fan")
@handle_cli_errors
@log_command("construct fan")
def fan_command(
    r: float = typer.Option(..., "--r", help="Radius of the middle arc"),
    a: float = typer.Option(..., "--a", help="Half opening of the middle arc, in (0, pi/2)"),
    samples: Optional[int] = typer.Option(None, "--samples", help="Chords per curve [config: 512]"),
    output: Path = typer.Option(Path("fan.json"), "--output", "-o"),
) -> None:
    """Three arcs meeting at right angles whose energy tends to 2 as r and a shrink."""
    samples = samples or get_settings().construction.samples
    console.print(f"closed-form energy: {fan_energy(r, a):.10g}")
    _write(fan_network(r, a, samples), output, "fan")


@router.command("desingularize")
@handle_cli_errors
@log_command("construct desingularize")
def desingularize_command(
    path: Path = typer.Argument(..., help="Degenerate network file"),
    eps: float = typer.Option(..., "--eps", help="Approximation scale"),
    output: Path = typer.Option(Path("desingularized.json"), "--output", "-o"),
) -> None:
    """Regular network close to a degenerate one, with nearly its energy."""
    network = load_network(path)
    console.print(f"limit energy: {elastic_energy(network).total:.10g}")
    _write(desingularize(network, eps), output, "regular network")


@router.command("fixture")
@handle_cli_errors
@log_command("construct fixture")
def fixture_command(
    name: str = typer.Argument(..., help="Catalog name; see 'construct list'"),
    graph_only: bool = typer.Option(False, "--graph-only", help="Write only the graph even if geometry exists"),
    output: Optional[Path] = typer.Option(None, "--output", "-o", help="[default: <name>.json]"),
) -> None:
    """Write a catalog graph, or a catalog network when one exists under that name."""
    output = output or Path(f"{name}.json")
    if name in NETWORK_CATALOG:
        network = get_network(name)
        if not graph_only:
            _write(network, output, "network")
            return
        graph = network.graph
    else:
        graph = get_graph(name)
    save_graph(output, graph)
    print_written(output, "graph")


@router.command("list")
def list_command() -> None:
    """Names accepted by fixture."""
    console.print("graphs: " + ", ".join(catalog_names()))
    console.print("networks: " + ", ".join(sorted(NETWORK_CATALOG)))
