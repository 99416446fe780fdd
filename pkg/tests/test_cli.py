"""Command-line behaviour: outputs, exit codes and diagnostics."""

import json

import pandas as pd
import pytest
import yaml

from app.geometry.documents import load_network, save_network
from app.geometry.catalog import get_network
from app.graph_core.documents import load_graph, save_graph
from app.graph_core.catalog import get_graph
from app.main import app, run


@pytest.fixture
def quick_config(tmp_path):
    path = tmp_path / "quick.yaml"
    path.write_text(yaml.safe_dump({
        "solver": {"samples": 16, "restarts": 1, "max_iter": 400, "tol_c": 1e-6, "tol_g": 1e-4},
    }))
    return path


def test_construct_list(runner):
    result = runner.invoke(app, ["construct", "list"])
    assert result.exit_code == 0
    assert "eight-edge" in result.stdout
    assert "two-loops-degenerate" in result.stdout


def test_construct_fixture_writes_graphs_and_networks(runner, tmp_path):
    graph_file = tmp_path / "stacked.yaml"
    result = runner.invoke(app, ["construct", "fixture", "stacked-strata", "-o", str(graph_file)])
    assert result.exit_code == 0
    assert load_graph(graph_file).edge_ids == get_graph("stacked-strata").edge_ids

    network_file = tmp_path / "theta.json"
    result = runner.invoke(app, ["construct", "fixture", "theta", "-o", str(network_file)])
    assert result.exit_code == 0
    assert load_network(network_file).graph.num_edges == 3

    result = runner.invoke(app, ["construct", "fixture", "theta", "--graph-only", "-o", str(graph_file)])
    assert result.exit_code == 0
    assert "curves" not in yaml.safe_load(graph_file.read_text())


def test_classify_graph(runner, tmp_path):
    source = tmp_path / "stacked.json"
    save_graph(source, get_graph("stacked-strata"))
    annotated = tmp_path / "annotated.json"
    result = runner.invoke(app, ["classify", str(source), "-o", str(annotated)])
    assert result.exit_code == 0
    assert "StratifiedStraight" in result.stdout
    assert "step: 2" in result.stdout
    document = json.loads(annotated.read_text())
    assert document["verdict"] == "StratifiedStraight"
    assert len(document["strata"]) == 3


def test_classify_square_angle(runner, tmp_path):
    source = tmp_path / "counterexample.yaml"
    save_graph(source, get_graph("right-angle-counterexample"))
    result = runner.invoke(app, ["classify", str(source), "--square-angle"])
    assert result.exit_code == 0
    assert "StratifiedNotStraight" in result.stdout
    assert "forbidden cycle" in result.stdout


def test_classify_network(runner, tmp_path):
    source = tmp_path / "two_loops.json"
    save_network(source, get_network("two-loops-degenerate"))
    result = runner.invoke(app, ["classify", str(source)])
    assert result.exit_code == 0
    assert "verdict: Degenerate" in result.stdout


def test_classify_rejects_malformed_input(runner, tmp_path):
    source = tmp_path / "broken.json"
    source.write_text('{"vertices": ["a"], "edges": [{"v0": "a", "v1": "b", "d0": "bogus", "d1": 0}]}')
    result = runner.invoke(app, ["classify", str(source)])
    assert result.exit_code == 1
    assert "error:" in result.stderr
    assert result.stdout == ""


def test_missing_file(runner, tmp_path):
    result = runner.invoke(app, ["classify", str(tmp_path / "absent.json")])
    assert result.exit_code == 1
    assert "DocumentFormatError" in result.stderr


def test_analyze_writes_tables(runner, tmp_path):
    source = tmp_path / "circle.json"
    save_network(source, get_network("unit-circle"))
    out = tmp_path / "tables"
    result = runner.invoke(app, ["analyze", str(source), "-d", str(out)])
    assert result.exit_code == 0
    energy = pd.read_csv(out / "circle_energy.csv")
    assert energy["energy"].sum() == pytest.approx(12.566, rel=1e-3)
    residuals = pd.read_csv(out / "circle_el.csv")
    assert set(residuals["kind"]) == {"edge", "junction"}
    assert "twice total curvature" in result.stdout


def test_render(runner, tmp_path):
    source = tmp_path / "theta.json"
    save_network(source, get_network("theta"))
    figure = tmp_path / "theta.svg"
    result = runner.invoke(app, ["render", str(source), "-o", str(figure), "--scale", "50"])
    assert result.exit_code == 0
    assert figure.read_text().lstrip().startswith("<?xml")


def test_render_rejects_bad_scale(runner, tmp_path):
    source = tmp_path / "theta.json"
    save_network(source, get_network("theta"))
    result = runner.invoke(app, ["render", str(source), "-o", str(tmp_path / "x.svg"), "--scale", "-1"])
    assert result.exit_code == 1
    assert "ParameterRangeError" in result.stderr


def test_constructions(runner, tmp_path):
    tracks = tmp_path / "tracks.json"
    result = runner.invoke(app, ["construct", "train-tracks", "--h", "0.5", "--samples", "64", "-o", str(tracks)])
    assert result.exit_code == 0
    assert load_network(tracks).graph.num_edges == 1

    result = runner.invoke(app, ["construct", "train-tracks", "--h", "3", "-o", str(tracks)])
    assert result.exit_code == 1

    fan = tmp_path / "fan.json"
    result = runner.invoke(app, ["construct", "fan", "--r", "0.1", "--a", "0.1", "--samples", "64", "-o", str(fan)])
    assert result.exit_code == 0
    assert "closed-form energy" in result.stdout


def test_desingularize_command(runner, tmp_path):
    source = tmp_path / "two_loops.json"
    save_network(source, get_network("two-loops-degenerate"))
    target = tmp_path / "regular.json"
    result = runner.invoke(app, ["construct", "desingularize", str(source), "--eps", "0.1", "-o", str(target)])
    assert result.exit_code == 0
    assert not load_network(target).singular_edges

    regular = tmp_path / "theta.json"
    save_network(regular, get_network("theta"))
    result = runner.invoke(app, ["construct", "desingularize", str(regular), "--eps", "0.1"])
    assert result.exit_code == 1
    assert "PreconditionError" in result.stderr


def test_minimize_writes_network_and_log(runner, tmp_path, quick_config):
    source = tmp_path / "loop.json"
    save_graph(source, get_graph("loop"))
    output = tmp_path / "circle.json"
    result = runner.invoke(app, ["--config", str(quick_config), "minimize", str(source), "-o", str(output)])
    assert result.exit_code in (0, 2)
    assert "energy:" in result.stdout
    assert load_network(output).graph.num_edges == 1
    history = pd.read_csv(tmp_path / "circle_convergence.csv")
    assert len(history) >= 1


def test_minimize_not_converged_still_writes(runner, tmp_path, quick_config):
    source = tmp_path / "theta.json"
    save_graph(source, get_graph("theta"))
    output = tmp_path / "partial.json"
    result = runner.invoke(
        app, ["--config", str(quick_config), "minimize", str(source), "--max-iter", "1", "-o", str(output)]
    )
    assert result.exit_code == 2
    assert output.exists()
    assert "NotConverged" in result.stderr


def test_minimize_rejects_wrong_length_count(runner, tmp_path):
    source = tmp_path / "theta.json"
    save_graph(source, get_graph("theta"))
    result = runner.invoke(app, ["minimize", str(source), "--fixed-lengths", "1,2"])
    assert result.exit_code == 1
    assert "error:" in result.stderr


def test_bad_config_file(runner, tmp_path):
    config = tmp_path / "bad.yaml"
    config.write_text("solver:\n  samples: -3\n")
    result = runner.invoke(app, ["--config", str(config), "construct", "list"])
    assert result.exit_code == 1
    assert "ConfigurationError" in result.stderr


def test_usage_errors_are_malformed_input(tmp_path):
    assert run(["classify"]) == 1
    assert run(["render", str(tmp_path / "x.json")]) == 1
    assert run(["no-such-command"]) == 1


def test_run_returns_command_exit_code(tmp_path):
    assert run(["construct", "list"]) == 0
    assert run(["classify", str(tmp_path / "absent.json")]) == 1
