"""
Shared Test Fixtures
File: tests/conftest.py
Created: 2025-09-27
Purpose: Catalog objects, isolated settings and a command-line runner
"""

import math
import os

import pytest
from typer.testing import CliRunner

from app.geometry.catalog import (
    collapsed_cycle_network,
    fan_limit_degenerate_network,
    theta_network,
    two_loops_degenerate_network,
    unit_circle_network,
)
from app.graph_core.catalog import get_graph
from app.optimize import MinimizeOptions
from app.shared_kernel import configure_logging, reset_settings


@pytest.fixture(autouse=True)
def isolated_settings(monkeypatch):
    """Every test starts from the built-in defaults, untouched by the environment."""
    for key in list(os.environ):
        if key.startswith("ELASTINET_"):
            monkeypatch.delenv(key, raising=False)
    reset_settings()
    yield
    reset_settings()


@pytest.fixture
def theta_graph():
    return get_graph("theta")


@pytest.fixture
def theta():
    return theta_network()


@pytest.fixture
def unit_circle():
    return unit_circle_network()


@pytest.fixture
def two_loops_degenerate():
    return two_loops_degenerate_network()


@pytest.fixture
def fan_limit_degenerate():
    return fan_limit_degenerate_network()


@pytest.fixture
def collapsed_cycle():
    return collapsed_cycle_network()


@pytest.fixture
def quick_options():
    """Small solves for structural tests."""
    return MinimizeOptions(samples=16, restarts=1, max_iter=400, tol_c=1e-6, tol_g=1e-4)


@pytest.fixture
def runner():
    yield CliRunner()
    # the CLI binds logging to the runner's stderr; rebind to the real one
    configure_logging("WARNING")


@pytest.fixture
def circle_energy():
    return 4.0 * math.pi
