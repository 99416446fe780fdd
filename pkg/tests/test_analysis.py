"""Lower bounds, Euler-Lagrange residuals, explicit constructions and desingularization."""

import math

import numpy as np
import pandas as pd
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from app.analysis import (
    cycle_turning_total,
    desingularize,
    el_residual,
    fan_energy,
    fan_network,
    lemma2c_bound,
    lower_bound_cycle,
    make_collapsing_fan,
    make_train_tracks,
    straighten_endpoint,
    tangent_oscillation,
    train_track_angle,
    train_tracks_network,
    zero_energy_attainable,
)
from app.classify import VerdictKind, classify_network
from app.geometry import (
    DiscreteCurve,
    Network,
    arc_curve,
    curve_energy,
    elastic_energy,
    segment_curve,
    singular_curve,
    straight_prefix_length,
)
from app.geometry.catalog import segment_network
from app.graph_core import build_graph, make_path
from app.graph_core.catalog import get_graph
from app.shared_kernel import (
    ConstructionError,
    GeometryError,
    ParameterRangeError,
    PreconditionError,
)


# ---------------------------------------------------------------- bounds


def test_lower_bound_cycle():
    assert lower_bound_cycle([math.pi / 3] * 4, 1.0) == pytest.approx((2 * math.pi / 3) ** 2)
    assert lower_bound_cycle([math.pi / 3] * 4, 2.0) == pytest.approx((2 * math.pi / 3) ** 2 / 2)
    assert lower_bound_cycle([-math.pi / 2] * 4, 1.0) == pytest.approx(0.0, abs=1e-20)
    assert lower_bound_cycle([], 1.0) == pytest.approx(4 * math.pi ** 2)
    with pytest.raises(ParameterRangeError):
        lower_bound_cycle([0.1], 0.0)


def test_turning_bound_of_circle(unit_circle, circle_energy):
    bound = lemma2c_bound(unit_circle.curves)
    assert bound == pytest.approx(circle_energy)
    assert elastic_energy(unit_circle).total >= bound * (1 - 1e-3)


def test_turning_bound_rejects_collapsed_curves():
    with pytest.raises(GeometryError):
        lemma2c_bound([singular_curve((0.0, 0.0))])


@settings(max_examples=200, deadline=None)
@given(
    st.lists(st.floats(min_value=-3.0, max_value=3.0), min_size=4, max_size=4),
    st.floats(min_value=0.2, max_value=5.0),
)
def test_energy_dominates_twice_total_curvature(coefficients, length):
    samples = 256
    t = (np.arange(samples) + 0.5) / samples
    psi = sum(a * np.sin((k + 1) * math.pi * t + k) for k, a in enumerate(coefficients))
    chords = (length / samples) * np.column_stack([np.cos(psi), np.sin(psi)])
    curve = DiscreteCurve(np.vstack([np.zeros((1, 2)), np.cumsum(chords, axis=0)]))
    assert curve_energy(curve) >= lemma2c_bound([curve]) * (1 - 0.01)


def test_cycle_turning_total(theta, unit_circle):
    assert cycle_turning_total(unit_circle, make_path([(0, 0)], closed=True)) == pytest.approx(2 * math.pi)
    cycle = make_path([(0, 1), (1, 0)], closed=True)
    assert cycle_turning_total(theta, cycle) == pytest.approx(2 * math.pi)
    with pytest.raises(GeometryError):
        cycle_turning_total(theta, make_path([(0, 1), (1, 0)]))



def test_tangent_oscillation(unit_circle):
    circle = tangent_oscillation(unit_circle.curves[0])
    assert circle.oscillation == pytest.approx(2.0)
    assert circle.bound == pytest.approx(2 * math.pi, rel=1e-4)
    assert circle.oscillation <= circle.bound
    assert tangent_oscillation(segment_curve((0.0, 0.0), (1.0, 1.0), 8)).oscillation == pytest.approx(0.0, abs=1e-12)


@pytest.mark.parametrize(
    "name, expected",
    [("square", True), ("single-edge", True), ("stacked-strata", True), ("theta", False), ("loop", False)],
)
def test_zero_energy_attainable(name, expected):
    assert zero_energy_attainable(get_graph(name)) is expected


# ---------------------------------------------------------------- train tracks


@pytest.mark.parametrize("h", [1e-4, 0.01, 0.5, 2.0])
def test_train_tracks(h):
    c = make_train_tracks(h)
    assert c.start == pytest.approx([0.0, 0.0], abs=1e-12)
    assert c.end[1] == h
    assert c.end[0] == pytest.approx(2 * math.sin(train_track_angle(h)), abs=1e-12)
    assert c.tangents == (0.0, 0.0)
    assert curve_energy(c) == pytest.approx(4 * math.acos(1 - h / 2), rel=5e-3)


def test_train_tracks_energy_scales_like_square_root():
    h = 1e-4
    assert 0.98 <= curve_energy(make_train_tracks(h)) / (4 * math.sqrt(h)) <= 1.02


@pytest.mark.parametrize("h", [0.0, -1.0, 2.5, float("nan")])
def test_train_tracks_reject(h):
    with pytest.raises(ParameterRangeError):
        make_train_tracks(h)


def test_train_tracks_network_is_regular():
    n = train_tracks_network(0.1)
    assert classify_network(n).kind is VerdictKind.REGULAR
    assert n.graph.directions[0] == pytest.approx((0.0, math.pi))


# ---------------------------------------------------------------- collapsing fan


def test_collapsing_fan_energy():
    curves = make_collapsing_fan(0.01, 0.01)
    measured = sum(curve_energy(c) for c in curves)
    assert measured == pytest.approx(fan_energy(0.01, 0.01), rel=1e-2)
    assert fan_energy(0.01, 0.01) == pytest.approx(2.0, rel=2.5e-2)


def test_collapsing_fan_geometry():
    r, a = 0.05, 0.2
    upper, lower, middle = make_collapsing_fan(r, a)
    assert upper.end == pytest.approx(middle.end)
    assert lower.end == pytest.approx(middle.start)
    assert upper.start_heading == pytest.approx(0.0)
    assert lower.start_heading == pytest.approx(0.0)
    assert np.linalg.norm(upper.start - lower.start) == pytest.approx(2 * r * math.tan(a / 2))


def test_collapsing_fan_energy_vanishes():
    energies = [
        sum(curve_energy(c) for c in make_collapsing_fan(1.0 / n, 1.0 / n ** 2)) for n in (10, 20, 40)
    ]
    assert energies[0] > energies[1] > energies[2]


def test_fan_network():
    n = fan_network(0.05, 0.2)
    assert n.graph.vertex_labels == ("a1", "b", "a2", "c")
    assert classify_network(n).kind is VerdictKind.REGULAR


@pytest.mark.parametrize("r, a", [(0.0, 0.1), (0.1, 0.0), (0.1, math.pi / 2)])
def test_collapsing_fan_rejects(r, a):
    with pytest.raises(ParameterRangeError):
        make_collapsing_fan(r, a)


# ---------------------------------------------------------------- straightening


def test_straighten_endpoint():
    c = arc_curve((0.0, 1.0), 1.0, -math.pi / 2, math.pi / 2, 128)
    eps = 0.05
    s = straighten_endpoint(c, eps)
    assert s.start == pytest.approx(c.start)
    assert s.end == pytest.approx(c.end)
    assert s.start_heading == pytest.approx(c.start_heading)
    assert 0.0 < straight_prefix_length(s) <= eps * (1 + 1e-9)
    assert curve_energy(s) <= curve_energy(c) * (1 + eps)


def test_straighten_keeps_straight_starts():
    c = segment_curve((0.0, 0.0), (1.0, 0.0), 8)
    assert straighten_endpoint(c, 0.1) is c


def test_straighten_rejects():
    with pytest.raises(ConstructionError):
        straighten_endpoint(singular_curve((0.0, 0.0)), 0.1)
    with pytest.raises(ParameterRangeError):
        straighten_endpoint(segment_curve((0.0, 0.0), (1.0, 0.0), 8), 0.0)


# ---------------------------------------------------------------- Euler-Lagrange residuals


def test_circle_is_critical(unit_circle):
    report = el_residual(unit_circle)
    assert report.max_interior <= 1e-2
    assert report.max_junction <= 1e-2
    assert not report.skipped


def test_segment_interior_is_exactly_critical():
    report = el_residual(segment_network(2.0))
    assert report.max_interior == 0.0
    assert report.edges[0].values.size == 64 - 3


def test_theta_arcs_are_critical_for_matching_weights(theta):
    # arcs of radius 2/sqrt(3) satisfy k^3 = (beta/alpha) k for beta/alpha = 3/4
    assert el_residual(theta, 1.0, 0.75).max_interior <= 1e-2
    assert el_residual(theta, 1.0, 1.0).max_interior > 0.1


def test_residual_of_sine_curvature():
    # tangent angle 1 - cos(s) on [0, pi]: k = sin(s), residual -3 sin(s) + sin(s)^3
    samples = 512
    h = math.pi / samples
    psi = 1.0 - np.cos(h * (np.arange(samples) + 0.5))
    chords = h * np.column_stack([np.cos(psi), np.sin(psi)])
    curve = DiscreteCurve(np.vstack([np.zeros((1, 2)), np.cumsum(chords, axis=0)]))
    g = build_graph([("a", "b", curve.start_heading, curve.end_heading + math.pi)])
    edge = el_residual(Network(g, (curve,))).edges[0]
    s = edge.arclength
    assert np.max(np.abs(edge.values - (-3.0 * np.sin(s) + np.sin(s) ** 3))) <= 5e-2


def test_residuals_skip_collapsed_parts(two_loops_degenerate, tmp_path):
    report = el_residual(two_loops_degenerate)
    assert [e.edge_id for e in report.edges] == ["E1", "E3"]
    assert any("E2" in item for item in report.skipped)
    assert report.junctions == []
    table = pd.read_csv(report.write_csv(tmp_path / "el.csv"))
    assert table["kind"].tolist() == ["edge", "edge"]


def test_residuals_need_enough_chords():
    with pytest.raises(GeometryError):
        el_residual(segment_network(1.0, samples=4))
    with pytest.raises(ParameterRangeError):
        el_residual(segment_network(), alpha=0.0)


# ---------------------------------------------------------------- desingularization


def test_desingularize_two_loops(two_loops_degenerate):
    limit = elastic_energy(two_loops_degenerate).total
    gaps = []
    for eps in (0.2, 0.1, 0.05):
        n = desingularize(two_loops_degenerate, eps)
        assert not n.singular_edges
        assert classify_network(n).kind is VerdictKind.REGULAR
        gaps.append(abs(elastic_energy(n).total - limit))
    assert gaps[0] > gaps[1] > gaps[2]


def test_desingularize_two_loops_is_close_in_energy(two_loops_degenerate):
    limit = elastic_energy(two_loops_degenerate).total
    n = desingularize(two_loops_degenerate, 0.01)
    assert elastic_energy(n).total == pytest.approx(limit, rel=0.05)


@pytest.mark.parametrize("eps", [0.1, 0.05])
def test_desingularize_two_strata(fan_limit_degenerate, eps):
    n = desingularize(fan_limit_degenerate, eps)
    assert not n.singular_edges
    assert classify_network(n).kind is VerdictKind.REGULAR


def test_desingularize_preconditions(theta, collapsed_cycle, two_loops_degenerate):
    with pytest.raises(PreconditionError):
        desingularize(theta, 0.1)
    with pytest.raises(PreconditionError):
        desingularize(collapsed_cycle, 0.1)
    with pytest.raises(ParameterRangeError):
        desingularize(two_loops_degenerate, -0.1)
