"""Propagation, straight realizations, stratification, the right-angle criterion and verdicts."""

import functools
import math
from itertools import combinations, combinations_with_replacement, product

import networkx as nx
import numpy as np
import pytest
from scipy.optimize import linprog

from app.classify import (
    SquareAngleVerdict,
    StrataVerdict,
    VerdictKind,
    angle_condition,
    check_angle_condition,
    classify_network,
    max_support_realization,
    order_sets,
    propagate_directions,
    square_angle_straightness,
    stratify,
)
from app.classify.documents import half_edge_key, square_angle_document, strata_report_document, verdict_document
from app.classify.simplex import LinearProgramError, maximize
from app.geometry import relaxed_energy
from app.geometry.catalog import collapsed_cycle_network
from app.graph_core import HalfEdgeId, build_graph
from app.graph_core.catalog import get_graph
from app.shared_kernel import PreconditionError, angle_distance


# ---------------------------------------------------------------- simplex


@pytest.mark.parametrize("seed", range(12))
def test_maximize_agrees_with_linprog(seed):
    rng = np.random.default_rng(seed)
    n, m = 6, 2
    a_eq = rng.normal(size=(m, n))
    upper = rng.uniform(0.5, 2.0, size=n)
    b_eq = a_eq @ (rng.uniform(0.0, 1.0, size=n) * upper)
    cost = rng.normal(size=n)

    ours = maximize(cost, a_eq, b_eq, upper)
    reference = linprog(-cost, A_eq=a_eq, b_eq=b_eq, bounds=list(zip(np.zeros(n), upper)), method="highs")

    assert reference.status == 0
    assert ours.value == pytest.approx(-reference.fun, abs=1e-7)
    assert np.allclose(a_eq @ ours.x, b_eq, atol=1e-8)
    assert np.all(ours.x >= 0.0) and np.all(ours.x <= upper)


def test_maximize_without_equalities():
    solution = maximize(np.array([1.0, -1.0]), np.zeros((0, 2)), np.zeros(0), np.array([3.0, 2.0]))
    assert solution.x == pytest.approx([3.0, 0.0])
    assert solution.value == pytest.approx(3.0)


def test_maximize_drops_redundant_rows():
    a_eq = np.array([[1.0, -1.0, 0.0], [2.0, -2.0, 0.0]])
    solution = maximize(np.ones(3), a_eq, np.zeros(2), np.ones(3))
    assert solution.x == pytest.approx([1.0, 1.0, 1.0])


def test_maximize_infeasible():
    with pytest.raises(LinearProgramError):
        maximize(np.ones(2), np.array([[1.0, 1.0]]), np.array([3.0]), np.ones(2))


# ---------------------------------------------------------------- propagation


def test_propagation_fails_on_theta(theta_graph):
    result = propagate_directions(theta_graph, None, HalfEdgeId(0, 0), 0.0)
    assert not result.ok
    assert result.failed_cycle is not None
    assert result.failed_angle == pytest.approx(2 * math.pi / 3)


@pytest.mark.parametrize("name", ["square", "stacked-strata", "right-angle-counterexample", "straight-path"])
def test_propagated_tangents_are_opposite_on_each_edge(name):
    g = get_graph(name)
    result = propagate_directions(g, None, HalfEdgeId(0, 0), 0.7)
    assert result.ok
    tangent = result.assignment.tangent
    assert angle_distance(tangent[HalfEdgeId(0, 0)], 0.7) < 1e-12
    for i in range(g.num_edges):
        assert angle_distance(tangent[HalfEdgeId(i, 0)], tangent[HalfEdgeId(i, 1)] + math.pi) < 1e-9
    for h, value in tangent.items():
        rotation = result.assignment.rotation[g.vertex_of(h)]
        assert angle_distance(value, rotation + g.direction(h)) < 1e-9


def test_square_propagation_keeps_directions():
    g = get_graph("square")
    result = propagate_directions(g, None, HalfEdgeId(0, 0), 0.0)
    assert all(angle_distance(phi, 0.0) < 1e-12 for phi in result.assignment.rotation.values())


def test_propagation_preconditions(theta_graph):
    with pytest.raises(PreconditionError):
        propagate_directions(theta_graph, frozenset({1}), HalfEdgeId(0, 0), 0.0)
    g = build_graph([("a", "b", 0, "pi"), ("c", "d", 0, "pi")])
    with pytest.raises(PreconditionError):
        propagate_directions(g, None, HalfEdgeId(0, 0), 0.0)


# ---------------------------------------------------------------- stratification


def test_square_is_straight():
    report = stratify(get_graph("square"), None)
    assert report.verdict is StrataVerdict.STRAIGHT
    assert report.step == 0
    realization = report.realizations[0]
    assert realization.support == frozenset(range(4))
    assert realization.lengths == pytest.approx({0: 1.0, 1: 1.0, 2: 1.0, 3: 1.0})
    assert realization.positions[2] == pytest.approx([1.0, 1.0])


def test_stacked_strata():
    report = stratify(get_graph("stacked-strata"), None)
    assert report.verdict is StrataVerdict.STRATIFIED_STRAIGHT
    assert report.step == 2
    assert report.strata == [frozenset(range(5)), frozenset({2, 3, 4}), frozenset({4})]
    assert report.realizations[0].support == frozenset({0, 1})
    assert report.realizations[1].support == frozenset({2, 3})


def test_fan_limit_triangle_has_two_strata():
    report = stratify(get_graph("fan-limit"), frozenset({0, 1, 2}))
    assert report.verdict is StrataVerdict.STRATIFIED_STRAIGHT
    assert report.step == 1
    assert report.strata == [frozenset({0, 1, 2}), frozenset({2})]


def test_collapsed_cycle_is_not_stratified():
    report = stratify(get_graph("collapsed-cycle"), frozenset({0, 1, 2, 3}))
    assert report.verdict is StrataVerdict.NOT_STRATIFIED
    assert report.reasons


def test_theta_is_not_stratified(theta_graph):
    report = stratify(theta_graph, None)
    assert report.verdict is StrataVerdict.NOT_STRATIFIED
    assert report.step == 0


def test_realization_closes_every_cycle():
    g = get_graph("stacked-strata")
    report = stratify(g, None)
    realization = max_support_realization(g, frozenset({2, 3, 4}), report.tangents)
    for i in (2, 3, 4):
        v0, v1 = g.endpoints[i]
        step = realization.positions[v1] - realization.positions[v0]
        assert np.linalg.norm(step) == pytest.approx(realization.lengths[i], abs=1e-9)
    assert max(realization.lengths.values()) == pytest.approx(1.0)


def test_realization_needs_tangents():
    g = get_graph("square")
    report = stratify(g, frozenset({0}))
    with pytest.raises(PreconditionError):
        max_support_realization(g, None, report.tangents)


# ---------------------------------------------------------------- right-angle criterion


def test_right_angle_counterexample():
    g = get_graph("right-angle-counterexample")
    assert stratify(g, None).strata[1] == frozenset({0, 2})
    report = square_angle_straightness(g)
    assert report.verdict is SquareAngleVerdict.STRATIFIED_NOT_STRAIGHT
    assert report.witness_edge == 0
    assert report.witness.edges == (0, 1, 2, 3)
    assert report.witness.closed
    assert report.x_set | report.y_set == frozenset(range(4))
    assert not report.x_set & report.y_set


@pytest.mark.parametrize("name", ["square", "right-angle-tree", "straight-path"])
def test_right_angle_straight(name):
    report = square_angle_straightness(get_graph(name))
    assert report.verdict is SquareAngleVerdict.STRAIGHT
    assert report.witness is None
    assert stratify(get_graph(name), None).step == 0


def test_right_angle_rejects_other_angles(theta_graph):
    with pytest.raises(PreconditionError):
        square_angle_straightness(theta_graph)


def test_right_angle_rejects_repeated_directions():
    g = build_graph([("a", "b", 0, "pi"), ("a", "c", 0, "pi")])
    with pytest.raises(PreconditionError):
        square_angle_straightness(g)


def test_order_sets_of_open_chain():
    g = get_graph("straight-path")
    x_set, y_set = order_sets(g, g.all_edges, 0)
    assert x_set == frozenset({1, 2})
    assert y_set == frozenset({0})


# ---------------------------------------------------------------- network verdicts


def test_regular_networks(theta, unit_circle):
    for n in (theta, unit_circle):
        verdict = classify_network(n)
        assert verdict.kind is VerdictKind.REGULAR
        assert verdict.strata is None
        assert verdict.step == 0


def test_two_loops_degenerate(two_loops_degenerate):
    verdict = classify_network(two_loops_degenerate)
    assert verdict.kind is VerdictKind.DEGENERATE
    assert verdict.step == 1
    assert verdict.strata.step == 0


def test_fan_limit_degenerate(fan_limit_degenerate):
    verdict = classify_network(fan_limit_degenerate)
    assert verdict.kind is VerdictKind.DEGENERATE
    assert verdict.step == 2
    assert verdict.strata.step == 1
    assert verdict.strata.strata[1] == frozenset({2})


def test_collapsed_cycle_is_inadmissible(collapsed_cycle):
    assert check_angle_condition(collapsed_cycle).passed
    verdict = classify_network(collapsed_cycle)
    assert verdict.kind is VerdictKind.INADMISSIBLE
    assert verdict.reasons
    assert relaxed_energy(collapsed_cycle) == math.inf


def test_twisted_junction_fails_the_angle_condition():
    result = check_angle_condition(collapsed_cycle_network(twist=0.1))
    assert not result.passed
    assert any("rotations" in reason for reason in result.reasons)


def test_relaxed_energy_of_degenerate_network(two_loops_degenerate):
    assert math.isfinite(relaxed_energy(two_loops_degenerate))


# ---------------------------------------------------------------- documents


def test_strata_report_document():
    g = get_graph("stacked-strata")
    doc = strata_report_document(g, stratify(g, None))
    assert doc.verdict == "StratifiedStraight"
    assert doc.step == 2
    assert [s.edges for s in doc.strata] == [["E1", "E2", "E3", "E4", "E5"], ["E3", "E4", "E5"], ["E5"]]
    assert doc.tangents[half_edge_key(g, HalfEdgeId(0, 0))] == "0"


def test_square_angle_document():
    g = get_graph("right-angle-counterexample")
    doc = square_angle_document(g, square_angle_straightness(g))
    assert doc.verdict == "StratifiedNotStraight"
    assert doc.witness.startswith("cycle[(0,E1)")


def test_verdict_document(fan_limit_degenerate):
    doc = verdict_document(fan_limit_degenerate, classify_network(fan_limit_degenerate))
    assert doc.verdict == "Degenerate"
    assert doc.step == 2
    assert set(doc.geometry) == {"E1", "E2", "E3", "E4", "E5"}


# ---------------------------------------------------------------- brute-force minimal step


def _support_feasible(g, current, support, tangents):
    """Straight realization of ``current`` with lengths >= 1 exactly on ``support``, via vertex positions."""
    order = sorted(current)
    vertices = g.vertices_of(order)
    column = {v: len(order) + 2 * k for k, v in enumerate(vertices)}
    a_eq = np.zeros((2 * len(order), len(order) + 2 * len(vertices)))
    for row, edge in enumerate(order):
        v0, v1 = g.endpoints[edge]
        angle = tangents.tangent[HalfEdgeId(edge, 0)]
        for axis, component in enumerate((math.cos(angle), math.sin(angle))):
            r = 2 * row + axis
            a_eq[r, column[v1] + axis] += 1.0
            a_eq[r, column[v0] + axis] -= 1.0
            a_eq[r, row] -= component
    bounds = [(1.0, None) if edge in support else (0.0, 0.0) for edge in order]
    bounds += [(None, None)] * (2 * len(vertices))
    result = linprog(np.zeros(a_eq.shape[1]), A_eq=a_eq, b_eq=np.zeros(a_eq.shape[0]),
                     bounds=bounds, method="highs")
    return result.status == 0


def fewest_levels(edges, feasible):
    """Least number of nonempty strata over every choice of supports; inf if none works."""

    @functools.lru_cache(maxsize=None)
    def levels(current):
        if not current:
            return 0
        best = math.inf
        items = sorted(current)
        for size in range(1, len(items) + 1):
            for support in combinations(items, size):
                if feasible(current, frozenset(support)):
                    best = min(best, 1 + levels(current - frozenset(support)))
        return best

    return levels(frozenset(edges))


def brute_force_step(g, tangents):
    def feasible(current, support):
        return _support_feasible(g, current, support, tangents)

    return fewest_levels(range(g.num_edges), feasible) - 1


def greedy_step(report):
    return math.inf if report.verdict is StrataVerdict.NOT_STRATIFIED else report.step


def random_rotated_graph(seed):
    """Graph whose directions come from straight tangents (multiples of pi/6) turned at each vertex."""
    rng = np.random.default_rng(seed)
    num_vertices = int(rng.integers(2, 4))
    rotation = rng.integers(0, 12, size=num_vertices) * math.pi / 6
    specs = []
    for _ in range(4):
        v0, v1 = (int(v) for v in rng.integers(0, num_vertices, size=2))
        tangent = int(rng.integers(0, 12)) * math.pi / 6
        specs.append((f"v{v0}", f"v{v1}", tangent - rotation[v0], tangent + math.pi - rotation[v1]))
    return build_graph(specs)


@pytest.mark.slow
@pytest.mark.parametrize("name", ["square", "straight-path", "right-angle-tree", "stacked-strata", "fan-limit", "right-angle-counterexample"])
def test_greedy_step_is_minimal_on_catalog(name):
    g = get_graph(name)
    report = stratify(g, None)
    assert report.tangents is not None
    assert greedy_step(report) == brute_force_step(g, report.tangents)


@pytest.mark.slow
@pytest.mark.parametrize("seed", range(25))
def test_greedy_step_is_minimal_on_random_graphs(seed):
    g = random_rotated_graph(seed)
    report = stratify(g, None)
    assert report.tangents is not None
    assert greedy_step(report) == brute_force_step(g, report.tangents)


AXIS_UNITS = ((1, 0), (0, 1), (-1, 0), (0, -1))  # tangent k*pi/2
PAIR_SLOTS = ((0, 1), (0, 2), (1, 2))
# edge multiplicities on the three vertex pairs, up to relabeling the vertices
PAIR_COUNTS = [(a, b, c) for a in range(1, 6) for b in range(a + 1) for c in range(b + 1) if a + b + c <= 5]


def axis_support_feasible(edges, current, support):
    """Lengths >= 1 on ``support`` and 0 on the rest of ``current`` as difference constraints, one axis at a time."""
    for axis in (0, 1):
        bounds = nx.DiGraph()

        def bound(u, v, w):
            # x_v <= x_u + w
            if not bounds.has_edge(u, v) or bounds[u][v]["weight"] > w:
                bounds.add_edge(u, v, weight=w)

        for i in current:
            v0, v1, k = edges[i]
            component = AXIS_UNITS[k][axis]
            if component == 0 or i not in support:
                bound(v0, v1, 0)
                bound(v1, v0, 0)
            elif component > 0:
                bound(v1, v0, -1)
            else:
                bound(v0, v1, -1)
        if nx.negative_edge_cycle(bounds):
            return False
    return True


@pytest.mark.slow
@pytest.mark.parametrize("counts", PAIR_COUNTS)
def test_greedy_step_is_minimal_on_every_small_axis_graph(counts):
    pairs = [pair for pair, count in zip(PAIR_SLOTS, counts) for _ in range(count)]
    # a quarter turn of every tangent changes nothing, so the first one stays at 0
    for rest in product(range(4), repeat=len(pairs) - 1):
        edges = [(a, b, k) for (a, b), k in zip(pairs, (0,) + rest)]
        g = build_graph([(f"v{a}", f"v{b}", k * math.pi / 2, k * math.pi / 2 + math.pi) for a, b, k in edges])
        expected = fewest_levels(range(len(edges)), functools.partial(axis_support_feasible, edges)) - 1
        assert greedy_step(stratify(g, None)) == expected, edges


# ---------------------------------------------------------------- brute-force angle condition

SIXTH = math.pi / 6


def brute_force_angle_condition(g, singular, real_tangents, turns=12):
    """Search junction rotations in multiples of 2*pi/turns for one that explains every tangent."""
    for rotation in product(range(turns), repeat=g.num_vertices):
        rho = [k * 2 * math.pi / turns for k in rotation]
        real_ok = all(
            angle_distance(t, rho[g.vertex_of(h)] + g.direction(h)) < 1e-9 for h, t in real_tangents.items()
        )
        if not real_ok:
            continue
        singular_ok = all(
            angle_distance(
                rho[g.endpoints[i][0]] + g.direction(HalfEdgeId(i, 0)),
                rho[g.endpoints[i][1]] + g.direction(HalfEdgeId(i, 1)) + math.pi,
            ) < 1e-9
            for i in singular
        )
        if singular_ok:
            return True
    return False


def random_angle_instance(seed):
    """Small graph, singular part and real tangents, all in multiples of pi/6."""
    rng = np.random.default_rng(seed)
    consistent = seed % 2 == 0
    g = random_rotated_graph(seed) if consistent else build_graph([
        (f"v{int(a)}", f"v{int(b)}", int(d0) * SIXTH, int(d1) * SIXTH)
        for a, b, d0, d1 in zip(rng.integers(0, 3, 4), rng.integers(0, 3, 4), rng.integers(0, 12, 4), rng.integers(0, 12, 4))
    ])
    singular = frozenset(int(i) for i in np.flatnonzero(rng.random(g.num_edges) < 0.5))
    rho = rng.integers(0, 12, size=g.num_vertices) * SIXTH
    real_tangents = {}
    for i in range(g.num_edges):
        if i in singular:
            continue
        for end in (0, 1):
            h = HalfEdgeId(i, end)
            if consistent and rng.random() < 0.8:
                real_tangents[h] = float(rho[g.vertex_of(h)] + g.direction(h))
            else:
                real_tangents[h] = int(rng.integers(0, 12)) * SIXTH
    return g, singular, real_tangents


@pytest.mark.parametrize("seed", range(60))
def test_angle_condition_agrees_with_brute_force(seed):
    g, singular, real_tangents = random_angle_instance(seed)
    expected = brute_force_angle_condition(g, singular, real_tangents)
    assert angle_condition(g, singular, real_tangents).passed is expected


ANGLE_SLOTS = ((0, 1), (0, 2), (1, 2), (0, 0))
HALF_TURN_STATES = (
    ("singular", 0),
    ("singular", 1),
    ("regular", (0, 0)),
    ("regular", (0, 1)),
    ("regular", (1, 0)),
    ("regular", (1, 1)),
)
SLOT_COUNTS = [counts for counts in product(range(6), repeat=len(ANGLE_SLOTS)) if 1 <= sum(counts) <= 5]


def half_turn_instance(edges):
    """Graph, singular part and real tangents from (slot, state) pairs; every offset is 0 or pi."""
    specs, singular, offsets = [], set(), {}
    for i, ((a, b), (kind, value)) in enumerate(edges):
        if kind == "singular":
            specs.append((f"v{a}", f"v{b}", value * math.pi, 0.0))
            singular.add(i)
        else:
            specs.append((f"v{a}", f"v{b}", 0.0, math.pi))
            offsets[i] = value
    g = build_graph(specs)
    real_tangents = {
        HalfEdgeId(i, end): value[end] * math.pi + g.direction(HalfEdgeId(i, end))
        for i, value in offsets.items()
        for end in (0, 1)
    }
    return g, frozenset(singular), real_tangents


@pytest.mark.slow
@pytest.mark.parametrize("counts", SLOT_COUNTS)
def test_angle_condition_agrees_with_brute_force_on_every_small_graph(counts):
    per_slot = [list(combinations_with_replacement(HALF_TURN_STATES, count)) for count in counts]
    for choice in product(*per_slot):
        edges = [(slot, state) for slot, states in zip(ANGLE_SLOTS, choice) for state in states]
        g, singular, real_tangents = half_turn_instance(edges)
        expected = brute_force_angle_condition(g, singular, real_tangents, turns=2)
        assert angle_condition(g, singular, real_tangents).passed is expected, edges
