"""
Optimization Variables
File: app/optimize/variables.py
Created: 2025-09-15
Purpose: Tangent-angle representation of networks, initialization, reconstruction and extraction
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from app.classify import check_angle_condition
from app.classify.propagation import relative_rotations
from app.geometry import DiscreteCurve, Network, resample_constant_speed, singular_curve
from app.graph_core import AngledGraph
from app.shared_kernel import (
    CHORD_EQUALITY_RTOL,
    TWO_PI,
    GeometryError,
    ParameterRangeError,
    signed_angle,
    wrap_angle,
)


@dataclass(frozen=True)
class EdgeFrame:
    """Endpoint vertices and prescribed direction angles of the regular edges."""

    p0: np.ndarray
    p1: np.ndarray
    d0: np.ndarray
    d1: np.ndarray

    @classmethod
    def of(cls, g: AngledGraph, edges: Sequence[int]) -> "EdgeFrame":
        idx = list(edges)
        return cls(
            np.array([g.endpoints[i][0] for i in idx], dtype=int),
            np.array([g.endpoints[i][1] for i in idx], dtype=int),
            np.array([g.directions[i][0] for i in idx], dtype=float),
            np.array([g.directions[i][1] for i in idx], dtype=float),
        )


@dataclass(frozen=True, eq=False)
class OptimizationVariables:
    """Free unknowns of one solve.

    ``theta`` holds the interior node angles (shape (R, M-1)) of the regular
    edges; the end angles are eliminated through the junction rotations and
    the integer ``windings``. ``pinned`` edges are kept collapsed.
    """

    regular: Tuple[int, ...]
    pinned: Tuple[int, ...]
    windings: np.ndarray
    log_lengths: np.ndarray
    theta: np.ndarray
    positions: np.ndarray
    rotations: np.ndarray
    lengths_fixed: bool = False

    @property
    def samples(self) -> int:
        return self.theta.shape[1] + 1

    @property
    def lengths(self) -> np.ndarray:
        return np.exp(self.log_lengths)

    def to_vector(self) -> np.ndarray:
        parts = [] if self.lengths_fixed else [self.log_lengths]
        parts += [self.theta.ravel(), self.positions.ravel(), self.rotations]
        return np.concatenate(parts)

    def with_vector(self, x: np.ndarray) -> "OptimizationVariables":
        x = np.asarray(x, dtype=float)
        r, v = len(self.regular), self.positions.shape[0]
        offset = 0
        log_lengths = self.log_lengths
        if not self.lengths_fixed:
            log_lengths, offset = x[:r].copy(), r
        n_theta = self.theta.size
        theta = x[offset:offset + n_theta].reshape(self.theta.shape).copy()
        offset += n_theta
        positions = x[offset:offset + 2 * v].reshape(v, 2).copy()
        rotations = x[offset + 2 * v:offset + 3 * v].copy()
        return replace(self, log_lengths=log_lengths, theta=theta,
                       positions=positions, rotations=rotations)

    def transformed(self, rotation: float = 0.0, shift: Sequence[float] = (0.0, 0.0)) -> "OptimizationVariables":
        """Apply a rigid motion; windings are unaffected."""
        c, s = math.cos(rotation), math.sin(rotation)
        matrix = np.array([[c, -s], [s, c]])
        return replace(
            self,
            theta=self.theta + rotation,
            positions=self.positions @ matrix.T + np.asarray(shift, dtype=float),
            rotations=self.rotations + rotation,
        )


def node_angles(variables: OptimizationVariables, frame: EdgeFrame) -> np.ndarray:
    """All M+1 node angles per regular edge, end values from the junction rotations."""
    phi = variables.rotations
    first = phi[frame.p0] + frame.d0
    last = phi[frame.p1] + frame.d1 - math.pi + TWO_PI * variables.windings
    return np.column_stack([first, variables.theta, last])


def _snapped_positions(g: AngledGraph, variables: OptimizationVariables) -> np.ndarray:
    """Junctions joined by pinned edges share the mean of their positions."""
    positions = variables.positions.copy()
    if not variables.pinned:
        return positions
    joined = nx.Graph()
    joined.add_nodes_from(range(g.num_vertices))
    joined.add_edges_from(g.endpoints[i] for i in variables.pinned)
    for group in nx.connected_components(joined):
        members = sorted(group)
        positions[members] = variables.positions[members].mean(axis=0)
    return positions


def _snapped_rotations(g: AngledGraph, variables: OptimizationVariables) -> np.ndarray:
    """Rotations made exactly consistent across each pinned component."""
    rotations = variables.rotations.copy()
    for component in g.components(variables.pinned):
        root = min(g.vertices_of(component))
        exact = relative_rotations(g, component, root, rotations[root])
        for v, phi in exact.items():
            rotations[v] = phi + TWO_PI * round((variables.rotations[v] - phi) / TWO_PI)
    return rotations


def reconstruct(variables: OptimizationVariables, g: AngledGraph, close: bool = True) -> Network:
    """Integrate the node angles into a network.

    Chords use the half-node angle; with ``close`` the closure residual of
    each edge is spread linearly so the curve ends exactly on its junction.
    """
    if variables.pinned:
        variables = replace(variables, rotations=_snapped_rotations(g, variables))
    frame = EdgeFrame.of(g, variables.regular)
    theta = node_angles(variables, frame)
    positions = _snapped_positions(g, variables)
    samples = variables.samples
    psi = 0.5 * (theta[:, :-1] + theta[:, 1:])
    step = (variables.lengths / samples)[:, None]
    chords = np.stack([step * np.cos(psi), step * np.sin(psi)], axis=-1)

    curves: Dict[int, DiscreteCurve] = {}
    weights = np.linspace(0.0, 1.0, samples + 1)[:, None]
    for row, edge in enumerate(variables.regular):
        start = positions[frame.p0[row]]
        pts = start + np.vstack([np.zeros((1, 2)), np.cumsum(chords[row], axis=0)])
        if close:
            pts += weights * (positions[frame.p1[row]] - pts[-1])
            pts[-1] = positions[frame.p1[row]]
        curves[edge] = DiscreteCurve(pts, False, (float(theta[row, 0]), float(theta[row, -1])))
    for edge in variables.pinned:
        curves[edge] = singular_curve(positions[g.endpoints[edge][0]])
    return Network(g, tuple(curves[i] for i in range(g.num_edges)))


def _is_constant_speed(c: DiscreteCurve, samples: int) -> bool:
    h = c.chord_lengths
    return c.num_chords == samples and float(np.ptp(h)) <= CHORD_EQUALITY_RTOL * float(h.mean())


def extract(n: Network, samples: Optional[int] = None) -> OptimizationVariables:
    """Variables of an existing network; regular curves are resampled to constant speed if needed."""
    g = n.graph
    regular = tuple(sorted(n.regular_edges))
    pinned = tuple(sorted(n.singular_edges))
    if samples is None:
        samples = n.curves[regular[0]].num_chords if regular else 2
    if samples < 2:
        raise ParameterRangeError("samples must be at least 2", {"samples": samples})

    condition = check_angle_condition(n)
    rotations = np.zeros(g.num_vertices)
    if condition.assignment is not None:
        for v, phi in condition.assignment.rotation.items():
            rotations[v] = phi
    frame = EdgeFrame.of(g, regular)

    log_lengths: List[float] = []
    theta_rows: List[np.ndarray] = []
    windings: List[int] = []
    for row, edge in enumerate(regular):
        c = n.curves[edge]
        if not _is_constant_speed(c, samples):
            c = resample_constant_speed(c, samples)
        psi = c.chord_angles
        start = rotations[frame.p0[row]] + frame.d0[row]
        shift = TWO_PI * round((psi[0] - start) / TWO_PI)
        psi = psi - shift
        theta = np.empty(samples + 1)
        theta[0] = start
        for j in range(samples):
            theta[j + 1] = 2.0 * psi[j] - theta[j]
        base = rotations[frame.p1[row]] + frame.d1[row] - math.pi
        windings.append(int(round((theta[-1] - base) / TWO_PI)))
        log_lengths.append(math.log(c.length))
        theta_rows.append(theta[1:-1])

    return OptimizationVariables(
        regular=regular,
        pinned=pinned,
        windings=np.array(windings, dtype=int),
        log_lengths=np.array(log_lengths, dtype=float),
        theta=np.array(theta_rows, dtype=float).reshape(len(regular), samples - 1),
        positions=np.array(n.positions, dtype=float),
        rotations=rotations,
    )


def _spring_positions(g: AngledGraph, seed: int) -> np.ndarray:
    layout = nx.spring_layout(g.multigraph(), seed=seed)
    positions = np.array([layout[v] for v in range(g.num_vertices)], dtype=float)
    positions -= positions.mean(axis=0)
    if g.num_vertices > 1:
        diameter = max(
            float(np.linalg.norm(a - b)) for a in positions for b in positions
        )
        if diameter > 0.0:
            positions /= diameter
    return positions


def _initial_rotations(g: AngledGraph, positions: np.ndarray) -> np.ndarray:
    """Aim the lowest non-loop half-edge at each junction toward its other endpoint."""
    rotations = np.zeros(g.num_vertices)
    for v in range(g.num_vertices):
        for h in g.half_edges_at(v):
            if g.is_loop(h.edge):
                continue
            other = positions[g.vertex_of(h.opposite)] - positions[v]
            if np.linalg.norm(other) > 0.0:
                rotations[v] = math.atan2(other[1], other[0]) - g.direction(h)
            break
    return rotations


def _checked_lengths(values: Sequence[float]) -> np.ndarray:
    lengths = np.asarray(values, dtype=float)
    if np.any(~np.isfinite(lengths)) or np.any(lengths <= 0.0):
        raise ParameterRangeError("Prescribed lengths must be positive", {"lengths": lengths.tolist()})
    return lengths


def with_fixed_lengths(variables: OptimizationVariables, lengths: Sequence[float]) -> OptimizationVariables:
    """Hold the regular edges at ``lengths`` (indexed by edge) from now on."""
    values = _checked_lengths(lengths)
    if variables.regular and max(variables.regular) >= len(values):
        raise ParameterRangeError(
            "One prescribed length per edge is required",
            {"edges": max(variables.regular) + 1, "got": len(values)},
        )
    return replace(variables, log_lengths=np.log(values[list(variables.regular)]), lengths_fixed=True)


def initial_variables(g: AngledGraph, samples: int, seed: int = 0, noise: float = 0.0,
                      fixed_lengths: Optional[Sequence[float]] = None,
                      pinned: Sequence[int] = ()) -> OptimizationVariables:
    """Spring-layout initialization; loops turn counterclockwise.

    Non-loop edges wind the short way through their chord; lengths are those
    of the circular arc with that turning.
    """
    if samples < 2:
        raise ParameterRangeError("samples must be at least 2", {"samples": samples})
    pinned = tuple(sorted(pinned))
    regular = tuple(i for i in range(g.num_edges) if i not in set(pinned))
    rng = np.random.default_rng(seed)
    positions = _spring_positions(g, seed)
    if noise > 0.0:
        positions = positions + rng.normal(0.0, noise, positions.shape)
    rotations = _initial_rotations(g, positions)
    if noise > 0.0:
        rotations = rotations + rng.normal(0.0, noise, rotations.shape)
    frame = EdgeFrame.of(g, regular)

    if fixed_lengths is not None and len(fixed_lengths) != len(regular):
        raise ParameterRangeError(
            "One prescribed length per regular edge is required",
            {"expected": len(regular), "got": len(fixed_lengths)},
        )

    windings: List[int] = []
    log_lengths: List[float] = []
    theta_rows: List[np.ndarray] = []
    fraction = np.linspace(0.0, 1.0, samples + 1)[1:-1]
    for row, edge in enumerate(regular):
        first = rotations[frame.p0[row]] + frame.d0[row]
        base = rotations[frame.p1[row]] + frame.d1[row] - math.pi
        if g.is_loop(edge):
            turning = TWO_PI - wrap_angle(first - base)
            length = 1.0
        else:
            chord = positions[frame.p1[row]] - positions[frame.p0[row]]
            chi = math.atan2(chord[1], chord[0])
            turning = signed_angle(chi - first) + signed_angle(base - chi)
            half = min(0.5 * abs(turning), math.pi - 0.05)
            arc_factor = half / math.sin(half) if half > 1e-12 else 1.0
            length = max(float(np.linalg.norm(chord)), 0.1) * arc_factor
        wind = int(round((first + turning - base) / TWO_PI))
        windings.append(wind)
        last = base + TWO_PI * wind
        theta = first + fraction * (last - first)
        if noise > 0.0:
            theta = theta + rng.normal(0.0, noise, theta.shape)
        theta_rows.append(theta)
        log_lengths.append(math.log(length))

    lengths_fixed = fixed_lengths is not None
    if lengths_fixed:
        log_lengths = np.log(_checked_lengths(fixed_lengths)).tolist()

    return OptimizationVariables(
        regular=regular,
        pinned=pinned,
        windings=np.array(windings, dtype=int),
        log_lengths=np.array(log_lengths, dtype=float),
        theta=np.array(theta_rows, dtype=float).reshape(len(regular), samples - 1),
        positions=positions,
        rotations=rotations,
        lengths_fixed=lengths_fixed,
    )


def pin_edges(variables: OptimizationVariables, edges: Sequence[int]) -> OptimizationVariables:
    """Drop ``edges`` from the regular set and keep them collapsed."""
    drop = set(edges) & set(variables.regular)
    if not drop:
        return variables
    keep = [row for row, edge in enumerate(variables.regular) if edge not in drop]
    if not keep and variables.lengths_fixed:
        raise GeometryError("Cannot pin every edge of a fixed-length problem")
    return replace(
        variables,
        regular=tuple(variables.regular[row] for row in keep),
        pinned=tuple(sorted(set(variables.pinned) | drop)),
        windings=variables.windings[keep],
        log_lengths=variables.log_lengths[keep],
        theta=variables.theta[keep],
    )
