"""
Discrete Relaxed Energy and Closure Constraints
File: app/optimize/objective.py
Created: 2025-09-16
Purpose: Energy, junction closure constraints and their analytic derivatives on the flat variable vector
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from app.graph_core import AngledGraph

from .variables import EdgeFrame, OptimizationVariables, node_angles


@dataclass(frozen=True)
class _Unpacked:
    variables: OptimizationVariables
    theta: np.ndarray  # (R, M+1)
    lengths: np.ndarray  # (R,)


class NetworkObjective:
    """Smooth problem data for one solve.

    The energy is ``sum_i alpha*M*sum_j (theta_{j+1}-theta_j)^2 / l_i + beta*l_i``.
    Constraints stack, per regular edge, ``x_p1 - x_p0 - l/M * sum_j e(psi_j)``;
    per pinned edge its endpoint gap and the mismatch of its two virtual
    tangents.
    """

    def __init__(self, g: AngledGraph, template: OptimizationVariables,
                 alpha: float = 1.0, beta: float = 1.0) -> None:
        self.graph = g
        self.template = template
        self.alpha = float(alpha)
        self.beta = float(beta)
        self.frame = EdgeFrame.of(g, template.regular)
        self.pinned_frame = EdgeFrame.of(g, template.pinned)
        self.samples = template.samples
        self.num_regular = len(template.regular)
        self.num_pinned = len(template.pinned)
        self.num_vertices = g.num_vertices

    @property
    def num_constraints(self) -> int:
        return 2 * self.num_regular + 4 * self.num_pinned

    def _unpack(self, x: np.ndarray) -> _Unpacked:
        variables = self.template.with_vector(x)
        return _Unpacked(variables, node_angles(variables, self.frame), variables.lengths)

    def _scatter(self, d_lengths: np.ndarray, d_theta: np.ndarray, d_positions: np.ndarray,
                 d_rotations: np.ndarray) -> np.ndarray:
        """Fold node-angle derivatives onto the free variables and flatten."""
        d_rotations = d_rotations.copy()
        np.add.at(d_rotations, self.frame.p0, d_theta[:, 0])
        np.add.at(d_rotations, self.frame.p1, d_theta[:, -1])
        parts = [] if self.template.lengths_fixed else [d_lengths]
        parts += [d_theta[:, 1:-1].ravel(), d_positions.ravel(), d_rotations]
        return np.concatenate(parts)

    # ------------------------------------------------------------------
    # Energy
    # ------------------------------------------------------------------

    def edge_terms(self, x: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        """Per-edge bending and length parts of the discrete energy."""
        u = self._unpack(x)
        steps = np.diff(u.theta, axis=1)
        bending = self.samples * np.sum(steps * steps, axis=1) / u.lengths
        return bending, u.lengths

    def energy(self, x: np.ndarray) -> Tuple[float, np.ndarray]:
        u = self._unpack(x)
        steps = np.diff(u.theta, axis=1)
        bending = self.samples * np.sum(steps * steps, axis=1) / u.lengths
        value = float(self.alpha * bending.sum() + self.beta * u.lengths.sum())

        scale = (2.0 * self.alpha * self.samples / u.lengths)[:, None]
        zeros = np.zeros((self.num_regular, 1))
        d_theta = scale * (np.hstack([zeros, steps]) - np.hstack([steps, zeros]))
        d_lengths = -self.alpha * bending + self.beta * u.lengths
        grad = self._scatter(
            d_lengths, d_theta, np.zeros((self.num_vertices, 2)), np.zeros(self.num_vertices)
        )
        return value, grad

    # ------------------------------------------------------------------
    # Constraints
    # ------------------------------------------------------------------

    def _chord_sums(self, u: _Unpacked) -> Tuple[np.ndarray, np.ndarray]:
        psi = 0.5 * (u.theta[:, :-1] + u.theta[:, 1:])
        step = u.lengths / self.samples
        sums = step[:, None] * np.column_stack([np.cos(psi).sum(axis=1), np.sin(psi).sum(axis=1)])
        return psi, sums

    def _pinned_angles(self, u: _Unpacked) -> Tuple[np.ndarray, np.ndarray]:
        phi = u.variables.rotations
        first = phi[self.pinned_frame.p0] + self.pinned_frame.d0
        last = phi[self.pinned_frame.p1] + self.pinned_frame.d1 - math.pi
        return first, last

    def constraints(self, x: np.ndarray) -> np.ndarray:
        u = self._unpack(x)
        pos = u.variables.positions
        _, sums = self._chord_sums(u)
        closure = pos[self.frame.p1] - pos[self.frame.p0] - sums
        gap = pos[self.pinned_frame.p1] - pos[self.pinned_frame.p0]
        a, b = self._pinned_angles(u)
        tangent = np.column_stack([np.cos(a) - np.cos(b), np.sin(a) - np.sin(b)])
        return np.concatenate([closure.ravel(), gap.ravel(), tangent.ravel()])

    def constraint_vjp(self, x: np.ndarray, w: np.ndarray) -> np.ndarray:
        """Gradient of ``w . c(x)``."""
        u = self._unpack(x)
        r, p = self.num_regular, self.num_pinned
        w = np.asarray(w, dtype=float)
        w_closure = w[:2 * r].reshape(r, 2)
        w_gap = w[2 * r:2 * r + 2 * p].reshape(p, 2)
        w_tangent = w[2 * r + 2 * p:].reshape(p, 2)

        d_positions = np.zeros((self.num_vertices, 2))
        np.add.at(d_positions, self.frame.p1, w_closure)
        np.add.at(d_positions, self.frame.p0, -w_closure)
        np.add.at(d_positions, self.pinned_frame.p1, w_gap)
        np.add.at(d_positions, self.pinned_frame.p0, -w_gap)

        psi, sums = self._chord_sums(u)
        d_lengths = -np.sum(w_closure * sums, axis=1)
        step = (u.lengths / self.samples)[:, None]
        d_psi = -step * (-w_closure[:, :1] * np.sin(psi) + w_closure[:, 1:] * np.cos(psi))
        zeros = np.zeros((r, 1))
        d_theta = 0.5 * (np.hstack([zeros, d_psi]) + np.hstack([d_psi, zeros]))

        d_rotations = np.zeros(self.num_vertices)
        a, b = self._pinned_angles(u)
        np.add.at(d_rotations, self.pinned_frame.p0,
                  -w_tangent[:, 0] * np.sin(a) + w_tangent[:, 1] * np.cos(a))
        np.add.at(d_rotations, self.pinned_frame.p1,
                  w_tangent[:, 0] * np.sin(b) - w_tangent[:, 1] * np.cos(b))
        return self._scatter(d_lengths, d_theta, d_positions, d_rotations)

    def constraint_jacobian(self, x: np.ndarray) -> np.ndarray:
        """Dense Jacobian, one vector-Jacobian product per constraint row."""
        eye = np.eye(self.num_constraints)
        return np.array([self.constraint_vjp(x, row) for row in eye]).reshape(self.num_constraints, -1)

    def edge_residuals(self, x: np.ndarray) -> np.ndarray:
        """Euclidean norm of each edge's constraint block, regular edges first."""
        c = self.constraints(x)
        r, p = self.num_regular, self.num_pinned
        blocks = [np.hypot(*c[:2 * r].reshape(r, 2).T)]
        if p:
            gaps = np.hypot(*c[2 * r:2 * r + 2 * p].reshape(p, 2).T)
            tangents = np.hypot(*c[2 * r + 2 * p:].reshape(p, 2).T)
            blocks.append(np.maximum(gaps, tangents))
        return np.concatenate(blocks)

    def residual(self, x: np.ndarray) -> float:
        res = self.edge_residuals(x)
        return float(res.max()) if res.size else 0.0

    # ------------------------------------------------------------------
    # Augmented Lagrangian
    # ------------------------------------------------------------------

    def augmented(self, x: np.ndarray, multipliers: np.ndarray, penalty: float) -> Tuple[float, np.ndarray]:
        value, grad = self.energy(x)
        c = self.constraints(x)
        value += float(multipliers @ c + 0.5 * penalty * (c @ c))
        grad = grad + self.constraint_vjp(x, multipliers + penalty * c)
        return value, grad
