"""
Augmented Lagrangian Solver
File: app/optimize/solver.py
Created: 2025-09-16
Purpose: Method of multipliers around scipy's L-BFGS-B for the closure-constrained energy
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np
from scipy.optimize import OptimizeResult, minimize

from app.shared_kernel import LBFGS_MEMORY, MAX_OUTER_ITERATIONS, PENALTY_PROGRESS_RATIO, get_logger

from .config import MinimizeOptions
from .objective import NetworkObjective

logger = get_logger(__name__)


@dataclass(frozen=True)
class HistoryEntry:
    """One accepted inner step: its outer round, running iteration count and values."""

    outer: int
    iteration: int
    objective: float
    residual: float


@dataclass
class SolveOutcome:
    x: np.ndarray
    multipliers: np.ndarray
    energy: float
    residual: float
    gradient_norm: float
    iterations: int
    converged: bool
    penalty: float = 0.0
    history: List[HistoryEntry] = field(default_factory=list)


def solve_augmented_lagrangian(objective: NetworkObjective, x0: np.ndarray,
                               options: MinimizeOptions,
                               multipliers0: Optional[np.ndarray] = None,
                               penalty0: Optional[float] = None) -> SolveOutcome:
    """Minimize the energy subject to closure.

    Each outer round minimizes the augmented Lagrangian with L-BFGS-B, then
    updates the multipliers and grows the penalty when the residual did not
    shrink enough. ``multipliers0`` and ``penalty0`` resume an earlier solve.
    """
    x = np.asarray(x0, dtype=float).copy()
    if multipliers0 is None:
        multipliers = np.zeros(objective.num_constraints)
    else:
        multipliers = np.asarray(multipliers0, dtype=float).copy()
    penalty = options.penalty_initial if penalty0 is None else float(penalty0)
    history: List[HistoryEntry] = []
    iterations = 0
    previous_residual = objective.residual(x)
    gradient_norm = float("inf")
    converged = False

    for outer in range(MAX_OUTER_ITERATIONS):
        budget = options.max_iter - iterations
        if budget <= 0:
            break

        def record(intermediate_result: OptimizeResult) -> None:
            step = len(history) + 1
            history.append(HistoryEntry(
                outer, step, float(intermediate_result.fun), objective.residual(intermediate_result.x)
            ))

        result = minimize(
            objective.augmented,
            x,
            args=(multipliers, penalty),
            jac=True,
            method="L-BFGS-B",
            callback=record,
            options={
                "maxiter": budget,
                "maxcor": LBFGS_MEMORY,
                "ftol": 1e-15,
                "gtol": 0.1 * options.tol_g,
                "maxls": 40,
            },
        )
        x = result.x
        iterations += max(int(result.nit), 1)
        c = objective.constraints(x)
        residual = objective.residual(x)
        energy, _ = objective.energy(x)
        gradient_norm = float(np.max(np.abs(result.jac))) if result.jac.size else 0.0
        logger.debug(
            "al_outer_iteration",
            outer=outer,
            penalty=penalty,
            energy=energy,
            residual=residual,
            gradient_norm=gradient_norm,
            inner=result.nit,
            message=str(result.message),
        )

        multipliers = multipliers + penalty * c
        if residual <= options.tol_c and gradient_norm <= options.tol_g * max(1.0, abs(energy)):
            converged = True
            break
        if residual > PENALTY_PROGRESS_RATIO * previous_residual:
            penalty = min(penalty * options.penalty_growth, options.penalty_max)
        previous_residual = residual

    energy, _ = objective.energy(x)
    residual = objective.residual(x)
    if not converged:
        logger.warning("solve_not_converged", residual=residual, gradient_norm=gradient_norm,
                       iterations=iterations)
    return SolveOutcome(x, multipliers, energy, residual, gradient_norm, iterations, converged, penalty, history)
