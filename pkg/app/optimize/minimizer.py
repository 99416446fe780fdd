"""
Network Minimizers
File: app/optimize/minimizer.py
Created: 2025-09-17
Purpose: Relaxed and fixed-length minimization with restarts and collapse detection
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import List, Optional, Sequence, Tuple

import numpy as np

from app.analysis import el_residual
from app.classify import VerdictKind, classify_network
from app.geometry import elastic_energy
from app.graph_core import AngledGraph
from app.shared_kernel import (
    ENERGY_TIE_RTOL,
    MAX_PIN_ROUNDS,
    POLISH_GRADIENT_FACTOR,
    GeometryError,
    ParameterRangeError,
    get_logger,
    require_positive,
)

from .config import MinimizeOptions
from .models import MinimizeResult, RestartRecord
from .objective import NetworkObjective
from .solver import HistoryEntry, SolveOutcome, solve_augmented_lagrangian
from .variables import OptimizationVariables, initial_variables, pin_edges, reconstruct, with_fixed_lengths

logger = get_logger(__name__)


@dataclass
class _Attempt:
    seed: int
    variables: OptimizationVariables
    outcome: SolveOutcome
    initial_length: float
    energy: float

    def feasible(self, tol_c: float) -> bool:
        return self.outcome.residual <= 10.0 * tol_c


def _solve(g: AngledGraph, start: OptimizationVariables, alpha: float, beta: float,
           options: MinimizeOptions) -> Tuple[OptimizationVariables, SolveOutcome]:
    objective = NetworkObjective(g, start, alpha, beta)
    outcome = solve_augmented_lagrangian(objective, start.to_vector(), options)
    return start.with_vector(outcome.x), outcome


def _measured_energy(g: AngledGraph, variables: OptimizationVariables, alpha: float, beta: float) -> float:
    return elastic_energy(reconstruct(variables, g), alpha, beta).total


def _roughness(g: AngledGraph, attempt: _Attempt, alpha: float, beta: float) -> float:
    """Interior residual of the relaxed criticality equation, or the solver gradient at beta = 0."""
    if beta <= 0.0:
        return attempt.outcome.gradient_norm
    try:
        return el_residual(reconstruct(attempt.variables, g), alpha, beta).max_interior
    except GeometryError:
        return float("inf")


def _select(g: AngledGraph, attempts: List[_Attempt], alpha: float, beta: float, tol_c: float) -> _Attempt:
    """Lowest energy among feasible attempts; ties in energy go to the smoother network."""
    pool = [a for a in attempts if a.feasible(tol_c)] or attempts
    lowest = min(a.energy for a in pool)
    band = ENERGY_TIE_RTOL * max(1.0, abs(lowest))
    tied = sorted((a for a in pool if a.energy <= lowest + band), key=lambda a: a.seed)
    if len(tied) == 1:
        return tied[0]
    scores = {a.seed: _roughness(g, a, alpha, beta) for a in tied}
    logger.info("restart_tie", seeds=[a.seed for a in tied], roughness=list(scores.values()))
    return min(tied, key=lambda a: (scores[a.seed], a.seed))


def _run_restarts(g: AngledGraph, alpha: float, beta: float, options: MinimizeOptions,
                  fixed_lengths: Optional[Sequence[float]],
                  initial: Optional[OptimizationVariables]) -> Tuple[_Attempt, List[RestartRecord]]:
    attempts: List[_Attempt] = []
    for index in range(options.restarts):
        seed = options.seed + index
        if index == 0 and initial is not None:
            start = initial if fixed_lengths is None else with_fixed_lengths(initial, fixed_lengths)
        else:
            noise = 0.0 if index == 0 else options.restart_noise
            start = initial_variables(g, options.samples, seed, noise, fixed_lengths)
        variables, outcome = _solve(g, start, alpha, beta, options)
        energy = _measured_energy(g, variables, alpha, beta)
        attempts.append(_Attempt(seed, variables, outcome, float(start.lengths.sum()), energy))
        logger.info("restart_finished", seed=seed, energy=energy, objective=outcome.energy,
                    residual=outcome.residual, converged=outcome.converged)
    records = [
        RestartRecord(a.seed, a.energy, a.outcome.energy, a.outcome.residual, a.outcome.converged)
        for a in attempts
    ]
    return _select(g, attempts, alpha, beta, options.tol_c), records


def _polish(g: AngledGraph, variables: OptimizationVariables, outcome: SolveOutcome, alpha: float,
            beta: float, options: MinimizeOptions) -> Tuple[OptimizationVariables, SolveOutcome]:
    """Resume a converged solve with a tighter gradient tolerance.

    The polished point is kept only if it stays feasible and does not raise
    the energy; it counts as converged under the caller's tolerances.
    """
    if not outcome.converged:
        return variables, outcome
    tight = replace(options, tol_g=options.tol_g * POLISH_GRADIENT_FACTOR)
    objective = NetworkObjective(g, variables, alpha, beta)
    polished = solve_augmented_lagrangian(objective, variables.to_vector(), tight,
                                          outcome.multipliers, outcome.penalty)
    band = ENERGY_TIE_RTOL * max(1.0, abs(outcome.energy))
    if polished.residual > max(options.tol_c, outcome.residual) or polished.energy > outcome.energy + band:
        logger.info("polish_rejected", energy=polished.energy, residual=polished.residual)
        return variables, outcome
    converged = polished.converged or (
        polished.residual <= options.tol_c
        and polished.gradient_norm <= options.tol_g * max(1.0, abs(polished.energy))
    )
    logger.info("polish_finished", energy=polished.energy, residual=polished.residual,
                gradient_norm=polished.gradient_norm, iterations=polished.iterations)
    return variables.with_vector(polished.x), replace(polished, converged=converged)


def _collapsed(variables: OptimizationVariables, reference: float, ratio: float) -> List[int]:
    threshold = ratio * reference
    return [edge for edge, length in zip(variables.regular, variables.lengths) if length < threshold]


def _finish(g: AngledGraph, variables: OptimizationVariables, outcome: SolveOutcome,
            alpha: float, beta: float, seed: int, iterations: int, history: List[HistoryEntry],
            records: List[RestartRecord]) -> MinimizeResult:
    network = reconstruct(variables, g)
    breakdown = elastic_energy(network, alpha, beta)
    lengths = np.zeros(g.num_edges)
    lengths[list(variables.regular)] = variables.lengths
    verdict = classify_network(network)
    degenerate = tuple(variables.pinned)
    suspicious = bool(degenerate) and verdict.kind is not VerdictKind.DEGENERATE
    if suspicious:
        logger.warning("collapsed_network_not_degenerate", edges=[g.edge_ids[i] for i in degenerate],
                       verdict=verdict.kind.value, reasons=verdict.reasons)
    return MinimizeResult(
        network=network,
        energy=breakdown.total,
        breakdown=breakdown,
        lengths=tuple(float(v) for v in lengths),
        closure_residual=outcome.residual,
        degenerate_edges=degenerate,
        iterations=iterations,
        converged=outcome.converged,
        variables=variables,
        seed=seed,
        verdict=verdict,
        suspicious=suspicious,
        history=history,
        restart_energies=records,
    )


def minimize_relaxed(g: AngledGraph, alpha: float = 1.0, beta: float = 1.0,
                     options: Optional[MinimizeOptions] = None,
                     initial: Optional[OptimizationVariables] = None) -> MinimizeResult:
    """Minimize the relaxed energy over networks on ``g``.

    Edges whose length drops below ``degenerate_ratio`` times the total
    length are pinned collapsed and the problem is solved again; the final
    network is classified to confirm the collapse is admissible.
    """
    alpha = require_positive(alpha, "alpha")
    beta = require_positive(beta, "beta")
    options = options or MinimizeOptions.from_settings()
    logger.info("minimize_relaxed", graph_edges=g.num_edges, alpha=alpha, beta=beta,
                samples=options.samples, restarts=options.restarts, seed=options.seed)

    best, records = _run_restarts(g, alpha, beta, options, None, initial)
    variables, outcome = best.variables, best.outcome
    iterations = outcome.iterations
    history = list(outcome.history)

    for _ in range(MAX_PIN_ROUNDS):
        reference = max(float(variables.lengths.sum()), best.initial_length)
        collapsed = _collapsed(variables, reference, options.degenerate_ratio)
        if not collapsed:
            break
        logger.info("pinning_collapsed_edges", edges=[g.edge_ids[i] for i in collapsed])
        variables, outcome = _solve(g, pin_edges(variables, collapsed), alpha, beta, options)
        iterations += outcome.iterations
        history.extend(outcome.history)

    variables, polished = _polish(g, variables, outcome, alpha, beta, options)
    if polished is not outcome:
        iterations += polished.iterations
        history.extend(polished.history)
        outcome = polished

    result = _finish(g, variables, outcome, alpha, beta, best.seed, iterations, history, records)
    logger.info("minimize_finished", energy=result.energy, residual=result.closure_residual,
                converged=result.converged, degenerate=[g.edge_ids[i] for i in result.degenerate_edges])
    return result


def minimize_fixed_length(g: AngledGraph, lengths: Sequence[float], alpha: float = 1.0,
                          options: Optional[MinimizeOptions] = None,
                          initial: Optional[OptimizationVariables] = None) -> MinimizeResult:
    """Minimize the bending energy with every edge length held at ``lengths``."""
    alpha = require_positive(alpha, "alpha")
    if len(lengths) != g.num_edges:
        raise ParameterRangeError(
            "One length per edge is required", {"edges": g.num_edges, "lengths": len(lengths)}
        )
    options = options or MinimizeOptions.from_settings()
    logger.info("minimize_fixed_length", graph_edges=g.num_edges, alpha=alpha,
                samples=options.samples, restarts=options.restarts, seed=options.seed)
    best, records = _run_restarts(g, alpha, 0.0, options, lengths, initial)
    variables, outcome = _polish(g, best.variables, best.outcome, alpha, 0.0, options)
    iterations = best.outcome.iterations
    history = list(best.outcome.history)
    if outcome is not best.outcome:
        iterations += outcome.iterations
        history.extend(outcome.history)
    result = _finish(g, variables, outcome, alpha, 0.0, best.seed, iterations, history, records)
    if not result.converged:
        logger.warning("fixed_length_not_converged", residual=result.closure_residual)
    return result
