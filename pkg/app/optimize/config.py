"""
Optimizer Configuration
File: app/optimize/config.py
Created: 2025-09-15
Purpose: Per-call options for the network minimizers
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Any, Optional

from app.shared_kernel import (
    DEFAULT_MAX_ITER,
    DEFAULT_RESTARTS,
    DEFAULT_SAMPLES,
    DEFAULT_SEED,
    DEFAULT_TOL_C,
    DEFAULT_TOL_G,
    DEGENERATE_RATIO,
    PENALTY_GROWTH,
    PENALTY_INITIAL,
    PENALTY_MAX,
    RESTART_NOISE,
    ParameterRangeError,
)
from app.shared_kernel.settings import ElastiNetSettings, get_settings


@dataclass(frozen=True)
class MinimizeOptions:
    """Configuration for one minimization run (all restarts)."""

    samples: int = DEFAULT_SAMPLES
    max_iter: int = DEFAULT_MAX_ITER
    tol_c: float = DEFAULT_TOL_C
    tol_g: float = DEFAULT_TOL_G
    seed: int = DEFAULT_SEED
    restarts: int = DEFAULT_RESTARTS
    penalty_initial: float = PENALTY_INITIAL
    penalty_growth: float = PENALTY_GROWTH
    penalty_max: float = PENALTY_MAX
    degenerate_ratio: float = DEGENERATE_RATIO
    restart_noise: float = RESTART_NOISE

    def __post_init__(self) -> None:
        if self.samples < 8:
            raise ParameterRangeError("samples must be at least 8", {"samples": self.samples})
        if self.restarts < 1 or self.max_iter < 1:
            raise ParameterRangeError("restarts and max_iter must be positive")
        if self.tol_c <= 0 or self.tol_g <= 0:
            raise ParameterRangeError("tolerances must be positive")

    @classmethod
    def from_settings(cls, settings: Optional[ElastiNetSettings] = None, **overrides: Any) -> "MinimizeOptions":
        solver = (settings or get_settings()).solver
        base = cls(
            samples=solver.samples,
            max_iter=solver.max_iter,
            tol_c=solver.tol_c,
            tol_g=solver.tol_g,
            seed=solver.seed,
            restarts=solver.restarts,
            penalty_initial=solver.penalty_initial,
            penalty_growth=solver.penalty_growth,
            penalty_max=solver.penalty_max,
            degenerate_ratio=solver.degenerate_ratio,
            restart_noise=solver.restart_noise,
        )
        return replace(base, **{k: v for k, v in overrides.items() if v is not None})
