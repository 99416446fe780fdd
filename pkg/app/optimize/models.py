"""
Optimizer Result Models
File: app/optimize/models.py
Created: 2025-09-16
Purpose: Minimization results and restart records
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple, Union

import pandas as pd

from app.classify import Verdict
from app.geometry import EnergyBreakdown, Network

from .solver import HistoryEntry
from .variables import OptimizationVariables


@dataclass(frozen=True)
class RestartRecord:
    seed: int
    energy: float  # measured on the reconstructed network
    objective: float  # discrete objective reported by the solver
    residual: float
    converged: bool


@dataclass(frozen=True, eq=False)
class MinimizeResult:
    network: Network
    energy: float
    breakdown: EnergyBreakdown
    lengths: Tuple[float, ...]  # indexed by edge; 0 for collapsed edges
    closure_residual: float
    degenerate_edges: Tuple[int, ...]
    iterations: int
    converged: bool
    variables: OptimizationVariables
    seed: int
    verdict: Optional[Verdict] = None
    suspicious: bool = False
    history: List[HistoryEntry] = field(default_factory=list)
    restart_energies: List[RestartRecord] = field(default_factory=list)

    def lengths_by_id(self) -> Dict[str, float]:
        ids = self.network.graph.edge_ids
        return {ids[i]: value for i, value in enumerate(self.lengths)}

    def history_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            [{"iteration": h.iteration, "outer": h.outer, "objective": h.objective, "residual": h.residual}
             for h in self.history],
            columns=["iteration", "outer", "objective", "residual"],
        )

    def write_convergence_csv(self, path: Union[str, Path]) -> Path:
        target = Path(path)
        target.parent.mkdir(parents=True, exist_ok=True)
        self.history_frame().to_csv(target, index=False)
        return target

    def summary(self) -> Dict[str, Any]:
        ids = self.network.graph.edge_ids
        return {
            "energy": self.energy,
            "bending": self.breakdown.bending,
            "length": self.breakdown.length,
            "closure_residual": self.closure_residual,
            "converged": self.converged,
            "iterations": self.iterations,
            "seed": self.seed,
            "degenerate_edges": [ids[i] for i in self.degenerate_edges],
            "verdict": self.verdict.kind.value if self.verdict is not None else None,
            "suspicious": self.suspicious,
        }
