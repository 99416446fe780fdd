"""
Optimize Module
File: app/optimize/__init__.py
Created: 2025-09-15
Purpose: Numerical minimization of the relaxed and fixed-length elastic energies
"""

__module_name__ = "optimize"
__description__ = "Augmented Lagrangian minimization of network energies in tangent-angle form"

from .config import MinimizeOptions
from .variables import (
    OptimizationVariables,
    extract,
    initial_variables,
    node_angles,
    pin_edges,
    reconstruct,
    with_fixed_lengths,
)
from .objective import NetworkObjective
from .solver import HistoryEntry, SolveOutcome, solve_augmented_lagrangian
from .models import MinimizeResult, RestartRecord
from .minimizer import minimize_fixed_length, minimize_relaxed
