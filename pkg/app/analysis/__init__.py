"""
Analysis Module
File: app/analysis/__init__.py
Created: 2025-09-20
Purpose: Criticality residuals, lower bounds and explicit constructions
"""

__module_name__ = "analysis"
__description__ = "Euler-Lagrange residuals, energy bounds, splices and desingularization"

from .euler_lagrange import EdgeResidual, ELReport, JunctionResidual, el_residual
from .bounds import (
    TangentOscillation,
    cycle_turning_total,
    lemma2c_bound,
    lower_bound_cycle,
    tangent_oscillation,
    zero_energy_attainable,
)
from .constructions import (
    fan_energy,
    fan_network,
    make_collapsing_fan,
    make_train_tracks,
    straighten_endpoint,
    train_track_angle,
    train_tracks_network,
)
from .recovery import desingularize
