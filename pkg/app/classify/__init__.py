"""
Classification Module
File: app/classify/__init__.py
Created: 2025-09-11
Purpose: Angle condition, straight and stratified-straight subgraphs, network verdicts
"""

__module_name__ = "classify"
__description__ = "Angle condition, stratification and regular/degenerate/inadmissible verdicts"

from .models import (
    AngleConditionResult,
    Propagation,
    SquareAngleReport,
    SquareAngleVerdict,
    StrataReport,
    StrataVerdict,
    SupportRealization,
    TangentAssignment,
    Verdict,
    VerdictKind,
)
from .propagation import propagate_directions
from .strata import max_support_realization, stratify
from .verdict import angle_condition, check_angle_condition, classify_network
from .square_angle import (
    canonical_quadrants,
    find_forbidden_cycle,
    order_sets,
    precedes,
    square_angle_straightness,
)
