"""
Geometry Module
File: app/geometry/__init__.py
Created: 2025-09-08
Purpose: Discrete curves, networks and elastic energy functionals
"""

__module_name__ = "geometry"
__description__ = "Discrete planar curves, networks, curvature and energies"

from .curve import (
    DiscreteCurve,
    arc_curve,
    bending_energy,
    concatenate_curves,
    curvature,
    curve_energy,
    resample_constant_speed,
    segment_curve,
    singular_curve,
    straight_prefix_length,
    total_curvature,
    turning_angles,
)
from .network import Network, rescale
from .energy import EdgeEnergy, EnergyBreakdown, elastic_energy, relaxed_energy
