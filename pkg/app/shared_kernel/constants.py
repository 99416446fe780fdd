"""
Shared Constants and Configuration
File: app/shared_kernel/constants.py
Created: 2025-09-02
Purpose: Global constants and numeric defaults used across modules
"""

from __future__ import annotations

import math

# Application Configuration
APP_NAME = "ElastiNet"
APP_VERSION = "0.1.0"
CONFIG_ENV_VAR = "ELASTINET_CONFIG"
ENV_PREFIX = "ELASTINET_"


# ============================================================================
# ANGLES AND INCIDENCE
# ============================================================================

TWO_PI = 2.0 * math.pi
HALF_PI = 0.5 * math.pi

EPS_ANG = 1e-9  # angle equality modulo 2*pi
INCIDENCE_TOL = 1e-9  # absolute distance between incident endpoints
AMBIENT_DIMENSION = 2


# ============================================================================
# LINEAR FEASIBILITY
# ============================================================================

PIVOT_TOL = 1e-9
SUPPORT_TOL = 1e-8  # edge length above which an edge counts as supported


# ============================================================================
# CURVES
# ============================================================================

MIN_REGULAR_SAMPLES = 8
RESAMPLE_DENSITY = 8  # spline densification factor in resample_constant_speed
CHORD_EQUALITY_RTOL = 1e-9  # chords this close count as constant speed


# ============================================================================
# OPTIMIZATION DEFAULTS
# ============================================================================

DEFAULT_SAMPLES = 64
DEFAULT_TOL_C = 1e-7
DEFAULT_TOL_G = 1e-6
DEFAULT_MAX_ITER = 5000
DEFAULT_RESTARTS = 4
DEFAULT_SEED = 0

PENALTY_INITIAL = 10.0
PENALTY_GROWTH = 10.0
PENALTY_MAX = 1e8
PENALTY_PROGRESS_RATIO = 0.25  # grow the penalty unless the residual shrinks by this factor
MAX_OUTER_ITERATIONS = 40
LBFGS_MEMORY = 20

DEGENERATE_RATIO = 1e-3  # edge counts as collapsed below this fraction of total length
RESTART_NOISE = 0.1
MAX_PIN_ROUNDS = 4
ENERGY_TIE_RTOL = 1e-6  # restarts closer than this in energy count as tied
POLISH_GRADIENT_FACTOR = 1e-2  # gradient tolerance of the final solve, relative to tol_g


# ============================================================================
# CONSTRUCTIONS AND RENDERING
# ============================================================================

CONSTRUCTION_SAMPLES = 512
SPLICE_SAMPLES = 32
SEGMENT_SAMPLES = 8
STRAIGHTEN_MAX_HALVINGS = 40
SVG_MARGIN = 0.05
SVG_DEFAULT_SCALE = 200.0  # pixels per unit length
