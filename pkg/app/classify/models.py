"""
Classification Data Models
File: app/classify/models.py
Created: 2025-09-11
Purpose: Tangent assignments, strata reports and network verdicts
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, FrozenSet, List, Optional, Tuple

import numpy as np

from app.graph_core import HalfEdgeId, Path


class StrataVerdict(str, Enum):
    STRAIGHT = "Straight"
    STRATIFIED_STRAIGHT = "StratifiedStraight"
    NOT_STRATIFIED = "NotStratified"


class VerdictKind(str, Enum):
    REGULAR = "Regular"
    DEGENERATE = "Degenerate"
    INADMISSIBLE = "Inadmissible"


class SquareAngleVerdict(str, Enum):
    STRAIGHT = "Straight"
    STRATIFIED_NOT_STRAIGHT = "StratifiedNotStraight"
    NOT_STRATIFIED = "NotStratified"


@dataclass(frozen=True)
class TangentAssignment:
    """Real or virtual tangent per half-edge and a rotation angle per junction."""

    tangent: Dict[HalfEdgeId, float]
    rotation: Dict[int, float]

    def merged(self, other: "TangentAssignment") -> "TangentAssignment":
        return TangentAssignment({**self.tangent, **other.tangent}, {**self.rotation, **other.rotation})


@dataclass(frozen=True)
class Propagation:
    """Outcome of propagate_directions: an assignment or the first failing cycle."""

    assignment: Optional[TangentAssignment]
    failed_cycle: Optional[Path] = None
    failed_angle: Optional[float] = None

    @property
    def ok(self) -> bool:
        return self.assignment is not None


@dataclass(frozen=True, eq=False)
class SupportRealization:
    """Straight realization of a subgraph with maximal support.

    ``positions`` maps vertices to points (each component rooted at the
    origin); ``lengths`` maps every edge of the subgraph to its length.
    """

    positions: Dict[int, np.ndarray]
    lengths: Dict[int, float]
    support: FrozenSet[int]


@dataclass(frozen=True, eq=False)
class StrataReport:
    verdict: StrataVerdict
    strata: List[FrozenSet[int]] = field(default_factory=list)
    realizations: List[SupportRealization] = field(default_factory=list)
    tangents: Optional[TangentAssignment] = None
    reasons: List[str] = field(default_factory=list)

    @property
    def step(self) -> int:
        """Number of strata below H0; 0 for straight subgraphs and when not stratified."""
        if self.verdict is StrataVerdict.NOT_STRATIFIED:
            return 0
        return max(len(self.strata) - 1, 0)


@dataclass(frozen=True, eq=False)
class Verdict:
    kind: VerdictKind
    reasons: List[str] = field(default_factory=list)
    tangents: Optional[TangentAssignment] = None
    strata: Optional[StrataReport] = None

    @property
    def step(self) -> int:
        """Strata below the whole graph: the singular chain of a degenerate network, else 0."""
        if self.kind is not VerdictKind.DEGENERATE or self.strata is None:
            return 0
        return len(self.strata.strata)


@dataclass(frozen=True)
class AngleConditionResult:
    passed: bool
    assignment: Optional[TangentAssignment]
    reasons: List[str] = field(default_factory=list)


@dataclass(frozen=True)
class SquareAngleReport:
    verdict: SquareAngleVerdict
    witness: Optional[Path] = None
    witness_edge: Optional[int] = None
    examined_edges: Tuple[int, ...] = ()
    x_set: FrozenSet[int] = frozenset()  # vertices strictly after pi(0, witness_edge)
    y_set: FrozenSet[int] = frozenset()
    reasons: List[str] = field(default_factory=list)
