"""
Bounded Two-Phase Simplex
File: app/classify/simplex.py
Created: 2025-09-12
Purpose: Dense tableau simplex for small box-bounded equality systems
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional

import numpy as np

from app.shared_kernel import PIVOT_TOL, ElastiNetException


class LinearProgramError(ElastiNetException):
    """Raised when a linear program is infeasible or unbounded."""
    pass


@dataclass(frozen=True)
class LPSolution:
    x: np.ndarray
    value: float
    pivots: int


class _Tableau:
    """Rows are constraints, the last row holds reduced costs of ``maximize``."""

    def __init__(self, table: np.ndarray, basis: List[int], tol: float):
        self.table = table
        self.basis = basis
        self.tol = tol
        self.pivots = 0

    def pivot(self, row: int, col: int) -> None:
        t = self.table
        t[row] /= t[row, col]
        for r in range(t.shape[0]):
            if r != row and t[r, col] != 0.0:
                t[r] -= t[r, col] * t[row]
        self.basis[row] = col
        self.pivots += 1

    def run(self, columns: int) -> None:
        """Bland's rule on the first ``columns`` columns until optimal."""
        t = self.table
        while True:
            costs = t[-1, :columns]
            entering = next((j for j in range(columns) if costs[j] < -self.tol), None)
            if entering is None:
                return
            best_row: Optional[int] = None
            best_ratio = np.inf
            for r in range(t.shape[0] - 1):
                a = t[r, entering]
                if a > self.tol:
                    ratio = t[r, -1] / a
                    if ratio < best_ratio - self.tol or (
                        abs(ratio - best_ratio) <= self.tol
                        and best_row is not None
                        and self.basis[r] < self.basis[best_row]
                    ):
                        best_ratio, best_row = ratio, r
            if best_row is None:
                raise LinearProgramError("Linear program is unbounded", {"column": entering})
            self.pivot(best_row, entering)

    def set_objective(self, cost: np.ndarray) -> None:
        """Install ``maximize cost @ x`` and price out the basic columns."""
        t = self.table
        t[-1, :] = 0.0
        t[-1, : cost.size] = -cost
        for r, b in enumerate(self.basis):
            if t[-1, b] != 0.0:
                t[-1] -= t[-1, b] * t[r]


def maximize(
    cost: np.ndarray,
    a_eq: np.ndarray,
    b_eq: np.ndarray,
    upper: np.ndarray,
    tol: float = PIVOT_TOL,
) -> LPSolution:
    """Maximize ``cost @ x`` subject to ``a_eq @ x = b_eq`` and ``0 <= x <= upper``.

    Upper bounds become slack rows; equality rows start on artificial
    variables that phase one drives to zero. Redundant equality rows are
    dropped when their artificial cannot leave the basis.
    """
    cost = np.asarray(cost, dtype=float)
    n = cost.size
    a_eq = np.asarray(a_eq, dtype=float).reshape(-1, n)
    b_eq = np.asarray(b_eq, dtype=float).reshape(-1)
    upper = np.asarray(upper, dtype=float).reshape(n)
    m = a_eq.shape[0]

    sign = np.where(b_eq < 0.0, -1.0, 1.0)
    a_eq = a_eq * sign[:, None]
    b_eq = b_eq * sign

    # columns: x (n) | slack (n) | artificial (m) | rhs
    width = 2 * n + m + 1
    table = np.zeros((m + n + 1, width))
    table[:m, :n] = a_eq
    table[:m, 2 * n: 2 * n + m] = np.eye(m)
    table[:m, -1] = b_eq
    table[m: m + n, :n] = np.eye(n)
    table[m: m + n, n: 2 * n] = np.eye(n)
    table[m: m + n, -1] = upper
    basis = [2 * n + r for r in range(m)] + [n + i for i in range(n)]
    tab = _Tableau(table, basis, tol)

    if m:
        phase_one = np.zeros(2 * n + m)
        phase_one[2 * n:] = -1.0
        tab.set_objective(phase_one)
        tab.run(2 * n + m)
        if tab.table[-1, -1] < -tol * max(1.0, float(np.abs(b_eq).sum())):
            raise LinearProgramError("Linear program is infeasible", {"phase_one": float(tab.table[-1, -1])})
        keep = []
        for r in range(m + n):
            if tab.basis[r] >= 2 * n:
                row = tab.table[r, : 2 * n]
                candidates = np.nonzero(np.abs(row) > tol)[0]
                if candidates.size == 0:
                    continue
                tab.pivot(r, int(candidates[0]))
            keep.append(r)
        tab.table = np.vstack([tab.table[keep], tab.table[-1:]])
        tab.basis = [tab.basis[r] for r in keep]
        tab.table = np.delete(tab.table, np.s_[2 * n: 2 * n + m], axis=1)

    phase_two = np.zeros(2 * n)
    phase_two[:n] = cost
    tab.set_objective(phase_two)
    tab.run(2 * n)

    x = np.zeros(2 * n)
    for r, b in enumerate(tab.basis):
        x[b] = tab.table[r, -1]
    solution = np.clip(x[:n], 0.0, upper)
    return LPSolution(solution, float(cost @ solution), tab.pivots)
