"""
Discrete Planar Curves
File: app/geometry/curve.py
Created: 2025-09-08
Purpose: Sampled planar curves, constant-speed resampling, discrete curvature and turning
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np
from scipy.interpolate import CubicSpline
from scipy.optimize import brentq

from app.shared_kernel import (
    RESAMPLE_DENSITY,
    GeometryError,
    ParameterRangeError,
    signed_angle,
)

Headings = Tuple[float, float]


@dataclass(frozen=True, eq=False)
class DiscreteCurve:
    """Polyline through ``points`` (shape (M+1, 2)) or a single collapsed point.

    ``tangents`` optionally stores the exact travel headings at the first and
    last point; otherwise the first and last chords define them.
    """

    points: np.ndarray
    singular: bool = False
    tangents: Optional[Headings] = None

    def __post_init__(self) -> None:
        pts = np.asarray(self.points, dtype=float)
        if pts.ndim != 2 or pts.shape[1] != 2:
            raise GeometryError("Curve points must have shape (n, 2)", {"shape": pts.shape})
        if not np.all(np.isfinite(pts)):
            raise GeometryError("Curve points must be finite")
        if self.singular and pts.shape[0] != 1:
            raise GeometryError("A singular curve stores exactly one point")
        if not self.singular and pts.shape[0] < 2:
            raise GeometryError("A regular curve needs at least two points")
        pts.setflags(write=False)
        object.__setattr__(self, "points", pts)

    @property
    def num_chords(self) -> int:
        return self.points.shape[0] - 1

    @property
    def start(self) -> np.ndarray:
        return self.points[0]

    @property
    def end(self) -> np.ndarray:
        return self.points[-1]

    @property
    def chord_vectors(self) -> np.ndarray:
        return np.diff(self.points, axis=0)

    @property
    def chord_lengths(self) -> np.ndarray:
        return np.hypot(*self.chord_vectors.T)

    @property
    def chord_angles(self) -> np.ndarray:
        v = self.chord_vectors
        return np.unwrap(np.arctan2(v[:, 1], v[:, 0]))

    @property
    def length(self) -> float:
        return 0.0 if self.singular else float(self.chord_lengths.sum())

    @property
    def start_heading(self) -> float:
        self._require_regular()
        if self.tangents is not None:
            return self.tangents[0]
        return float(self.chord_angles[0])

    @property
    def end_heading(self) -> float:
        self._require_regular()
        if self.tangents is not None:
            return self.tangents[1]
        return float(self.chord_angles[-1])

    def outer_tangent(self, end: int) -> float:
        """Tangent pointing into the curve at endpoint ``end``."""
        return self.start_heading if end == 0 else self.end_heading + math.pi

    def endpoint(self, end: int) -> np.ndarray:
        return self.start if end == 0 else self.end

    def reversed(self) -> "DiscreteCurve":
        if self.singular:
            return self
        tangents = None
        if self.tangents is not None:
            tangents = (self.tangents[1] + math.pi, self.tangents[0] + math.pi)
        return DiscreteCurve(self.points[::-1].copy(), False, tangents)

    def transformed(self, scale: float = 1.0, rotation: float = 0.0,
                    shift: Sequence[float] = (0.0, 0.0)) -> "DiscreteCurve":
        c, s = math.cos(rotation), math.sin(rotation)
        matrix = np.array([[c, -s], [s, c]]) * scale
        pts = self.points @ matrix.T + np.asarray(shift, dtype=float)
        tangents = None
        if self.tangents is not None:
            tangents = (self.tangents[0] + rotation, self.tangents[1] + rotation)
        return DiscreteCurve(pts, self.singular, tangents)

    def _require_regular(self) -> None:
        if self.singular:
            raise GeometryError("Operation requires a regular curve")


def singular_curve(point: Sequence[float]) -> DiscreteCurve:
    return DiscreteCurve(np.asarray(point, dtype=float).reshape(1, 2), singular=True)


def segment_curve(p0: Sequence[float], p1: Sequence[float], samples: int) -> DiscreteCurve:
    a = np.asarray(p0, dtype=float)
    b = np.asarray(p1, dtype=float)
    if np.allclose(a, b, rtol=0.0, atol=0.0):
        raise GeometryError("Segment endpoints coincide")
    t = np.linspace(0.0, 1.0, samples + 1)[:, None]
    pts = a + t * (b - a)
    pts[-1] = b
    heading = math.atan2(b[1] - a[1], b[0] - a[0])
    return DiscreteCurve(pts, False, (heading, heading))


def arc_curve(center: Sequence[float], radius: float, start_angle: float, sweep: float,
              samples: int) -> DiscreteCurve:
    """Circular arc sampled at equal angular steps; positive sweep is counterclockwise."""
    if radius <= 0 or sweep == 0:
        raise ParameterRangeError("Arc needs a positive radius and nonzero sweep",
                                  {"radius": radius, "sweep": sweep})
    phi = start_angle + sweep * np.linspace(0.0, 1.0, samples + 1)
    pts = np.asarray(center, dtype=float) + radius * np.column_stack([np.cos(phi), np.sin(phi)])
    turn = math.copysign(0.5 * math.pi, sweep)
    return DiscreteCurve(pts, False, (start_angle + turn, start_angle + sweep + turn))


def concatenate_curves(pieces: Sequence[DiscreteCurve], tol: float = 1e-9) -> DiscreteCurve:
    """Join regular curves end to start; stored headings come from the outer pieces."""
    if not pieces:
        raise GeometryError("Nothing to concatenate")
    parts = [pieces[0].points]
    for prev, nxt in zip(pieces, pieces[1:]):
        if np.linalg.norm(prev.end - nxt.start) > tol:
            raise GeometryError("Pieces do not meet", {"gap": float(np.linalg.norm(prev.end - nxt.start))})
        parts.append(nxt.points[1:])
    return DiscreteCurve(np.vstack(parts), False, (pieces[0].start_heading, pieces[-1].end_heading))


def _march(xs: Sequence[float], ys: Sequence[float], arclen: Sequence[float], h: float, samples: int):
    """Walk equal chords of length h along the dense polyline.

    Returns the points found and a signed mismatch that is zero exactly when
    the last chord lands on the end point.
    """
    cx, cy = xs[0], ys[0]
    points = [(cx, cy)]
    position = 0.0
    k = 1
    n = len(xs)
    for _ in range(samples):
        while k < n and math.hypot(xs[k] - cx, ys[k] - cy) < h:
            k += 1
        if k >= n:
            missing = samples - (len(points) - 1)
            return points, missing * h - math.hypot(xs[-1] - cx, ys[-1] - cy)
        ax, ay = xs[k - 1], ys[k - 1]
        dx, dy = xs[k] - ax, ys[k] - ay
        wx, wy = ax - cx, ay - cy
        qa = dx * dx + dy * dy
        qb = wx * dx + wy * dy
        qc = wx * wx + wy * wy - h * h
        u = (-qb + math.sqrt(max(qb * qb - qa * qc, 0.0))) / qa
        u = min(max(u, 0.0), 1.0)
        cx, cy = ax + u * dx, ay + u * dy
        position = arclen[k - 1] + u * (arclen[k] - arclen[k - 1])
        points.append((cx, cy))
    return points, -(arclen[-1] - position)


def resample_constant_speed(c: DiscreteCurve, samples: int) -> DiscreteCurve:
    """Resample a regular curve with ``samples`` equal chords.

    The input polyline is interpolated by a not-a-knot cubic spline in
    chord-length parameter; the chord length is found by bisection-type root
    finding so that the last chord ends on the original end point.
    """
    if c.singular:
        raise GeometryError("Cannot resample a singular curve")
    if samples < 1:
        raise ParameterRangeError("samples must be positive", {"samples": samples})
    chords = c.chord_lengths
    total = float(chords.sum())
    if total <= 0.0 or np.any(chords <= 1e-14 * total):
        raise GeometryError("Curve has a repeated point", {"min_chord": float(chords.min())})

    s = np.concatenate([[0.0], np.cumsum(chords)])
    if c.points.shape[0] >= 3:
        spline = CubicSpline(s, c.points, bc_type="not-a-knot", axis=0)
    else:
        spline = lambda x: c.points[0] + np.outer(x / total, c.points[-1] - c.points[0])  # noqa: E731
    count = RESAMPLE_DENSITY * max(samples, c.points.shape[0])
    dense = spline(np.linspace(0.0, total, count + 1))
    dense[0], dense[-1] = c.points[0], c.points[-1]
    arclen_arr = np.concatenate([[0.0], np.cumsum(np.hypot(*np.diff(dense, axis=0).T))])
    xs, ys, arclen = dense[:, 0].tolist(), dense[:, 1].tolist(), arclen_arr.tolist()
    span = arclen[-1]

    def mismatch(h: float) -> float:
        return _march(xs, ys, arclen, h, samples)[1]

    lo, hi = span / (4 * samples), span / samples
    if mismatch(hi) < 0.0:
        hi *= 1.0 + 1e-9
    h = brentq(mismatch, lo, hi, xtol=1e-15 * span, maxiter=500)
    points, _ = _march(xs, ys, arclen, h, samples)
    if len(points) < samples + 1:
        points.append((xs[-1], ys[-1]))
    pts = np.array(points[: samples + 1])
    pts[-1] = c.points[-1]
    return DiscreteCurve(pts, False, c.tangents)


def turning_angles(c: DiscreteCurve) -> np.ndarray:
    """Signed turning angle at each interior node; empty for a single chord."""
    if c.singular:
        raise GeometryError("Turning angles need a regular curve")
    v = c.chord_vectors
    cross = v[:-1, 0] * v[1:, 1] - v[:-1, 1] * v[1:, 0]
    dot = np.einsum("ij,ij->i", v[:-1], v[1:])
    return np.arctan2(cross, dot)


def end_half_turns(c: DiscreteCurve) -> Tuple[float, float]:
    """Turning between stored end headings and the first/last chord; zero without stored headings."""
    if c.tangents is None:
        return 0.0, 0.0
    angles = c.chord_angles
    return signed_angle(angles[0] - c.tangents[0]), signed_angle(c.tangents[1] - angles[-1])


def curvature(c: DiscreteCurve) -> np.ndarray:
    """Signed curvature at all M+1 nodes: turning angle over the mean adjacent chord.

    The end nodes copy their neighbours.
    """
    turns = turning_angles(c)
    if turns.size == 0:
        return np.zeros(c.points.shape[0])
    h = c.chord_lengths
    k = np.empty(c.points.shape[0])
    k[1:-1] = turns / (0.5 * (h[:-1] + h[1:]))
    k[0], k[-1] = k[1], k[-2]
    return k


def bending_energy(c: DiscreteCurve) -> float:
    """Midpoint rule for the integral of k^2 over the chords."""
    if c.singular:
        return 0.0
    k = curvature(c)
    mid = 0.5 * (k[:-1] + k[1:])
    return float(np.sum(c.chord_lengths * mid * mid))


def curve_energy(c: DiscreteCurve, alpha: float = 1.0, beta: float = 1.0) -> float:
    if c.singular:
        return 0.0
    return alpha * bending_energy(c) + beta * c.length


def total_curvature(c: DiscreteCurve) -> float:
    """Sum of absolute turning angles, including the end half-turns when headings are stored."""
    if c.singular:
        raise GeometryError("Total curvature of a singular curve is undefined")
    first, last = end_half_turns(c)
    return float(np.abs(turning_angles(c)).sum() + abs(first) + abs(last))


def straight_prefix_length(c: DiscreteCurve, tol: float = 1e-9) -> float:
    """Length of the initial run whose chords follow the start heading."""
    heading = c.start_heading
    run = 0.0
    for angle, length in zip(c.chord_angles, c.chord_lengths):
        if abs(signed_angle(angle - heading)) > tol:
            break
        run += float(length)
    return run
