"""
Shared Validation Utilities
File: app/shared_kernel/validators.py
Created: 2025-09-02
Purpose: Angle parsing, angle arithmetic modulo 2*pi and numeric input checks
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Union

from .constants import EPS_ANG, TWO_PI
from .exceptions import GraphValidationError, ParameterRangeError

AngleLike = Union[int, float, str]

# "k*pi/n", "pi/2", "-3*pi/4", "2pi", "pi"
_PI_FRACTION = re.compile(
    r"^\s*(?P<num>[+-]?\s*\d*)\s*\*?\s*pi\s*(?:/\s*(?P<den>\d+))?\s*$",
    re.IGNORECASE,
)


def parse_angle(value: AngleLike) -> float:
    """Parse an angle given in radians or as a rational multiple of pi.

    Strings of the form ``"k*pi/n"`` are read exactly as the fraction k/n and
    converted once, so equal fractions give bit-identical floats.
    """
    if isinstance(value, bool):
        raise GraphValidationError("Angle must be numeric", {"value": value})
    if isinstance(value, (int, float)):
        return require_finite(float(value), "angle")
    if not isinstance(value, str):
        raise GraphValidationError("Angle must be a number or string", {"value": repr(value)})

    match = _PI_FRACTION.match(value)
    if match:
        raw = match.group("num").replace(" ", "")
        if raw in ("", "+"):
            num = 1
        elif raw == "-":
            num = -1
        else:
            num = int(raw)
        den = int(match.group("den") or 1)
        if den == 0:
            raise GraphValidationError("Zero denominator in angle", {"value": value})
        return float(Fraction(num, den)) * math.pi

    try:
        return require_finite(float(value), "angle")
    except ValueError as exc:
        raise GraphValidationError(f"Cannot parse angle '{value}'", {"value": value}) from exc


def require_finite(value: float, name: str) -> float:
    if not math.isfinite(value):
        raise GraphValidationError(f"Non-finite {name}", {name: value})
    return value


def require_positive(value: float, name: str) -> float:
    if not (math.isfinite(value) and value > 0.0):
        raise ParameterRangeError(f"{name} must be positive, got {value}", {name: value})
    return value


def wrap_angle(angle: float) -> float:
    """Normalize to [0, 2*pi)."""
    wrapped = math.fmod(angle, TWO_PI)
    if wrapped < 0.0:
        wrapped += TWO_PI
    if wrapped >= TWO_PI:
        wrapped = 0.0
    return wrapped


def signed_angle(angle: float) -> float:
    """Normalize to (-pi, pi]."""
    wrapped = wrap_angle(angle)
    return wrapped - TWO_PI if wrapped > math.pi else wrapped


def angle_distance(a: float, b: float) -> float:
    """Distance between two angles on the circle, in [0, pi]."""
    return abs(signed_angle(a - b))


def angles_close(a: float, b: float, tol: float = EPS_ANG) -> bool:
    return angle_distance(a, b) <= tol


def ccw_angle(a: float, b: float) -> float:
    """Counterclockwise angle from direction a to direction b, in [0, 2*pi)."""
    value = wrap_angle(b - a)
    return 0.0 if TWO_PI - value <= EPS_ANG else value


def format_angle(angle: float, max_den: int = 12) -> str:
    """Render an angle as ``k*pi/n`` when it is a small rational multiple of pi."""
    ratio = Fraction(angle / math.pi).limit_denominator(max_den)
    if abs(float(ratio) * math.pi - angle) > EPS_ANG:
        return repr(angle)
    if ratio == 0:
        return "0"
    num = "" if ratio.numerator == 1 else ("-" if ratio.numerator == -1 else f"{ratio.numerator}*")
    den = "" if ratio.denominator == 1 else f"/{ratio.denominator}"
    return f"{num}pi{den}"


__all__ = [
    "AngleLike",
    "parse_angle",
    "require_finite",
    "require_positive",
    "wrap_angle",
    "signed_angle",
    "angle_distance",
    "angles_close",
    "ccw_angle",
    "format_angle",
]
