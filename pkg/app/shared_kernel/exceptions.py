"""
Shared Exception Classes
File: app/shared_kernel/exceptions.py
Created: 2025-09-02
Purpose: Custom exception classes for consistent error handling across modules
"""

from typing import Any, Dict, Optional


class ElastiNetException(Exception):
    """Base exception for all ElastiNet-specific errors."""

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        self.details = details or {}


class GraphValidationError(ElastiNetException):
    """Raised when an angled graph or a path on it is malformed."""
    pass


class DocumentFormatError(ElastiNetException):
    """Raised when a graph or network document cannot be parsed."""
    pass


class GeometryError(ElastiNetException):
    """Raised when a curve cannot support the requested operation."""
    pass


class IncidenceError(GeometryError):
    """Raised when curve endpoints do not meet at their junction."""
    pass


class PreconditionError(ElastiNetException):
    """Raised when an operation's documented precondition does not hold."""
    pass


class ParameterRangeError(ElastiNetException):
    """Raised when a numeric parameter is outside its admissible range."""
    pass


class ConstructionError(ElastiNetException):
    """Raised when an explicit construction cannot be carried out."""
    pass


class ConfigurationError(ElastiNetException):
    """Raised when the solver configuration file is invalid."""
    pass


__all__ = [
    "ElastiNetException",
    "GraphValidationError",
    "DocumentFormatError",
    "GeometryError",
    "IncidenceError",
    "PreconditionError",
    "ParameterRangeError",
    "ConstructionError",
    "ConfigurationError",
]
