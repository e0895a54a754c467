"""Exception types shared across the package."""

from __future__ import annotations


class CourtsimError(Exception):
    """Base class for all errors raised by this package."""


class DataValidationError(CourtsimError):
    """Raised when input data violates the canonical schemas or domain rules.

    Carries the structured diagnostics that triggered the failure so callers
    (notably the ``validate`` CLI subcommand) can report every problem at once.
    """

    def __init__(self, message: str, diagnostics: list | None = None):
        super().__init__(message)
        self.diagnostics = list(diagnostics) if diagnostics else []


class DataError(CourtsimError):
    """Raised when otherwise well-formed data is unusable mid-computation,
    e.g. a non-empty history window whose possession total is zero."""


class ConfigError(CourtsimError):
    """Raised for invalid simulation configurations (bad prior, zero
    replications, closed-loop with a net-rating method, ...)."""


class AnalysisError(CourtsimError):
    """Raised for unsatisfiable analysis requests (empty game interval,
    mismatched season sets in a method comparison, ...)."""
