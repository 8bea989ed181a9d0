"""
Exception classes for dtlbench.
"""
from typing import Any, Dict, List, Optional


class DtlBenchError(Exception):
    """Base exception for all dtlbench errors."""

    def __init__(self, message: str, cause: Optional[Exception] = None):
        self.message = message
        self.cause = cause
        super().__init__(message)


class ConfigurationError(DtlBenchError):
    """Raised when a run plan cannot be loaded or validated."""

    def __init__(self, message: str, config_path: Optional[str] = None, cause: Optional[Exception] = None):
        self.config_path = config_path
        super().__init__(message, cause)


class ScalarOverflowError(DtlBenchError):
    """Raised when a delta exponent leaves the supported range."""


class DiagramError(DtlBenchError):
    """Raised for invalid connectors, generator indices or layer misuse."""


class ReductionError(DiagramError):
    """Raised when the decorated layer meets a configuration its rules cannot resolve."""

    def __init__(self, message: str, dump: Optional[Dict[str, Any]] = None):
        self.dump = dump or {}
        super().__init__(message)


class RootSystemError(DtlBenchError):
    """Raised for unsupported diagrams, non-roots and malformed root literals."""


class AdmissibilityError(DtlBenchError):
    """Raised when admissible-set machinery meets an inconsistent configuration."""

    def __init__(self, message: str, roots: Optional[List[Any]] = None):
        self.roots = roots or []
        super().__init__(message)


class EnumerationLimitError(DtlBenchError):
    """Raised when an enumeration exceeds its element cap."""

    def __init__(self, message: str, limit: int):
        self.limit = limit
        super().__init__(message)


class VerificationError(DtlBenchError):
    """Raised when two independent computations of the same quantity disagree."""

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        self.details = details or {}
        super().__init__(message)


class ValidationError(DtlBenchError):
    """Raised when a report payload fails schema validation."""

    def __init__(self, message: str, errors: Optional[list] = None):
        self.errors = errors or []
        super().__init__(message)
