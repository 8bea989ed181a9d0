"""
Error handling patterns for dtlbench.
"""
import traceback
from contextlib import contextmanager
from typing import Any, Dict, Iterator, Optional, Type

from ..exceptions import (
    AdmissibilityError,
    ConfigurationError,
    DtlBenchError,
    EnumerationLimitError,
    ReductionError,
    VerificationError,
)
from .logging_config import get_logger


class ErrorContext:
    """Context information for error handling."""

    def __init__(self, check_name: Optional[str] = None, parameters: Optional[Dict[str, Any]] = None):
        self.check_name = check_name
        self.parameters = parameters or {}


class ErrorHandler:
    """Central error wrapping and logging."""

    def __init__(self) -> None:
        self.logger = get_logger("core.error_handler")

    def handle_plan_error(self, error: Exception, plan_path: str) -> ConfigurationError:
        """Handle and wrap run-plan errors."""
        self.logger.error(f"Run plan error in {plan_path}: {error}")

        if isinstance(error, ConfigurationError):
            return error

        return ConfigurationError(
            f"Failed to load run plan from {plan_path}: {error}", config_path=plan_path, cause=error
        )

    def handle_check_error(self, error: Exception, context: ErrorContext) -> DtlBenchError:
        """Handle and wrap errors raised while checking."""
        self.logger.error(
            f"Check {context.check_name} failed: {error}",
            extra={"error_type": type(error).__name__, "context": context.parameters},
        )

        if isinstance(error, DtlBenchError):
            return error

        return self.wrap_exception(error, DtlBenchError, f"Check {context.check_name} failed: {error}")

    @contextmanager
    def handle_check_context(self, check_name: str, **kwargs: Any) -> Iterator[None]:
        """Context manager for consistent check error handling.

        Args:
            check_name: Name of the suite or check being run
            **kwargs: Size parameters kept for the log record

        Yields:
            None

        Raises:
            DtlBenchError: If any exception occurs while checking

        Example:
            >>> with error_handler.handle_check_context("hat", n=4):
            ...     verdicts = list(suite.run_checks(...))
        """
        context = ErrorContext(check_name, kwargs)
        try:
            yield
        except Exception as e:
            raise self.handle_check_error(e, context) from e

    @contextmanager
    def handle_plan_context(self, plan_path: str) -> Iterator[None]:
        """Context manager for run-plan loading.

        Raises:
            ConfigurationError: If any exception occurs during loading
        """
        try:
            yield
        except Exception as e:
            raise self.handle_plan_error(e, plan_path) from e

    def wrap_exception(
        self,
        error: Exception,
        wrapper_class: Type[DtlBenchError] = DtlBenchError,
        message: Optional[str] = None,
    ) -> DtlBenchError:
        """Wrap any exception in a dtlbench exception.

        Args:
            error: Original exception to wrap
            wrapper_class: ``DtlBenchError`` or ``ConfigurationError``
            message: Optional custom error message

        Returns:
            Wrapped dtlbench exception, with the last traceback frames attached
        """
        if isinstance(error, DtlBenchError):
            return error

        wrapped = wrapper_class(message or f"{wrapper_class.__name__}: {error}", cause=error)

        if error.__traceback__:
            tb_lines = traceback.format_tb(error.__traceback__)
            wrapped.traceback = "".join(tb_lines[-3:])  # type: ignore[attr-defined]

        return wrapped

    def format_error_details(self, error: Exception) -> str:
        """Format detailed error message for display."""
        if isinstance(error, ConfigurationError):
            details = [
                f"Plan: {error.config_path}" if error.config_path else None,
                f"Cause: {error.cause}" if error.cause else None,
            ]
            return "\n".join(d for d in details if d)

        if isinstance(error, AdmissibilityError) and error.roots:
            return f"Roots: {[list(beta) for beta in error.roots]}"

        if isinstance(error, EnumerationLimitError):
            return f"Limit: {error.limit} elements (raise it with --max-elements)"

        if isinstance(error, VerificationError) and error.details:
            return "\n".join(f"{k}: {v}" for k, v in error.details.items() if k != "sizes")

        if isinstance(error, ReductionError):
            return f"Configuration: {error.dump}"

        return str(error)
