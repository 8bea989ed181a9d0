"""
Centralized logging configuration for dtlbench.

Provides the standard/JSON formatters, the ``dtlbench.`` logger namespace and
helpers for structured operation records.
"""

import json
import logging
import logging.config
from typing import Any, Dict, Optional

_RESERVED_ATTRS = frozenset({
    "name", "msg", "args", "levelname", "levelno", "pathname", "filename",
    "module", "lineno", "funcName", "created", "msecs", "relativeCreated",
    "thread", "threadName", "processName", "process", "getMessage", "exc_info",
    "exc_text", "stack_info", "taskName", "message", "asctime",
})


class JSONFormatter(logging.Formatter):
    """JSON formatter for structured logging."""

    def format(self, record: logging.LogRecord) -> str:
        """Format log record as JSON."""
        log_entry: Dict[str, Any] = {
            "timestamp": self.formatTime(record),
            "level": record.levelname,
            "logger": record.name,
            "message": record.getMessage(),
            "module": record.module,
            "function": record.funcName,
            "line": record.lineno,
        }

        if record.exc_info:
            log_entry["exception"] = self.formatException(record.exc_info)

        # extra= fields
        for key, value in record.__dict__.items():
            if key not in _RESERVED_ATTRS:
                log_entry[key] = value

        return json.dumps(log_entry, default=str)


# third-party loggers held at WARNING whatever --log-level says
_QUIET_LIBRARIES = ("networkx", "numpy")

_STANDARD_FORMAT = "%(asctime)s [%(levelname)8s] %(name)s: %(message)s (%(filename)s:%(lineno)s)"


def setup_logging(
    log_level: str = "WARNING",
    json_format: bool = False,
    log_file: Optional[str] = None,
) -> None:
    """
    Configure the ``dtlbench`` logger tree.

    Args:
        log_level: DEBUG, INFO, WARNING, ERROR or CRITICAL
        json_format: one JSON object per record instead of the standard line
        log_file: also append records to this file
    """
    formatter_name = "json" if json_format else "standard"
    formatter: Dict[str, Any] = (
        {"()": f"{__name__}.JSONFormatter"} if json_format else {"format": _STANDARD_FORMAT}
    )

    # reports own stdout
    handlers: Dict[str, Dict[str, Any]] = {
        "console": {
            "class": "logging.StreamHandler",
            "stream": "ext://sys.stderr",
            "level": log_level,
            "formatter": formatter_name,
        }
    }
    if log_file:
        handlers["file"] = {
            "class": "logging.FileHandler",
            "filename": log_file,
            "mode": "a",
            "level": log_level,
            "formatter": formatter_name,
        }
    handler_names = list(handlers)

    loggers: Dict[str, Dict[str, Any]] = {
        "dtlbench": {"level": log_level, "handlers": handler_names, "propagate": False}
    }
    loggers.update(
        {lib: {"level": "WARNING", "handlers": handler_names, "propagate": False} for lib in _QUIET_LIBRARIES}
    )

    logging.config.dictConfig({
        "version": 1,
        "disable_existing_loggers": False,
        "formatters": {formatter_name: formatter},
        "handlers": handlers,
        "root": {"level": log_level, "handlers": handler_names},
        "loggers": loggers,
    })


def get_logger(name: str) -> logging.Logger:
    """
    Get a logger in the ``dtlbench`` namespace.

    Example:
        >>> logger = get_logger("algebra.monoid")
        >>> logger.name
        'dtlbench.algebra.monoid'
    """
    if not name.startswith("dtlbench."):
        name = f"dtlbench.{name}"
    return logging.getLogger(name)


def log_operation_start(logger: logging.Logger, operation: str, **kwargs: Any) -> None:
    """Log operation start with structured data."""
    logger.info(f"Starting {operation}", extra={"operation": operation, "context": kwargs})


def log_operation_success(logger: logging.Logger, operation: str, duration: float, **kwargs: Any) -> None:
    """Log operation success with structured data."""
    logger.info(
        f"{operation} completed in {duration:.3f}s",
        extra={"operation": operation, "duration": duration, "status": "success", "context": kwargs},
    )


def log_operation_error(
    logger: logging.Logger,
    operation: str,
    error: Exception,
    duration: Optional[float] = None,
    **kwargs: Any,
) -> None:
    """
    Log operation error with structured data.

    Args:
        logger: Logger instance
        operation: Operation name
        error: Exception that occurred
        duration: Operation duration in seconds (if available)
        **kwargs: Additional context data
    """
    extra_data: Dict[str, Any] = {
        "operation": operation,
        "error_type": type(error).__name__,
        "error_message": str(error),
        "status": "error",
        "context": kwargs,
    }
    if duration is not None:
        extra_data["duration"] = duration

    logger.error(f"{operation} failed: {error}", extra=extra_data, exc_info=True)
