"""Base classes for relation and property suites.

A suite takes a small set of size parameters, yields one ``CheckVerdict``
per instance it checks, and is run through :meth:`RelationSuite.execute`,
which adds timing, structured logging and error capture.
"""

import re
import time
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Optional, Tuple

from ..config.models import CheckStatus, CheckVerdict
from ..constants import DEFAULT_MAX_ELEMENTS
from ..core.error_handling import ErrorHandler
from ..core.logging_config import get_logger, log_operation_error, log_operation_start, log_operation_success
from ..exceptions import DtlBenchError

_TYPE_RE = re.compile(r"^\s*([A-Fa-f])_?(\d+)\s*$")


@dataclass
class SuiteContext:
    """Context for one suite run.

    Attributes:
        suite_name: Registered name of the suite
        parameters: Raw size parameters (``type``, ``n``) as given on the command line or in a plan
        max_elements: Enumeration cap passed down to monoid enumerations
    """
    suite_name: str
    parameters: Dict[str, Any]
    max_elements: int = DEFAULT_MAX_ELEMENTS


@dataclass
class SuiteResult:
    """Outcome of a suite run.

    Attributes:
        success: True when every verdict passed
        duration: Execution time in seconds
        verdicts: One verdict per checked instance
        error_message: Message of the exception that stopped the suite (if any)
        raw_exception: The exception itself (if any)
    """
    success: bool
    duration: float
    verdicts: List[CheckVerdict] = field(default_factory=list)
    error_message: Optional[str] = None
    raw_exception: Optional[Exception] = None


def parse_type(value: Any, families: str) -> tuple:
    """Split a label like ``A4`` into ``("A", 4)``, restricted to ``families``.

    Raises:
        ValueError: malformed label or a family outside ``families``
    """
    match = _TYPE_RE.match(str(value or ""))
    if not match:
        raise ValueError(f"invalid type label: {value!r}")
    family, rank = match.group(1).upper(), int(match.group(2))
    if family not in families:
        raise ValueError(f"type {family}{rank} is not supported here; expected one of {', '.join(families)}")
    return family, rank


def require_int(parameters: Dict[str, Any], key: str, low: int, high: int) -> int:
    value = parameters.get(key)
    if value is None:
        raise ValueError(f"missing parameter '{key}'")
    value = int(value)
    if not low <= value <= high:
        raise ValueError(f"{key} must lie in {low}..{high}, got {value}")
    return value


class RelationSuite(ABC):
    """Base class for suites of checks."""

    name: str = ""
    aliases: Tuple[str, ...] = ()
    description: str = ""

    def __init__(self) -> None:
        self.logger = get_logger(f"checks.{self.name}")
        self.error_handler = ErrorHandler()

    @abstractmethod
    def validate_parameters(self, parameters: Dict[str, Any]) -> Dict[str, Any]:
        """Validate and normalize the size parameters.

        Raises:
            ValueError: unsupported or missing parameters
        """

    @abstractmethod
    def run_checks(self, parameters: Dict[str, Any], context: SuiteContext) -> Iterable[CheckVerdict]:
        """Yield one verdict per checked instance."""

    def execute(self, context: SuiteContext) -> SuiteResult:
        """Validate, run and time the suite.

        Parameter errors propagate as ``ValueError``; domain errors raised while
        checking end the suite with a single error verdict.
        """
        parameters = self.validate_parameters(context.parameters)
        start_time = time.time()
        log_operation_start(self.logger, f"suite {self.name}", parameters=parameters)

        verdicts: List[CheckVerdict] = []
        try:
            with self.error_handler.handle_check_context(self.name, **parameters):
                for verdict in self.run_checks(parameters, context):
                    verdict.suite = self.name
                    verdicts.append(verdict)
        except DtlBenchError as e:
            duration = time.time() - start_time
            log_operation_error(self.logger, f"suite {self.name}", e, duration)
            verdicts.append(CheckVerdict(
                name=f"{self.name} suite",
                suite=self.name,
                status=CheckStatus.ERROR,
                detail=e.message,
            ))
            return SuiteResult(False, duration, verdicts, error_message=e.message, raw_exception=e)

        duration = time.time() - start_time
        success = all(v.passed for v in verdicts)
        log_operation_success(
            self.logger, f"suite {self.name}", duration,
            checks=len(verdicts), failed=sum(not v.passed for v in verdicts),
        )
        return SuiteResult(success, duration, verdicts)
