"""Unit tests for logging and error handling."""

import json
import logging

import pytest

from dtlbench.core.error_handling import ErrorContext, ErrorHandler
from dtlbench.core.logging_config import JSONFormatter, get_logger, log_operation_error, setup_logging
from dtlbench.exceptions import (
    AdmissibilityError,
    ConfigurationError,
    DtlBenchError,
    EnumerationLimitError,
    ReductionError,
    VerificationError,
)


class TestLogging:

    def test_logger_namespace(self):
        assert get_logger("algebra.monoid").name == "dtlbench.algebra.monoid"
        assert get_logger("dtlbench.cli").name == "dtlbench.cli"

    def test_json_formatter_includes_extra_fields(self):
        record = logging.LogRecord("dtlbench.test", logging.INFO, __file__, 1, "hello", None, None)
        record.operation = "rank"
        payload = json.loads(JSONFormatter().format(record))
        assert payload["message"] == "hello"
        assert payload["level"] == "INFO"
        assert payload["operation"] == "rank"

    def test_setup_logging_to_file(self, tmp_path):
        log_file = tmp_path / "run.log"
        setup_logging(log_level="INFO", json_format=True, log_file=str(log_file))
        logger = get_logger("test.file")
        logger.info("written", extra={"operation": "census"})
        for handler in logging.getLogger("dtlbench").handlers:
            handler.flush()
        entry = json.loads(log_file.read_text(encoding="utf-8").strip().splitlines()[-1])
        assert entry["message"] == "written"
        assert entry["operation"] == "census"
        setup_logging()
        logging.getLogger("dtlbench").propagate = True

    def test_log_operation_error(self, caplog):
        logger = logging.getLogger("plain.test")
        with caplog.at_level(logging.ERROR, logger="plain.test"):
            try:
                raise ValueError("boom")
            except ValueError as e:
                log_operation_error(logger, "suite hat", e, duration=0.5, n=3)
        record = caplog.records[-1]
        assert record.error_type == "ValueError"
        assert record.duration == 0.5
        assert "suite hat failed: boom" in record.getMessage()


class TestErrorHandler:

    def setup_method(self):
        self.handler = ErrorHandler()

    def test_check_context_wraps_foreign_errors(self):
        with pytest.raises(DtlBenchError) as exc_info:
            with self.handler.handle_check_context("hat", n=3):
                raise ZeroDivisionError("division by zero")
        assert "Check hat failed" in exc_info.value.message
        assert isinstance(exc_info.value.cause, ZeroDivisionError)
        assert exc_info.value.traceback

    def test_check_context_keeps_domain_errors(self):
        error = AdmissibilityError("not orthogonal", roots=[(1, 0)])
        with pytest.raises(AdmissibilityError) as exc_info:
            with self.handler.handle_check_context("admissible"):
                raise error
        assert exc_info.value is error

    def test_plan_context(self):
        with pytest.raises(ConfigurationError) as exc_info:
            with self.handler.handle_plan_context("plan.yaml"):
                raise OSError("disk on fire")
        assert exc_info.value.config_path == "plan.yaml"

    def test_handle_check_error(self):
        wrapped = self.handler.handle_check_error(KeyError("n"), ErrorContext("hat", {"n": 3}))
        assert isinstance(wrapped, DtlBenchError)

    def test_wrap_exception(self):
        try:
            raise RuntimeError("inner")
        except RuntimeError as e:
            wrapped = self.handler.wrap_exception(e, ConfigurationError, "outer")
        assert isinstance(wrapped, ConfigurationError)
        assert wrapped.message == "outer"
        assert wrapped.traceback

    def test_wrap_exception_passes_domain_errors_through(self):
        error = DtlBenchError("already ours")
        assert self.handler.wrap_exception(error) is error

    @pytest.mark.parametrize(
        "error,fragment",
        [
            (ConfigurationError("bad", config_path="p.yaml"), "Plan: p.yaml"),
            (AdmissibilityError("bad", roots=[(1, 0)]), "Roots: [[1, 0]]"),
            (EnumerationLimitError("too many", limit=10), "Limit: 10 elements"),
            (VerificationError("mismatch", details={"by_enumeration": 5}), "by_enumeration: 5"),
            (ReductionError("stuck", dump={"left": 1}), "Configuration: {'left': 1}"),
            (ValueError("plain"), "plain"),
        ],
    )
    def test_format_error_details(self, error, fragment):
        assert fragment in self.handler.format_error_details(error)
