"""Data models for dtlbench reports and run plans.

Reports collect one ``CheckVerdict`` per checked instance. Run plans are YAML
files listing rank computations, relation suites, isomorphism checks and
census runs to execute in one go.
"""
from __future__ import annotations

import os
import re
import time
from datetime import datetime, timezone
from enum import Enum
from pathlib import Path
from typing import Any, Dict, List, Optional

import yaml
from pydantic import BaseModel, ConfigDict, Field, PrivateAttr, field_validator, model_validator

from ..constants import DEFAULT_MAX_ELEMENTS, REPORT_SCHEMA_VERSION


class CheckStatus(str, Enum):
    """Outcome of a single check."""
    PASS = "pass"
    FAIL = "fail"
    SKIP = "skip"
    ERROR = "error"


class CheckVerdict(BaseModel):
    """Expected against actual for one checked instance."""

    name: str = Field(..., min_length=1)
    suite: Optional[str] = Field(default=None)
    expected: Any = Field(default=None)
    actual: Any = Field(default=None)
    status: CheckStatus = Field(default=CheckStatus.PASS)
    detail: Optional[str] = Field(default=None)
    extras: Dict[str, Any] = Field(default_factory=dict)

    @classmethod
    def compare(cls, name: str, expected: Any, actual: Any, **kwargs: Any) -> CheckVerdict:
        status = CheckStatus.PASS if expected == actual else CheckStatus.FAIL
        return cls(name=name, expected=expected, actual=actual, status=status, **kwargs)

    @classmethod
    def holds(cls, name: str, condition: bool, **kwargs: Any) -> CheckVerdict:
        status = CheckStatus.PASS if condition else CheckStatus.FAIL
        return cls(name=name, expected=True, actual=bool(condition), status=status, **kwargs)

    @property
    def passed(self) -> bool:
        return self.status == CheckStatus.PASS


class ReportSummary(BaseModel):
    """Verdict counts by status."""

    passed: int = Field(default=0, ge=0)
    failed: int = Field(default=0, ge=0)
    skipped: int = Field(default=0, ge=0)
    error: int = Field(default=0, ge=0)

    @property
    def total(self) -> int:
        return self.passed + self.failed + self.skipped + self.error

    @classmethod
    def from_verdicts(cls, verdicts: List[CheckVerdict]) -> ReportSummary:
        def count(status: CheckStatus) -> int:
            return sum(1 for v in verdicts if v.status == status)

        return cls(
            passed=count(CheckStatus.PASS),
            failed=count(CheckStatus.FAIL),
            skipped=count(CheckStatus.SKIP),
            error=count(CheckStatus.ERROR),
        )


class RunReport(BaseModel):
    """Everything one command checked, emitted even when checks fail."""

    model_config = ConfigDict(populate_by_name=True)

    schema_version: int = Field(default=REPORT_SCHEMA_VERSION, alias="schema")
    command: str = Field(..., min_length=1)
    started_at: datetime = Field(default_factory=lambda: datetime.now(timezone.utc))
    duration: float = Field(default=0.0, ge=0)
    verdicts: List[CheckVerdict] = Field(default_factory=list)
    summary: Optional[ReportSummary] = Field(default=None)
    artifacts: Dict[str, Any] = Field(default_factory=dict)

    _clock: float = PrivateAttr(default_factory=time.perf_counter)

    def add_verdict(self, verdict: CheckVerdict) -> None:
        self.verdicts.append(verdict)

    def extend(self, verdicts: List[CheckVerdict]) -> None:
        self.verdicts.extend(verdicts)

    def finalize(self) -> RunReport:
        self.duration = time.perf_counter() - self._clock
        self.summary = ReportSummary.from_verdicts(self.verdicts)
        return self

    @property
    def ok(self) -> bool:
        summary = self.summary or ReportSummary.from_verdicts(self.verdicts)
        return summary.failed == 0 and summary.error == 0

    def to_payload(self) -> Dict[str, Any]:
        return self.model_dump(mode="json", by_alias=True)


# -- run plans ---------------------------------------------------------------


class PlanAction(str, Enum):
    """What a plan step runs."""
    RANK = "rank"
    VERIFY = "verify"
    ISO_CHECK = "iso-check"
    CENSUS = "census"


class Algebra(str, Enum):
    """Algebras with a rank computation."""
    BRAUER_A = "brA"
    TEMPERLEY_LIEB = "tl"
    DTL_B = "dtlB"
    DTL_C = "dtlC"

    @property
    def size_parameter(self) -> str:
        return "m" if self in (Algebra.BRAUER_A, Algebra.TEMPERLEY_LIEB) else "n"


class PlanSettings(BaseModel):
    """Settings shared by every step of a plan."""

    max_elements: int = Field(default=DEFAULT_MAX_ELEMENTS, ge=1)
    stop_on_failure: bool = Field(default=False)


class PlanStep(BaseModel):
    """One action of a run plan with its parameters."""

    model_config = ConfigDict(populate_by_name=True)

    action: PlanAction
    name: Optional[str] = Field(default=None)
    algebra: Optional[Algebra] = Field(default=None)
    suite: Optional[str] = Field(default=None)
    type_label: Optional[str] = Field(default=None, alias="type")
    n: Optional[int] = Field(default=None, ge=1)
    m: Optional[int] = Field(default=None, ge=1)

    @field_validator("suite")
    @classmethod
    def validate_suite_name(cls, v: Optional[str]) -> Optional[str]:
        """Suite names and aliases must be registered; an alias becomes its suite name."""
        if v is None:
            return v
        from ..checks.registry import SuiteRegistry

        try:
            return SuiteRegistry.resolve(v)
        except KeyError as e:
            raise ValueError(e.args[0]) from None

    @field_validator("type_label")
    @classmethod
    def validate_type_label(cls, v: Optional[str]) -> Optional[str]:
        if v is not None and not re.match(r"^[ABCDEF]\d+$", v):
            raise ValueError(f"Invalid type label: {v}")
        return v

    @model_validator(mode="after")
    def validate_required_parameters(self) -> PlanStep:
        """Each action needs its own parameters and nothing contradictory."""
        if self.action == PlanAction.RANK:
            if self.algebra is None:
                raise ValueError("rank steps need an algebra")
            size = self.algebra.size_parameter
            other = "n" if size == "m" else "m"
            if getattr(self, size) is None:
                raise ValueError(f"rank of {self.algebra.value} needs '{size}'")
            if getattr(self, other) is not None:
                raise ValueError(f"rank of {self.algebra.value} takes '{size}', not '{other}'")
        elif self.action == PlanAction.VERIFY:
            if self.suite is None:
                raise ValueError("verify steps need a suite")
            if self.type_label is None and self.n is None:
                raise ValueError(f"suite {self.suite} needs 'type' or 'n'")
        elif self.n is None:
            raise ValueError(f"{self.action.value} steps need 'n'")
        if self.action != PlanAction.RANK and self.algebra is not None:
            raise ValueError(f"'algebra' is only meaningful for rank steps, not {self.action.value}")
        return self

    @property
    def title(self) -> str:
        if self.name:
            return self.name
        parts = [self.action.value]
        parts += [self.algebra.value] if self.algebra else []
        parts += [self.suite] if self.suite else []
        parts += [self.type_label] if self.type_label else []
        parts += [f"n={self.n}"] if self.n is not None else []
        parts += [f"m={self.m}"] if self.m is not None else []
        return " ".join(parts)


class RunPlan(BaseModel):
    """A YAML run plan."""

    name: str = Field(default="plan", min_length=1)
    settings: PlanSettings = Field(default_factory=PlanSettings)
    steps: List[PlanStep] = Field(..., min_length=1)

    plan_file_path: Optional[Path] = Field(default=None, exclude=True)

    @classmethod
    def load_from_file(cls, plan_path: Path) -> RunPlan:
        """Read, substitute environment variables, parse and validate."""
        plan_path = Path(plan_path).resolve()
        text = plan_path.read_text(encoding="utf-8")
        raw = yaml.safe_load(cls._substitute_env_vars(text))
        if not isinstance(raw, dict):
            raise ValueError("a run plan must be a YAML mapping")
        plan = cls(**raw)
        plan.plan_file_path = plan_path
        return plan

    @staticmethod
    def _substitute_env_vars(text: str) -> str:
        """Replace ``${VAR}`` and ``${VAR:-default}``; unknown variables stay as written."""

        def replace(match: re.Match) -> str:
            expression = match.group(1)
            if ":-" in expression:
                name, default = expression.split(":-", 1)
                return os.getenv(name.strip(), default.strip())
            name = expression.strip()
            return os.getenv(name, f"${{{name}}}")

        return re.sub(r"\$\{([^}]+)\}", replace, text)
