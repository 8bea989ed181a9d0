"""
Run plan loader for the dtlbench CLI.
Handles loading and validation of YAML run plans.
"""
from __future__ import annotations

import os
from collections import Counter
from pathlib import Path
from typing import List, Optional, Union

import click
import yaml
from pydantic import ValidationError

from ..config.models import Algebra, PlanAction, RunPlan
from ..core.error_handling import ErrorHandler
from ..exceptions import ConfigurationError

# sizes past which a step is expected to run for minutes
_LARGE_SIZES = {
    Algebra.BRAUER_A: 5,
    Algebra.TEMPERLEY_LIEB: 9,
    Algebra.DTL_B: 6,
    Algebra.DTL_C: 5,
}


class PlanLoadError(ConfigurationError):
    """Raised when a run plan cannot be loaded or validated."""


class PlanLoader:
    """Handles loading and validating run plans."""

    def __init__(self) -> None:
        self.error_handler = ErrorHandler()

    def load_and_validate(self, plan_path: Union[str, Path], strict: bool = False) -> RunPlan:
        """
        Load and validate a run plan.

        Args:
            plan_path: Path to the YAML plan
            strict: Treat plan warnings as errors

        Returns:
            Validated RunPlan

        Raises:
            PlanLoadError: If loading or validation fails
        """
        plan_path = Path(plan_path)

        if not plan_path.exists():
            raise PlanLoadError(f"Run plan not found: {plan_path}", config_path=str(plan_path))

        if not os.access(plan_path, os.R_OK):
            raise PlanLoadError(f"Run plan is not readable: {plan_path}", config_path=str(plan_path))

        # anything else is wrapped into a ConfigurationError by the handler
        with self.error_handler.handle_plan_context(str(plan_path)):
            try:
                plan = RunPlan.load_from_file(plan_path)
            except ValidationError as e:
                error_messages = []
                for error in e.errors():
                    location = " -> ".join(str(loc) for loc in error["loc"])
                    error_messages.append(f"{location}: {error['msg']}")
                formatted_errors = "\n".join(f"- {msg}" for msg in error_messages)
                raise PlanLoadError(
                    f"Run plan validation failed:\n{formatted_errors}", config_path=str(plan_path), cause=e
                )
            except yaml.YAMLError as e:
                raise PlanLoadError(f"Run plan is not valid YAML: {e}", config_path=str(plan_path), cause=e)

        warnings = self.plan_warnings(plan)
        if warnings and strict:
            formatted = "\n".join(f"- {w}" for w in warnings)
            raise PlanLoadError(f"Run plan validation failed:\n{formatted}", config_path=str(plan_path))
        if warnings:
            click.secho("Run plan warnings:", fg="yellow", err=True)
            for warning in warnings:
                click.secho(f"- {warning}", fg="yellow", err=True)

        return plan

    def plan_warnings(self, plan: RunPlan) -> List[str]:
        """Non-fatal findings: repeated steps and sizes that take long to enumerate."""
        warnings = []
        counts = Counter(step.title for step in plan.steps)
        warnings += [f"step '{title}' appears {count} times" for title, count in counts.items() if count > 1]
        for step in plan.steps:
            if step.action == PlanAction.RANK and step.algebra is not None:
                size: Optional[int] = getattr(step, step.algebra.size_parameter)
                if size is not None and size > _LARGE_SIZES[step.algebra]:
                    warnings.append(f"step '{step.title}' is large and may take several minutes")
            elif step.action == PlanAction.ISO_CHECK and step.n is not None and step.n > 4:
                warnings.append(f"step '{step.title}' is large and may take several minutes")
        return warnings
