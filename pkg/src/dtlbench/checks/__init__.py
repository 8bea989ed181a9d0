"""Relation and property suites and the runners behind the CLI commands."""

from .base import RelationSuite, SuiteContext, SuiteResult
from .registry import SuiteRegistry

__all__ = ["RelationSuite", "SuiteContext", "SuiteResult", "SuiteRegistry"]
