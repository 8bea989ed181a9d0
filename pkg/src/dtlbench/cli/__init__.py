"""
Command-line interface package for dtlbench.

This package provides CLI infrastructure including run plan loading.
"""

from .plan_loader import PlanLoader, PlanLoadError

__all__ = [
    "PlanLoader",
    "PlanLoadError",
]
