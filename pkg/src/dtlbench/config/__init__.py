"""Report and run plan models."""

from .models import CheckStatus, CheckVerdict, ReportSummary, RunPlan, RunReport

__all__ = ["CheckStatus", "CheckVerdict", "ReportSummary", "RunPlan", "RunReport"]
