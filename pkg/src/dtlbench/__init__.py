"""Diagram-algebra workbench (dtlbench)

Computational checks for Dieck-Temperley-Lieb algebras of types B_n and C_n:
ranks by monoid enumeration, presentations verified on Brauer-diagram
realizations, and admissible sets of roots with their orbit posets.
"""

__version__ = "0.1.0"
__author__ = "dtlbench Development Team"
__description__ = "Diagram-algebra workbench for DTL(B_n) and DTL(C_n)"

# Export main components
from .config.models import CheckVerdict, RunReport
from .cli_main import main

__all__ = [
    "__version__",
    "CheckVerdict",
    "RunReport",
    "main",
]
