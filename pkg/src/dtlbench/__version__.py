"""Version information for dtlbench."""

__version__ = "0.1.0"
