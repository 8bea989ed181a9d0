"""Test package for dtlbench."""
