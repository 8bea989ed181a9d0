"""Shared fixtures for unit tests."""

import textwrap
from pathlib import Path

import pytest

from dtlbench.roots.rootsys import root_system


@pytest.fixture
def a3():
    return root_system("A3")


@pytest.fixture
def a4():
    return root_system("A4")


@pytest.fixture
def d4():
    return root_system("D4")


@pytest.fixture
def write_plan(tmp_path):
    """Write a YAML run plan into the test's temporary directory."""

    def _write(content: str, name: str = "plan.yaml") -> Path:
        path = tmp_path / name
        path.write_text(textwrap.dedent(content), encoding="utf-8")
        return path

    return _write
