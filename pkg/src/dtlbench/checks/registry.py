"""Registry of relation and property suites.

Suites register themselves by name with :meth:`SuiteRegistry.register`;
importing :mod:`dtlbench.checks.suites` fills the registry. A suite may also
answer to short aliases listed in its ``aliases`` attribute.
"""

from typing import Callable, Dict, List, Type

from .base import RelationSuite


class SuiteRegistry:
    """Registry for suite implementations."""

    _suites: Dict[str, Type[RelationSuite]] = {}
    _aliases: Dict[str, str] = {}

    @classmethod
    def register(cls, suite_class: Type[RelationSuite]) -> Type[RelationSuite]:
        """Register a suite class under its ``name`` and aliases; usable as a decorator."""
        cls._suites[suite_class.name] = suite_class
        for alias in suite_class.aliases:
            cls._aliases[alias] = suite_class.name
        return suite_class

    @classmethod
    def resolve(cls, suite_name: str) -> str:
        """Registered name for a name or alias.

        Raises:
            KeyError: neither a suite name nor an alias
        """
        _load_builtin_suites()
        if suite_name in cls._suites:
            return suite_name
        if suite_name in cls._aliases:
            return cls._aliases[suite_name]
        raise KeyError(
            f"Unknown suite: {suite_name}. Available suites: {', '.join(sorted(cls.choices()))}"
        )

    @classmethod
    def get_suite(cls, suite_name: str) -> RelationSuite:
        """Get a suite instance by name or alias.

        Raises:
            KeyError: no suite with that name
        """
        return cls._suites[cls.resolve(suite_name)]()

    @classmethod
    def list_suites(cls) -> List[str]:
        """List all registered suite names in registration order."""
        _load_builtin_suites()
        return list(cls._suites.keys())

    @classmethod
    def choices(cls) -> List[str]:
        """Names and aliases accepted on the command line and in plans."""
        _load_builtin_suites()
        return list(cls._suites.keys()) + [a for a in cls._aliases if a not in cls._suites]

    @classmethod
    def descriptions(cls) -> Dict[str, str]:
        _load_builtin_suites()
        return {name: suite.description for name, suite in cls._suites.items()}


def _load_builtin_suites() -> None:
    from . import suites  # noqa: F401


register: Callable[[Type[RelationSuite]], Type[RelationSuite]] = SuiteRegistry.register
