"""Configuration constants for dtlbench.

Limits and defaults that can be overridden through environment variables
prefixed with ``DTLBENCH_``.
"""

import os


def get_env_int(env_var: str, default: int) -> int:
    """Get integer value from environment variable with fallback to default."""
    try:
        return int(os.getenv(env_var, default))
    except (ValueError, TypeError):
        return default


# Environment variable prefix
ENV_PREFIX = "DTLBENCH_"

# Enumeration limits
DEFAULT_MAX_ELEMENTS = get_env_int(f"{ENV_PREFIX}MAX_ELEMENTS", 10**6)
WORD_HEIGHT_MAX_STRANDS = get_env_int(f"{ENV_PREFIX}WORD_HEIGHT_MAX_STRANDS", 4)

# |k| bound for delta exponents; exceeding it is an error, never a wraparound
DELTA_EXPONENT_BOUND = get_env_int(f"{ENV_PREFIX}DELTA_EXPONENT_BOUND", 2**31 - 1)

# Reporting
REPORT_SCHEMA_VERSION = 1
DEFAULT_OUTPUT_FORMAT = os.getenv(f"{ENV_PREFIX}OUTPUT_FORMAT", "console")
DEFAULT_LOG_LEVEL = os.getenv(f"{ENV_PREFIX}LOG_LEVEL", "WARNING")
