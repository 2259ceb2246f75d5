"""Size guards for the exponential-time steps.

All limits can be overridden at once by the environment variable
GSTAB_SIZE_LIMIT (an integer n): the perfection and verify guards become n
and the cone guard becomes n + 1.  Individual callers may also pass
explicit limits to the functions that enforce them.
"""

import os

# Perfection test inspects all induced subgraphs: 2^n of them.
DEFAULT_PERFECT_LIMIT = 12

# Face enumeration works in the (n+1)-dimensional cone.
DEFAULT_CONE_DIM_LIMIT = 9

# `verify` enumerates graphs up to isomorphism by canonical forms: the
# n=6 layer already takes minutes in pure Python.
DEFAULT_VERIFY_LIMIT = 6

_ENV_VAR = "GSTAB_SIZE_LIMIT"


def _env_override() -> int | None:
    raw = os.environ.get(_ENV_VAR)
    if raw is None:
        return None
    try:
        return int(raw)
    except ValueError:
        return None


def perfect_limit() -> int:
    override = _env_override()
    return override if override is not None else DEFAULT_PERFECT_LIMIT


def cone_dim_limit() -> int:
    override = _env_override()
    return override + 1 if override is not None else DEFAULT_CONE_DIM_LIMIT


def verify_limit() -> int:
    override = _env_override()
    return override if override is not None else DEFAULT_VERIFY_LIMIT
