"""
Global size limits and sampling bounds.

HYPERCK_MAX_DIM (environment) caps the dimension of any algebra built by
make_algebra. The generator guard is fixed.
"""

from __future__ import annotations

import os

from hyperck.errors import HyperckError

MAX_GENERATORS = 12
MAX_DIM_ENV = "HYPERCK_MAX_DIM"
DEFAULT_MAX_DIM = 2**MAX_GENERATORS

# Random rationals in the verification suites: |numerator| <= 16, 1 <= denominator <= 16.
RATIONAL_BOUND = 16


def max_algebra_dim() -> int:
    """Return the algebra dimension cap, honouring HYPERCK_MAX_DIM."""
    raw = os.environ.get(MAX_DIM_ENV)
    if raw is None or raw.strip() == "":
        return DEFAULT_MAX_DIM
    try:
        value = int(raw)
    except ValueError as e:
        raise HyperckError(f"{MAX_DIM_ENV} must be an integer, got {raw!r}") from e
    if value < 1:
        raise HyperckError(f"{MAX_DIM_ENV} must be positive, got {value}")
    return value
