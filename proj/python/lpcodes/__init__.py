"""Lifted-product quantum LDPC codes (C++ core)."""

from ._lpcodes import *  # noqa: F401,F403
from ._lpcodes import (
    BudgetExceeded,
    CssCode,
    DimensionError,
    DomainError,
    InvariantViolation,
    ParseError,
    Unsupported,
)

__version__ = "0.1.0"
