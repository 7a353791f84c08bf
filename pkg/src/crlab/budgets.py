"""Work budgets for the enumeration-heavy operations.

Defaults keep everything desk-scale; both can be raised through the
environment for deliberate heavy runs.
"""

import os

DEFAULT_ENUM_BUDGET = 1 << 24
DEFAULT_SYND_BUDGET = 1 << 24

ENUM_BUDGET_VAR = "CRLAB_ENUM_BUDGET"
SYND_BUDGET_VAR = "CRLAB_SYND_BUDGET"


class BudgetExceeded(Exception):
    """Raised when an operation would exceed its configured budget."""


def _read(var: str, default: int) -> int:
    raw = os.environ.get(var)
    if raw is None:
        return default
    try:
        value = int(raw)
    except ValueError as exc:
        raise ValueError(f"{var} must be an integer, got {raw!r}") from exc
    if value < 1:
        raise ValueError(f"{var} must be positive, got {value}")
    return value


def enum_budget() -> int:
    """Maximum number of codewords a direct enumeration may visit."""
    return _read(ENUM_BUDGET_VAR, DEFAULT_ENUM_BUDGET)


def synd_budget() -> int:
    """Maximum number of syndromes a coset-leader BFS may visit."""
    return _read(SYND_BUDGET_VAR, DEFAULT_SYND_BUDGET)


def check_enum(count: int, what: str = "codeword enumeration") -> None:
    limit = enum_budget()
    if count > limit:
        raise BudgetExceeded(
            f"{what} needs {count} items, over the limit {limit} "
            f"(raise {ENUM_BUDGET_VAR} to allow)"
        )


def check_synd(count: int, what: str = "syndrome space") -> None:
    limit = synd_budget()
    if count > limit:
        raise BudgetExceeded(
            f"{what} needs {count} syndromes, over the limit {limit} "
            f"(raise {SYND_BUDGET_VAR} to allow)"
        )
