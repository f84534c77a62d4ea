"""Size caps for fields and exhaustive enumerations.

``ADDIKIT_BUDGET`` in the environment overrides the enumeration cap.
"""

from __future__ import annotations

import os

FIELD_SIZE_CAP = 2**24
DEFAULT_BUDGET = 2**26


def enumeration_budget(budget: int | None = None) -> int:
    if budget is not None:
        return int(budget)
    env = os.environ.get("ADDIKIT_BUDGET")
    if env:
        return int(env)
    return DEFAULT_BUDGET


def check_budget(what: str, needed: int, budget: int | None = None) -> None:
    from addikit.errors import BudgetExceeded

    cap = enumeration_budget(budget)
    if needed > cap:
        raise BudgetExceeded(what, needed, cap)
