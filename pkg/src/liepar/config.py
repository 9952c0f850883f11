"""Enumeration budgets, overridable through the LIEPAR_BUDGET env variable."""

import os

WEYL_BUDGET = 10**7      # maximum number of Weyl group elements to enumerate
WEIGHT_BUDGET = 10**6    # maximum dimension for a full weight multiset
SPECHT_BUDGET = 8        # maximum |lambda| for Specht-module Gram matrices
SUBSYSTEM_RANK_GUARD = 5 # maximum rank for exhaustive subsystem enumeration


def effective_budget(default: int) -> int:
    """Return `default`, or the LIEPAR_BUDGET override when set."""
    raw = os.environ.get("LIEPAR_BUDGET")
    if raw is None:
        return default
    try:
        value = int(raw)
    except ValueError:
        return default
    return value if value > 0 else default
