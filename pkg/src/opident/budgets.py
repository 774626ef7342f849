"""Resource budgets for the long-running computations."""

from __future__ import annotations

import time
from dataclasses import dataclass


@dataclass(frozen=True)
class ResourceBudget:
    """Limits for minor streaming and basis completion; None disables a cap."""

    max_pairs: int | None = None        # S-pairs processed per basis run
    max_basis: int | None = None        # working basis size
    max_seconds: float | None = None    # wall clock per operation
    max_generators: int | None = None   # distinct generators kept in memory
    max_minors: int | None = None       # minors visited per stream

    def start_clock(self) -> float:
        return time.monotonic()

    def out_of_time(self, t0: float) -> bool:
        return self.max_seconds is not None and time.monotonic() - t0 > self.max_seconds


UNLIMITED = ResourceBudget()


class BudgetExceeded(Exception):
    """A computation hit its resource budget; carries partial results."""

    def __init__(self, reason: str, partial=None):
        super().__init__(reason)
        self.reason = reason
        self.partial = partial
