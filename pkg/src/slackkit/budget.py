"""Wall-clock budgets for long computations."""

from __future__ import annotations

import time


class BudgetExceeded(RuntimeError):
    """Raised when a computation runs past its budget.

    This is not a mathematical answer; callers report it separately.
    """


class Budget:
    """Deadline shared by the stages of one computation.

    ``Budget(None)`` never expires.
    """

    __slots__ = ("seconds", "start", "deadline", "label")

    def __init__(self, seconds: float | None = None, label: str = ""):
        self.seconds = seconds
        self.start = time.monotonic()
        self.deadline = None if seconds is None else self.start + seconds
        self.label = label

    @classmethod
    def coerce(cls, budget) -> "Budget":
        if isinstance(budget, Budget):
            return budget
        return cls(budget)

    def elapsed(self) -> float:
        return time.monotonic() - self.start

    def remaining(self) -> float | None:
        if self.deadline is None:
            return None
        return self.deadline - time.monotonic()

    def check(self):
        if self.deadline is not None and time.monotonic() > self.deadline:
            what = f" during {self.label}" if self.label else ""
            raise BudgetExceeded(f"budget of {self.seconds:g}s exceeded{what}")

    __call__ = check


UNLIMITED = Budget(None)
