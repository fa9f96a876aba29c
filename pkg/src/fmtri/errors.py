"""Shared exception types and the cooperative time budget."""

from __future__ import annotations

import time


class SpecError(ValueError):
    """Bad user input: unknown type string, invalid node label, bad flag."""


class InvariantViolation(RuntimeError):
    """A computed result broke an internal consistency check.

    This always indicates a bug (wrong table entry, broken recursion, ...),
    never bad input.
    """


class ComputationTimeout(RuntimeError):
    """A computation exceeded its time budget."""


class Deadline:
    """Cooperative wall-clock budget, checked inside long-running loops.

    ``Deadline(None)`` never fires.
    """

    __slots__ = ("t_end",)

    def __init__(self, max_seconds: float | None = None):
        self.t_end = None if max_seconds is None else time.monotonic() + max_seconds

    def check(self) -> None:
        if self.t_end is not None and time.monotonic() > self.t_end:
            raise ComputationTimeout("time budget exceeded")


NO_DEADLINE = Deadline(None)
