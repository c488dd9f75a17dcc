"""Wall-clock budget and cooperative cancellation for search loops."""

import time
from typing import Any, Optional

from ..errors import SolveTimeout


class BranchCancelled(Exception):
    """Raised inside a branch when another worker already settled the question."""


class Budget:
    """Deadline plus an optional shared stop flag, polled every ``check_every`` ticks.

    ``stop_event`` is anything with ``is_set()`` (a threading or multiprocessing
    manager Event).
    """

    def __init__(self, timeout_sec: Optional[float] = None, stop_event: Any = None, check_every: int = 1024):
        self.timeout_sec = timeout_sec
        self.deadline = time.monotonic() + timeout_sec if timeout_sec is not None else None
        self.stop_event = stop_event
        self.check_every = check_every
        self._ticks = 0

    def tick(self) -> None:
        self._ticks += 1
        if self._ticks % self.check_every == 0:
            self.check()

    def check(self) -> None:
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise SolveTimeout(f"search exceeded {self.timeout_sec}s budget")
        if self.stop_event is not None and self.stop_event.is_set():
            raise BranchCancelled()

    def remaining(self) -> Optional[float]:
        """Seconds left, or None for an unlimited budget."""
        if self.deadline is None:
            return None
        return max(0.0, self.deadline - time.monotonic())
