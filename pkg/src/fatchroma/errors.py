"""Exception types shared across the package."""

from typing import Optional


class FatChromaError(Exception):
    """Base class for all fatchroma errors."""


class GraphFormatError(FatChromaError, ValueError):
    """Malformed graph6, DIMACS or coloring input.

    Exactly one of ``offset`` (graph6 byte offset) or ``line`` (1-based line
    number) is usually set.
    """

    def __init__(self, message: str, offset: Optional[int] = None, line: Optional[int] = None):
        self.offset = offset
        self.line = line
        if offset is not None:
            message = f"{message} (at byte {offset})"
        elif line is not None:
            message = f"{message} (at line {line})"
        super().__init__(message)


class PartitionError(FatChromaError, ValueError):
    """Color classes that are empty, overlapping or do not cover the vertex set."""


class SizeCapExceeded(FatChromaError, ValueError):
    """Graph too large for an exhaustive routine."""

    def __init__(self, routine: str, n: int, cap: int):
        self.routine = routine
        self.n = n
        self.cap = cap
        super().__init__(f"{routine} is capped at {cap} vertices, graph has {n}")


class HypothesisViolation(FatChromaError, ValueError):
    """Reproduction parameters outside a theorem's hypotheses."""


class SolveTimeout(FatChromaError):
    """Search budget exhausted before the answer was proved."""
