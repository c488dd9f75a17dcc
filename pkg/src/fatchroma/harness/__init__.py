"""Theorem reproduction harness."""

from .reproduce import (
    all_passed,
    build_cases,
    connected_cases,
    disconnected1_case,
    disconnected2_case,
    format_table,
    general_cases,
    run_case,
    run_cases,
)

__all__ = [
    "disconnected1_case",
    "disconnected2_case",
    "connected_cases",
    "general_cases",
    "build_cases",
    "run_case",
    "run_cases",
    "all_passed",
    "format_table",
]
