"""Configuration management for fatchroma."""

import os
from dataclasses import dataclass, replace
from typing import Optional

import psutil

_TRUE = {"1", "true", "yes", "on"}
_FALSE = {"0", "false", "no", "off", ""}


def default_threads() -> int:
    """Physical core count, falling back to logical cores, never below 1."""
    return psutil.cpu_count(logical=False) or psutil.cpu_count() or 1


@dataclass(frozen=True)
class Config:
    """Solver configuration loaded from environment variables."""

    # Parallelism
    threads: int = 1
    deterministic: bool = False

    # Budgets
    timeout_sec: Optional[float] = None
    spectrum_cap: int = 32

    # Logging
    log_level: str = "WARNING"

    @classmethod
    def from_env(cls) -> "Config":
        """Load configuration from environment variables.

        Returns:
            Config: Configuration object

        Raises:
            ValueError: If a variable is set to a value that cannot be parsed
        """
        threads_raw = os.getenv("FATCHROMA_THREADS")
        timeout_raw = os.getenv("FATCHROMA_TIMEOUT")
        return cls(
            threads=_parse_int("FATCHROMA_THREADS", threads_raw, minimum=1) if threads_raw else default_threads(),
            deterministic=_parse_bool("FATCHROMA_DETERMINISTIC", os.getenv("FATCHROMA_DETERMINISTIC", "")),
            timeout_sec=_parse_float("FATCHROMA_TIMEOUT", timeout_raw) if timeout_raw else None,
            spectrum_cap=_parse_int("FATCHROMA_SPECTRUM_CAP", os.getenv("FATCHROMA_SPECTRUM_CAP", "32"), minimum=1),
            log_level=os.getenv("FATCHROMA_LOG_LEVEL", "WARNING").upper(),
        )

    def with_overrides(self, **overrides) -> "Config":
        """Return a copy with every non-None override applied (CLI flags win over env)."""
        return replace(self, **{key: value for key, value in overrides.items() if value is not None})


def _parse_int(name: str, raw: str, minimum: int) -> int:
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {raw!r}") from None
    if value < minimum:
        raise ValueError(f"{name} must be >= {minimum}, got {value}")
    return value


def _parse_float(name: str, raw: str) -> float:
    try:
        value = float(raw)
    except ValueError:
        raise ValueError(f"{name} must be a number of seconds, got {raw!r}") from None
    if value <= 0:
        raise ValueError(f"{name} must be positive, got {value}")
    return value


def _parse_bool(name: str, raw: str) -> bool:
    lowered = raw.strip().lower()
    if lowered in _TRUE:
        return True
    if lowered in _FALSE:
        return False
    raise ValueError(f"{name} must be a boolean flag, got {raw!r}")
