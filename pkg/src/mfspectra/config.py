"""Run configuration shared by the engine and the command line."""
from __future__ import annotations

import os
from dataclasses import dataclass

DEFAULT_SIZE_LIMIT = 2_000_000
DEFAULT_CUTOFF = 8


@dataclass
class RunConfig:
    cutoff: int = DEFAULT_CUTOFF
    size_limit: int = DEFAULT_SIZE_LIMIT
    output: str = "text"
    seed: int = 0

    def __post_init__(self):
        if self.cutoff < 0:
            raise ValueError("cutoff must be >= 0")
        if self.size_limit < 10_000:
            raise ValueError("size_limit must be >= 10^4")
        if self.output not in ("json", "csv", "text"):
            raise ValueError(f"unknown output format {self.output!r}")


_size_limit: int | None = None


def _checked(limit: int) -> int:
    if limit < 10_000:
        raise ValueError("size_limit must be >= 10^4")
    return limit


def size_limit() -> int:
    """Current weight-point budget; ``MFS_SIZE_LIMIT`` overrides the default."""
    if _size_limit is not None:
        return _size_limit
    env = os.environ.get("MFS_SIZE_LIMIT")
    if not env:
        return DEFAULT_SIZE_LIMIT
    try:
        return _checked(int(env))
    except ValueError:
        raise ValueError(f"MFS_SIZE_LIMIT={env!r}: need an integer >= 10^4") from None


def set_size_limit(limit: int | None) -> None:
    """Process-wide override of the budget; ``None`` falls back to env/default."""
    global _size_limit
    _size_limit = None if limit is None else _checked(limit)
