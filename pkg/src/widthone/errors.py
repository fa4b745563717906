"""Exception types and size guards shared by every module."""

from __future__ import annotations

import os
from dataclasses import dataclass


class WidthOneError(Exception):
    pass


class DomainError(WidthOneError, ValueError):
    """Input outside the mathematical domain of an operation."""


class ResourceError(WidthOneError, RuntimeError):
    """A configured size guard would be exceeded."""


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise DomainError(f"{name} must be an integer, got {raw!r}") from None
    if value < 0:
        raise DomainError(f"{name} must be nonnegative, got {value}")
    return value


@dataclass(frozen=True)
class Limits:
    # dense tensor allocation, in entries
    max_entries: int = 10**7
    # number of row-tuples / tensors an enumeration may yield
    max_enum: int = 10**6
    # longest multiset word that may be enumerated letter by letter
    max_word: int = 12

    @classmethod
    def from_env(cls) -> "Limits":
        return cls(
            max_entries=_env_int("WIDTHONE_MAX_ENTRIES", cls.max_entries),
            max_enum=_env_int("WIDTHONE_MAX_ENUM", cls.max_enum),
            max_word=_env_int("WIDTHONE_MAX_WORD", cls.max_word),
        )


def limits() -> Limits:
    """Current limits; environment overrides are read on every call."""
    return Limits.from_env()
