"""Session-level settings: alphabet size and the enumeration cap.

Settings live in a :class:`contextvars.ContextVar` so that a ``with settings(...)``
block only affects the current thread / task.
"""
from __future__ import annotations

import contextvars
import os
from contextlib import contextmanager
from dataclasses import dataclass, replace
from typing import Iterator

DEFAULT_ALPHABET = 4
DEFAULT_MAX_TERMS = 10**6
MAX_ALPHABET = 64


@dataclass(frozen=True)
class Settings:
    alphabet: int = DEFAULT_ALPHABET
    max_terms: int = DEFAULT_MAX_TERMS

    def __post_init__(self) -> None:
        if not 1 <= self.alphabet <= MAX_ALPHABET:
            raise ValueError(f"alphabet size must be in 1..{MAX_ALPHABET}, got {self.alphabet}")
        if self.max_terms < 1:
            raise ValueError("max_terms must be positive")


def _initial() -> Settings:
    raw = os.environ.get("MATCOMP_ALPHABET")
    return Settings(alphabet=int(raw)) if raw else Settings()


_current: contextvars.ContextVar[Settings] = contextvars.ContextVar("matcomp_settings", default=_initial())


def get_settings() -> Settings:
    return _current.get()


def alphabet_size() -> int:
    return _current.get().alphabet


def max_terms() -> int:
    return _current.get().max_terms


def configure(**changes) -> Settings:
    """Replace the current settings in place (for scripts and the CLI)."""
    new = replace(_current.get(), **changes)
    _current.set(new)
    return new


@contextmanager
def settings(**changes) -> Iterator[Settings]:
    token = _current.set(replace(_current.get(), **changes))
    try:
        yield _current.get()
    finally:
        _current.reset(token)
