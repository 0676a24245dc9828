"""The free commutative monoid on the letters ``1..d``.

A :class:`Monomial` stores its dense exponent vector.  Internally the grids of
matrix compositions hold *packed codes*: the exponent of letter ``i`` occupies
bits ``[16*(i-1), 16*i)`` of a Python int.  With that packing the monoid
product is plain integer addition and the unit is ``0``, which is what lets the
product kernels and the one-hot matrix oracles work on bare integers.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from enum import IntEnum
from functools import lru_cache
from typing import Sequence

from . import config
from .errors import AlphabetError

BITS = 16
FIELD = (1 << BITS) - 1
UNIT_CODE = 0


class Ordering(IntEnum):
    LT = -1
    EQ = 0
    GT = 1

    @classmethod
    def of(cls, a, b) -> "Ordering":
        return cls.LT if a < b else cls.GT if a > b else cls.EQ


def letter_code(i: int) -> int:
    return 1 << (BITS * (i - 1))


def pack(exponents: Sequence[int]) -> int:
    code = 0
    for i, e in enumerate(exponents):
        if e < 0 or e > FIELD:
            raise ValueError(f"exponent {e} out of range")
        code |= e << (BITS * i)
    return code


@lru_cache(maxsize=None)
def unpack(code: int) -> tuple[int, ...]:
    """Exponent vector of a code, trailing zeros stripped."""
    out = []
    while code:
        out.append(code & FIELD)
        code >>= BITS
    return tuple(out)


def code_degree(code: int) -> int:
    return sum(unpack(code))


def code_letters(code: int) -> int:
    """Largest letter occurring in ``code`` (0 for the unit)."""
    return len(unpack(code))


@lru_cache(maxsize=None)
def deglex_key(code: int) -> tuple:
    """Sort key realising the degree-lexicographic order on codes.

    Equal degrees are broken on the sorted letter word ``1..1 2..2 ...``; that
    word is lexicographically smaller exactly when, at the first letter whose
    exponent differs, it carries the *larger* exponent.
    """
    exps = unpack(code)
    return (sum(exps), tuple(-e for e in exps))


def format_code(code: int) -> str:
    if code == UNIT_CODE:
        return "e"
    parts = []
    for i, e in enumerate(unpack(code), start=1):
        parts.extend([str(i)] * e)
    return "*".join(parts)


_ENTRY = re.compile(r"^\s*(?:e|\d+(?:\s*\*\s*\d+)*)\s*$")


def parse_code(text: str, d: int | None = None) -> int:
    """Parse ``1*2*2`` or ``e`` into a packed code, checking letters against ``d``."""
    d = config.alphabet_size() if d is None else d
    if not _ENTRY.match(text):
        raise ValueError(f"malformed monoid entry {text!r}")
    text = text.strip()
    if text == "e":
        return UNIT_CODE
    code = 0
    for part in text.split("*"):
        i = int(part)
        if not 1 <= i <= d:
            raise AlphabetError(f"letter {i} outside alphabet 1..{d}")
        code += letter_code(i)
    return code


def check_code(code: int, d: int) -> None:
    if code < 0:
        raise ValueError("negative monoid code")
    if code_letters(code) > d:
        raise AlphabetError(f"monomial {format_code(code)} uses a letter outside 1..{d}")


@dataclass(frozen=True)
class Monomial:
    """An element of the free commutative monoid on ``d`` letters."""

    exponents: tuple[int, ...]

    def __post_init__(self) -> None:
        exps = tuple(int(e) for e in self.exponents)
        object.__setattr__(self, "exponents", exps)
        d = config.alphabet_size()
        if len(exps) != d:
            raise AlphabetError(f"expected {d} exponents, got {len(exps)}")
        if any(e < 0 or e > FIELD for e in exps):
            raise ValueError(f"exponents out of range: {exps}")

    @property
    def d(self) -> int:
        return len(self.exponents)

    @classmethod
    def unit(cls, d: int | None = None) -> "Monomial":
        d = config.alphabet_size() if d is None else d
        return cls((0,) * d)

    @classmethod
    def letter(cls, i: int, d: int | None = None) -> "Monomial":
        d = config.alphabet_size() if d is None else d
        if not 1 <= i <= d:
            raise AlphabetError(f"letter {i} outside alphabet 1..{d}")
        return cls(tuple(1 if k == i - 1 else 0 for k in range(d)))

    @classmethod
    def from_code(cls, code: int, d: int | None = None) -> "Monomial":
        d = config.alphabet_size() if d is None else d
        check_code(code, d)
        exps = unpack(code)
        return cls(exps + (0,) * (d - len(exps)))

    @classmethod
    def parse(cls, text: str, d: int | None = None) -> "Monomial":
        return cls.from_code(parse_code(text, d), d)

    @property
    def code(self) -> int:
        return pack(self.exponents)

    def is_unit(self) -> bool:
        return not any(self.exponents)

    def __mul__(self, other: "Monomial") -> "Monomial":
        return star(self, other)

    def __str__(self) -> str:
        return format_code(self.code)


def star(a: Monomial, b: Monomial) -> Monomial:
    if a.d != b.d:
        raise AlphabetError(f"cannot multiply monomials over {a.d} and {b.d} letters")
    return Monomial(tuple(x + y for x, y in zip(a.exponents, b.exponents)))


def degree(a: Monomial) -> int:
    return sum(a.exponents)


def cmp_deglex(a: Monomial, b: Monomial) -> Ordering:
    if a.d != b.d:
        raise AlphabetError(f"cannot compare monomials over {a.d} and {b.d} letters")
    return Ordering.of(deglex_key(a.code), deglex_key(b.code))
