"""Matrix compositions, diagonal concatenation, block words and their orders."""
from __future__ import annotations

import re
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator, Sequence, Union

from . import config
from .errors import CompositionError, DomainError
from .monoid import (
    UNIT_CODE,
    Monomial,
    Ordering,
    check_code,
    code_degree,
    deglex_key,
    format_code,
    parse_code,
)

Word = tuple["MatrixComposition", ...]
IntComposition = tuple[int, ...]


class MatrixComposition:
    """An ``m x n`` grid of monoid codes without unit rows or columns.

    Entries are kept row-major in ``entries``.  Instances are immutable and
    hashable; block decomposition and order keys are computed lazily and
    cached on the instance.
    """

    __slots__ = ("rows", "cols", "entries", "_hash", "_blocks", "_ckey", "_gkey", "_degree")

    def __init__(self, rows: int, cols: int, entries: tuple[int, ...]):
        # unchecked; use from_codes / construct / parse for untrusted input
        self.rows = rows
        self.cols = cols
        self.entries = entries
        self._hash = hash((rows, cols, entries))
        self._blocks = None
        self._ckey = None
        self._gkey = None
        self._degree = None

    # -- construction ---------------------------------------------------
    @classmethod
    def from_codes(cls, rows: int, cols: int, entries: Sequence[int]) -> "MatrixComposition":
        entries = tuple(entries)
        if rows == 0 or cols == 0:
            if rows or cols or entries:
                raise CompositionError("a composition with no rows must have no columns")
            return EMPTY
        if len(entries) != rows * cols:
            raise CompositionError(f"expected {rows * cols} entries for a {rows}x{cols} grid")
        d = config.alphabet_size()
        for code in entries:
            check_code(code, d)
        for r in range(rows):
            if not any(entries[r * cols:(r + 1) * cols]):
                raise CompositionError(f"row {r + 1} contains only e")
        for c in range(cols):
            if not any(entries[c::cols]):
                raise CompositionError(f"column {c + 1} contains only e")
        return cls(rows, cols, entries)

    # -- accessors ------------------------------------------------------
    @property
    def size(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def is_empty(self) -> bool:
        return self.rows == 0

    def code(self, r: int, c: int) -> int:
        return self.entries[r * self.cols + c]

    def entry(self, r: int, c: int) -> Monomial:
        return Monomial.from_code(self.code(r, c))

    @property
    def grid(self) -> tuple[tuple[Monomial, ...], ...]:
        return tuple(tuple(self.entry(r, c) for c in range(self.cols)) for r in range(self.rows))

    def row_codes(self, r: int) -> tuple[int, ...]:
        return self.entries[r * self.cols:(r + 1) * self.cols]

    @property
    def degree(self) -> int:
        if self._degree is None:
            self._degree = sum(code_degree(c) for c in self.entries)
        return self._degree

    @property
    def blocks(self) -> Word:
        if self._blocks is None:
            self._blocks = _decompose(self)
        return self._blocks

    def __len__(self) -> int:
        return len(self.blocks)

    def is_connected(self) -> bool:
        return len(self.blocks) == 1

    # -- value semantics ------------------------------------------------
    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if not isinstance(other, MatrixComposition):
            return NotImplemented
        return self._hash == other._hash and self.rows == other.rows and self.cols == other.cols \
            and self.entries == other.entries

    def __hash__(self) -> int:
        return self._hash

    def __str__(self) -> str:
        return format_composition(self)

    def __repr__(self) -> str:
        return f"MatrixComposition({format_composition(self)!r})"

    def __reduce__(self):
        return (MatrixComposition, (self.rows, self.cols, self.entries))


EMPTY = MatrixComposition(0, 0, ())


def construct(grid: Sequence[Sequence[Union[Monomial, str, int]]]) -> MatrixComposition:
    """Validate a rectangular grid of monomials (or their text forms) into a composition.

    Integer entries are read as single letters.
    """
    rows = len(grid)
    if rows == 0:
        return EMPTY
    cols = len(grid[0])
    if any(len(row) != cols for row in grid):
        raise CompositionError("grid is not rectangular")
    d = config.alphabet_size()
    codes = []
    for row in grid:
        for x in row:
            if isinstance(x, Monomial):
                if x.d != d:
                    raise CompositionError(f"monomial over {x.d} letters in a session with {d}")
                codes.append(x.code)
            elif isinstance(x, str):
                codes.append(parse_code(x, d))
            else:
                codes.append(parse_code(str(int(x)), d))
    return MatrixComposition.from_codes(rows, cols, codes)


def format_composition(a: MatrixComposition) -> str:
    if a.rows == 0:
        return "[]"
    rows = (" ".join(format_code(c) for c in a.row_codes(r)) for r in range(a.rows))
    return "[" + "; ".join(rows) + "]"


_STAR_SPACES = re.compile(r"\s*\*\s*")


def parse_composition(text: str, d: int | None = None) -> MatrixComposition:
    """Parse ``[1 e; e 2*3]`` (``[]`` is the empty composition)."""
    d = config.alphabet_size() if d is None else d
    s = text.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise CompositionError(f"composition literal must be bracketed: {text!r}")
    body = s[1:-1].strip()
    if not body:
        return EMPTY
    grid = []
    for r, row in enumerate(body.split(";")):
        tokens = _STAR_SPACES.sub("*", row.strip()).split()
        if not tokens:
            raise CompositionError(f"row {r + 1} is empty in {text!r}")
        grid.append([parse_code(tok, d) for tok in tokens])
    cols = len(grid[0])
    if any(len(row) != cols for row in grid):
        raise CompositionError(f"ragged rows in {text!r}")
    with config.settings(alphabet=d):
        return MatrixComposition.from_codes(len(grid), cols, [c for row in grid for c in row])


# -- diagonal concatenation and blocks ----------------------------------

def diag_concat(*parts: MatrixComposition) -> MatrixComposition:
    """Block-diagonal placement of the arguments, filling with the unit."""
    parts = [p for p in parts if p.rows]
    if not parts:
        return EMPTY
    if len(parts) == 1:
        return parts[0]
    R = sum(p.rows for p in parts)
    C = sum(p.cols for p in parts)
    out = [UNIT_CODE] * (R * C)
    r0 = c0 = 0
    for p in parts:
        for r in range(p.rows):
            base = (r0 + r) * C + c0
            out[base:base + p.cols] = p.entries[r * p.cols:(r + 1) * p.cols]
        r0 += p.rows
        c0 += p.cols
    return MatrixComposition(R, C, tuple(out))


def _decompose(a: MatrixComposition) -> Word:
    if a.rows == 0:
        return ()
    m, n, e = a.rows, a.cols, a.entries
    last_col = [max(c for c in range(n) if e[r * n + c]) for r in range(m)]
    last_row = [max(r for r in range(m) if e[r * n + c]) for c in range(n)]
    blocks = []
    r0 = c0 = 0
    while r0 < m:
        r1, c1 = r0 + 1, c0 + 1
        while True:
            nc = max(c1, max(last_col[r] for r in range(r0, r1)) + 1)
            nr = max(r1, max(last_row[c] for c in range(c0, nc)) + 1)
            if (nr, nc) == (r1, c1):
                break
            r1, c1 = nr, nc
        if r0 == 0 and r1 == m:
            blocks.append(a)
        else:
            sub = tuple(e[r * n + c] for r in range(r0, r1) for c in range(c0, c1))
            blocks.append(MatrixComposition(r1 - r0, c1 - c0, sub))
        r0, c0 = r1, c1
    for b in blocks:
        b._blocks = (b,)
    return tuple(blocks)


def block_decompose(a: MatrixComposition) -> Word:
    """The unique maximal factorisation ``a = diag(u1, ..., ul)`` into connected blocks."""
    return a.blocks


def length(a: MatrixComposition) -> int:
    return len(a.blocks)


def is_connected(a: MatrixComposition) -> bool:
    return len(a.blocks) == 1


def from_word(word: Iterable[MatrixComposition]) -> MatrixComposition:
    return diag_concat(*word)


def make_word(letters: Iterable[MatrixComposition]) -> Word:
    word = tuple(letters)
    for u in word:
        if not u.is_connected():
            raise DomainError(f"word letter {u} is not a connected composition")
    return word


def format_word(word: Word) -> str:
    return "".join(format_composition(u) for u in word) if word else "()"


# -- orders ---------------------------------------------------------------

def vectorize(a: MatrixComposition) -> tuple[int, ...]:
    """Column-major reading of the grid."""
    return tuple(a.entries[r * a.cols + c] for c in range(a.cols) for r in range(a.rows))


def connected_key(a: MatrixComposition) -> tuple:
    if a._ckey is None:
        a._ckey = (a.rows, a.cols, tuple(deglex_key(x) for x in vectorize(a)))
    return a._ckey


def _require_letter(a: MatrixComposition) -> None:
    if a.rows and not a.is_connected():
        raise DomainError(f"{a} is not connected")


def cmp_connected(a: MatrixComposition, b: MatrixComposition) -> Ordering:
    _require_letter(a)
    _require_letter(b)
    return Ordering.of(connected_key(a), connected_key(b))


def word_key(word: Word) -> tuple:
    """Lexicographic key on words; a proper prefix sorts first."""
    return tuple(connected_key(u) for u in word)


def grlex_key(a: MatrixComposition) -> tuple:
    """Graded-lexicographic key of a composition read as its block word."""
    if a._gkey is None:
        blocks = a.blocks
        a._gkey = (len(blocks), word_key(blocks))
    return a._gkey


def cmp_lex(u: Word, v: Word) -> Ordering:
    return Ordering.of(word_key(u), word_key(v))


def cmp_grlex(u: Word, v: Word) -> Ordering:
    return Ordering.of((len(u), word_key(u)), (len(v), word_key(v)))


# -- classical integer compositions ---------------------------------------

@lru_cache(maxsize=None)
def int_compositions(n: int) -> tuple[IntComposition, ...]:
    """All compositions of ``n``; the empty tuple is the only composition of 0."""
    if n == 0:
        return ((),)
    out = []
    for k in range(n):
        for cuts in combinations(range(1, n), k):
            bounds = (0,) + cuts + (n,)
            out.append(tuple(bounds[i + 1] - bounds[i] for i in range(k + 1)))
    return tuple(out)


@lru_cache(maxsize=None)
def int_compositions_of_length(n: int, k: int) -> tuple[IntComposition, ...]:
    return tuple(I for I in int_compositions(n) if len(I) == k)


def check_int_composition(parts: Sequence[int], total: int) -> IntComposition:
    parts = tuple(int(p) for p in parts)
    if any(p < 1 for p in parts) or sum(parts) != total:
        raise DomainError(f"{parts} is not a composition of {total}")
    return parts


def groups(parts: IntComposition) -> Iterator[range]:
    start = 0
    for p in parts:
        yield range(start, start + p)
        start += p
