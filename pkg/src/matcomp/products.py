"""The two-parameter shuffle, the two-parameter quasi-shuffle and the block shuffle.

Basis products are computed by the enumeration kernels in :mod:`matcomp.kernels`
on packed codes and cached per pair of compositions.  The matrix-action
formulation lives in :mod:`matcomp.encodings` and is only used as an oracle.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Callable

from . import config, kernels
from .algebra import HElement, add_into, element
from .composition import EMPTY, MatrixComposition, diag_concat
from .errors import DomainError, SizeCapExceeded


class Product(str, enum.Enum):
    SH2 = "sh2"
    QSH = "qsh"
    BSH = "bsh"

    def __str__(self) -> str:
        return self.value


def as_product(p) -> Product:
    try:
        return Product(str(p).lower())
    except ValueError:
        raise DomainError(f"unknown product {p!r}; expected sh2, qsh or bsh") from None


@dataclass(frozen=True)
class Interleaving:
    """A monotone assignment of ``m + s`` source indices onto ``1..j``.

    ``assignment[k]`` is the (1-based) output position of source index ``k+1``;
    the first ``m`` sources come from the left operand.
    """

    kind: str  # "shuffle" or "quasishuffle"
    m: int
    s: int
    assignment: tuple[int, ...]

    @property
    def j(self) -> int:
        return max(self.assignment)

    def is_valid(self) -> bool:
        q, m = self.assignment, self.m
        if len(q) != m + self.s:
            return False
        left, right = q[:m], q[m:]
        mono = all(x < y for x, y in zip(left, left[1:])) and all(x < y for x, y in zip(right, right[1:]))
        onto = set(q) == set(range(1, self.j + 1))
        bij = len(set(q)) == len(q)
        return mono and onto and (bij or self.kind == "quasishuffle")

    def row_table(self) -> tuple:
        """Kernel table: for each output position, the merged source pair ``(i, j)``."""
        out = [[-1, -1] for _ in range(self.j)]
        for k, x in enumerate(self.assignment):
            if k < self.m:
                out[x - 1][0] = k
            else:
                out[x - 1][1] = k - self.m
        return tuple(tuple(p) for p in out)


@lru_cache(maxsize=None)
def enumerate_shuffles(m: int, s: int) -> tuple[Interleaving, ...]:
    """All ``C(m+s, m)`` shuffles in lexicographic order of the left positions."""
    if m < 0 or s < 0:
        raise DomainError("negative operand size")
    out = []
    n = m + s
    for left in combinations(range(1, n + 1), m):
        right = tuple(x for x in range(1, n + 1) if x not in left)
        out.append(Interleaving("shuffle", m, s, left + right))
    return tuple(out)


def _qsh_paths(m: int, s: int) -> list[tuple[tuple[int, int], ...]]:
    # each step consumes a left index, a right index, or one of each (a merge)
    if m == 0 and s == 0:
        return [()]
    out = []
    if m and s:
        out += [p + ((m - 1, s - 1),) for p in _qsh_paths(m - 1, s - 1)]
    if m:
        out += [p + ((m - 1, -1),) for p in _qsh_paths(m - 1, s)]
    if s:
        out += [p + ((-1, s - 1),) for p in _qsh_paths(m, s - 1)]
    return out


@lru_cache(maxsize=None)
def _qsh_tables(m: int, s: int) -> tuple[tuple[tuple[int, int], ...], ...]:
    return tuple(sorted(_qsh_paths(m, s), key=lambda p: (-len(p), p)))


@lru_cache(maxsize=None)
def enumerate_quasi_shuffles(m: int, s: int) -> tuple[Interleaving, ...]:
    """All monotone surjections, longest (``j = m+s``) first."""
    out = []
    for path in _qsh_tables(m, s):
        q = [0] * (m + s)
        for x, (i, k) in enumerate(path, start=1):
            if i >= 0:
                q[i] = x
            if k >= 0:
                q[m + k] = x
        out.append(Interleaving("quasishuffle", m, s, tuple(q)))
    return tuple(out)


@lru_cache(maxsize=None)
def _shuffle_tables(m: int, s: int) -> tuple[tuple[int, ...], ...]:
    tables = []
    for q in enumerate_shuffles(m, s):
        src = [0] * (m + s)
        for k, x in enumerate(q.assignment):
            src[x - 1] = k
        tables.append(tuple(src))
    return tuple(tables)


def shuffle_count(a: MatrixComposition, b: MatrixComposition) -> int:
    return comb(a.rows + b.rows, a.rows) * comb(a.cols + b.cols, a.cols)


def delannoy(m: int, s: int) -> int:
    return sum(comb(m, k) * comb(s, k) * 2**k for k in range(min(m, s) + 1))


def quasi_shuffle_count(a: MatrixComposition, b: MatrixComposition) -> int:
    return delannoy(a.rows, b.rows) * delannoy(a.cols, b.cols)


def _guard(what: str, count: int) -> None:
    cap = config.max_terms()
    if count > cap:
        raise SizeCapExceeded(what, count, cap)


# -- basis products --------------------------------------------------------

@lru_cache(maxsize=1 << 16)
def _sh2_basis(a: MatrixComposition, b: MatrixComposition) -> dict:
    m, n, s, t = a.rows, a.cols, b.rows, b.cols
    table = kernels.shuffle_product(m, n, a.entries, s, t, b.entries,
                                    _shuffle_tables(m, s), _shuffle_tables(n, t))
    R, C = m + s, n + t
    return {MatrixComposition(R, C, e): c for e, c in table.items()}


@lru_cache(maxsize=1 << 16)
def _qsh_basis(a: MatrixComposition, b: MatrixComposition) -> dict:
    table = kernels.quasi_shuffle_product(a.rows, a.cols, a.entries, b.rows, b.cols, b.entries,
                                          _qsh_tables(a.rows, b.rows), _qsh_tables(a.cols, b.cols))
    return {MatrixComposition(r, c, e): k for (r, c, e), k in table.items()}


def word_shuffle(u: tuple, v: tuple) -> dict:
    """Classical shuffle of two words, as ``{word: multiplicity}``."""
    p, q = len(u), len(v)
    out: dict = {}
    for left in combinations(range(p + q), p):
        lset = set(left)
        iu = iv = 0
        w = []
        for x in range(p + q):
            if x in lset:
                w.append(u[iu])
                iu += 1
            else:
                w.append(v[iv])
                iv += 1
        w = tuple(w)
        out[w] = out.get(w, 0) + 1
    return out


@lru_cache(maxsize=1 << 16)
def _bsh_basis(a: MatrixComposition, b: MatrixComposition) -> dict:
    out: dict = {}
    for w, c in word_shuffle(a.blocks, b.blocks).items():
        x = diag_concat(*w)
        out[x] = out.get(x, 0) + c
    return out


def shuffle2(a: MatrixComposition, b: MatrixComposition) -> HElement:
    """Two-parameter shuffle of two compositions."""
    if a.rows == 0:
        return HElement.basis(b)
    if b.rows == 0:
        return HElement.basis(a)
    _guard("two-parameter shuffle", shuffle_count(a, b))
    return HElement(dict(_sh2_basis(a, b)), _trusted=True)


def quasi_shuffle(a: MatrixComposition, b: MatrixComposition) -> HElement:
    """Two-parameter quasi-shuffle; merged cells are multiplied in the monoid."""
    if a.rows == 0:
        return HElement.basis(b)
    if b.rows == 0:
        return HElement.basis(a)
    _guard("two-parameter quasi-shuffle", quasi_shuffle_count(a, b))
    return HElement(dict(_qsh_basis(a, b)), _trusted=True)


def block_shuffle(a: MatrixComposition, b: MatrixComposition) -> HElement:
    """Shuffle of the connected blocks of ``a`` and ``b``."""
    if a.rows == 0:
        return HElement.basis(b)
    if b.rows == 0:
        return HElement.basis(a)
    _guard("block shuffle", comb(len(a) + len(b), len(a)))
    return HElement(dict(_bsh_basis(a, b)), _trusted=True)


_BASIS: dict[Product, Callable] = {
    Product.SH2: _sh2_basis,
    Product.QSH: _qsh_basis,
    Product.BSH: _bsh_basis,
}
_COUNT: dict[Product, Callable] = {
    Product.SH2: shuffle_count,
    Product.QSH: quasi_shuffle_count,
    Product.BSH: lambda a, b: comb(len(a) + len(b), len(a)),
}


def basis_product(product, a: MatrixComposition, b: MatrixComposition) -> HElement:
    p = as_product(product)
    return {Product.SH2: shuffle2, Product.QSH: quasi_shuffle, Product.BSH: block_shuffle}[p](a, b)


def multiply(product, x, y) -> HElement:
    """Bilinear extension of a product to :class:`HElement` operands."""
    p = as_product(product)
    x, y = element(x), element(y)
    basis, count = _BASIS[p], _COUNT[p]
    cap = config.max_terms()
    out: dict = {}
    for a, c in x.terms.items():
        for b, d in y.terms.items():
            if a.rows == 0:
                add_into(out, {b: 1}, c * d)
            elif b.rows == 0:
                add_into(out, {a: 1}, c * d)
            else:
                n = count(a, b)
                if n > cap:
                    raise SizeCapExceeded(f"{p.value} product", n, cap)
                add_into(out, basis(a, b), c * d)
    return HElement(out, _trusted=True)


def multiply_many(product, *factors) -> HElement:
    acc = HElement.basis(EMPTY)
    for f in factors:
        acc = multiply(product, acc, f)
    return acc


def power(product, x, k: int) -> HElement:
    if k < 0:
        raise DomainError("negative power")
    return multiply_many(product, *([x] * k))


def clear_caches() -> None:
    for f in (_sh2_basis, _qsh_basis, _bsh_basis):
        f.cache_clear()
