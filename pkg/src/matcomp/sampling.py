"""Deterministic pools of compositions and seeded sampling from them."""
from __future__ import annotations

import random
from functools import lru_cache
from itertools import combinations_with_replacement

from .composition import MatrixComposition, grlex_key
from .monoid import letter_code


@lru_cache(maxsize=None)
def monomials_of_degree(k: int, d: int) -> tuple[int, ...]:
    """Codes of all monomials of degree ``k`` on letters ``1..d``."""
    return tuple(sum(letter_code(i) for i in combo)
                 for combo in combinations_with_replacement(range(1, d + 1), k))


@lru_cache(maxsize=None)
def weight_matrices(m: int, n: int, total: int) -> tuple[tuple[int, ...], ...]:
    """Row-major ``m x n`` non-negative integer matrices summing to ``total``
    with no zero row or column."""
    cells = m * n
    out = []

    def rec(i: int, left: int, acc: list) -> None:
        if i == cells - 1:
            acc.append(left)
            out.append(tuple(acc))
            acc.pop()
            return
        for v in range(left + 1):
            acc.append(v)
            rec(i + 1, left - v, acc)
            acc.pop()

    if cells == 0 or total < max(m, n):
        return ()
    rec(0, total, [])
    return tuple(w for w in out
                 if all(any(w[r * n:(r + 1) * n]) for r in range(m))
                 and all(any(w[c::n]) for c in range(n)))


def _fillings(weights: tuple[int, ...], d: int):
    choices = [monomials_of_degree(w, d) for w in weights]
    out = [()]
    for ch in choices:
        out = [prefix + (c,) for prefix in out for c in ch]
    return out


@lru_cache(maxsize=None)
def compositions_of_degree(k: int, d: int) -> tuple[MatrixComposition, ...]:
    """All compositions of total degree exactly ``k`` over ``d`` letters, grlex-sorted."""
    if k == 0:
        return ()
    out = []
    for m in range(1, k + 1):
        for n in range(1, k + 1):
            for w in weight_matrices(m, n, k):
                for entries in _fillings(w, d):
                    out.append(MatrixComposition(m, n, entries))
    out.sort(key=grlex_key)
    return tuple(out)


def pool(max_degree: int, d: int, *, min_degree: int = 1, max_blocks: int | None = None,
         max_rows: int | None = None, max_cols: int | None = None) -> tuple[MatrixComposition, ...]:
    """All compositions with degree in ``[min_degree, max_degree]`` passing the size filters."""
    out = []
    for k in range(min_degree, max_degree + 1):
        for a in compositions_of_degree(k, d):
            if max_blocks is not None and len(a.blocks) > max_blocks:
                continue
            if max_rows is not None and a.rows > max_rows:
                continue
            if max_cols is not None and a.cols > max_cols:
                continue
            out.append(a)
    return tuple(out)


class Sampler:
    """Seeded uniform draws from a fixed, deterministically ordered pool."""

    def __init__(self, seed: int):
        self.rng = random.Random(seed)

    def one(self, items):
        return items[self.rng.randrange(len(items))]

    def many(self, items, count: int) -> list:
        return [self.one(items) for _ in range(count)]

    def pairs(self, items, count: int) -> list:
        return [(self.one(items), self.one(items)) for _ in range(count)]

    def rational(self, lo: int = -3, hi: int = 3, den: int = 3):
        from fractions import Fraction
        return Fraction(self.rng.randint(lo * den, hi * den), self.rng.randint(1, den))
