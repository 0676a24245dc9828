"""One-hot matrix encodings of shuffles, quasi-shuffles, block shuffles and merges.

This module is an independent second implementation used as an oracle: the
index sets are produced by brute-force filtering of 0/1 matrices and products
are evaluated as ``P @ diag(a, b) @ Q.T`` over integers.  Since monoid codes are
additive, an integer matrix product with one-hot factors is exactly the
monoid-valued row/column action.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product as cartesian
from math import factorial, prod

import numpy as np

from .algebra import HElement, add_into
from .composition import MatrixComposition, diag_concat
from .errors import DomainError


def _is_increasing(xs) -> bool:
    return all(x < y for x, y in zip(xs, xs[1:]))


def _one_hot(targets: tuple[int, ...], height: int) -> np.ndarray:
    """Matrix whose column ``k`` is the unit vector ``e_{targets[k]}`` (0-based)."""
    M = np.zeros((height, len(targets)), dtype=object)
    for k, x in enumerate(targets):
        M[x, k] = 1
    return M


@lru_cache(maxsize=None)
def sh_matrices(m: int, s: int) -> tuple[np.ndarray, ...]:
    """The permutation matrices of size ``m+s`` whose columns rise on both parts."""
    n = m + s
    out = []
    for targets in cartesian(range(n), repeat=n):
        if len(set(targets)) == n and _is_increasing(targets[:m]) and _is_increasing(targets[m:]):
            out.append(_one_hot(targets, n))
    return tuple(out)


@lru_cache(maxsize=None)
def qsh_matrices(m: int, s: int) -> tuple[np.ndarray, ...]:
    """All ``j x (m+s)`` one-hot surjection matrices with rising columns on both parts."""
    n = m + s
    out = []
    for j in range(max(m, s), n + 1):
        for targets in cartesian(range(j), repeat=n):
            if set(targets) == set(range(j)) and _is_increasing(targets[:m]) and _is_increasing(targets[m:]):
                out.append(_one_hot(targets, j))
    return tuple(out)


def _block_positions(sizes: list[int], order: tuple[int, ...]) -> np.ndarray:
    # order[k] = source block placed at output slot k
    starts = np.cumsum([0] + sizes)
    total = int(starts[-1])
    M = np.zeros((total, total), dtype=object)
    r = 0
    for src in order:
        c, w = int(starts[src]), sizes[src]
        M[r:r + w, c:c + w] = np.eye(w, dtype=int)
        r += w
    return M


def bsh_matrix(sigma_inverse: tuple[int, ...], sizes: list[int]) -> np.ndarray:
    """Block shuffle action matrix: output slot ``k`` receives source block ``sigma_inverse[k]``."""
    return _block_positions(sizes, sigma_inverse)


def _block_shuffle_orders(p: int, q: int):
    n = p + q
    for targets in cartesian(range(n), repeat=n):
        if len(set(targets)) == n and _is_increasing(targets[:p]) and _is_increasing(targets[p:]):
            inv = [0] * n
            for src, x in enumerate(targets):
                inv[x] = src
            yield tuple(inv)


def _grid(a: MatrixComposition) -> np.ndarray:
    return np.array(a.entries, dtype=object).reshape(a.rows, a.cols)


def _to_composition(M: np.ndarray) -> MatrixComposition:
    r, c = M.shape
    return MatrixComposition.from_codes(r, c, [int(x) for x in M.flat])


def act(P: np.ndarray, a: MatrixComposition, Q: np.ndarray) -> MatrixComposition:
    """``P a Q^T`` with the monoid product realised as integer addition of codes."""
    return _to_composition(P.dot(_grid(a)).dot(Q.T))


def product_via_matrix_encoding(kind, a: MatrixComposition, b: MatrixComposition) -> HElement:
    kind = str(getattr(kind, "value", kind))
    if a.rows == 0 or b.rows == 0:
        raise DomainError("matrix encodings are defined for nonempty operands only")
    D = diag_concat(a, b)
    out: dict = {}
    if kind in ("sh2", "shuffle2"):
        rows, cols = sh_matrices(a.rows, b.rows), sh_matrices(a.cols, b.cols)
        for P in rows:
            for Q in cols:
                add_into(out, {act(P, D, Q): 1})
    elif kind in ("qsh", "quasishuffle"):
        rows, cols = qsh_matrices(a.rows, b.rows), qsh_matrices(a.cols, b.cols)
        for P in rows:
            for Q in cols:
                add_into(out, {act(P, D, Q): 1})
    elif kind in ("bsh", "blockshuffle"):
        u, v = a.blocks, b.blocks
        rsizes = [x.rows for x in u + v]
        csizes = [x.cols for x in u + v]
        for inv in _block_shuffle_orders(len(u), len(v)):
            add_into(out, {act(bsh_matrix(inv, rsizes), D, bsh_matrix(inv, csizes)): 1})
    else:
        raise DomainError(f"unknown product kind {kind!r}")
    return HElement(out, _trusted=True)


# -- merge encodings ---------------------------------------------------------

@lru_cache(maxsize=None)
def brew_matrices(v: int, length: int) -> tuple[np.ndarray, ...]:
    """All ``v x length`` one-hot matrices with weakly rising, gap-free column targets."""
    out = []
    for targets in cartesian(range(v), repeat=length):
        if targets[0] == 0 and targets[-1] == v - 1 and \
                all(0 <= y - x <= 1 for x, y in zip(targets, targets[1:])):
            out.append(_one_hot(targets, v))
    return tuple(out)


def brew_composition(M: np.ndarray) -> tuple[int, ...]:
    return tuple(int(x) for x in M.sum(axis=1))


def brew_factorial(M: np.ndarray) -> int:
    return prod(factorial(k) for k in brew_composition(M))


def brew_of(parts: tuple[int, ...]) -> np.ndarray:
    targets = [i for i, p in enumerate(parts) for _ in range(p)]
    return _one_hot(tuple(targets), len(parts))


def merge_via_brew(a: MatrixComposition, I: tuple[int, ...], J: tuple[int, ...]) -> MatrixComposition:
    return act(brew_of(I), a, brew_of(J))


def phi_via_brew(a: MatrixComposition) -> HElement:
    """Hoffman map as a sum over brew matrices with weight ``1/(U! V!)``."""
    if a.rows == 0:
        return HElement.basis(a)
    out: dict = {}
    for u in range(1, a.rows + 1):
        for U in brew_matrices(u, a.rows):
            for v in range(1, a.cols + 1):
                for V in brew_matrices(v, a.cols):
                    add_into(out, {act(U, a, V): Fraction(1, brew_factorial(U) * brew_factorial(V))})
    return HElement(out, _trusted=True)


def brew_count(n: int) -> int:
    return sum(len(brew_matrices(v, n)) for v in range(1, n + 1))

