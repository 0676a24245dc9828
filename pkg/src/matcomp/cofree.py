"""Projections onto connected compositions, cofree extension and the Log/Exp isomorphisms.

``(H, Delta)`` is cofree on the connected compositions, so a coalgebra map into
``H`` is determined by its projection ``pi o Psi``.  ``Log_m`` is the map induced
by ``pi o e_m`` and carries ``(H, m, Delta)`` onto ``(H, bsh, Delta)``.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Callable

from .algebra import HElement, add_into, element
from .coalgebra import eulerian_idempotent, split_groups
from .composition import EMPTY, MatrixComposition, diag_concat
from .errors import ContractViolation, DomainError
from .products import Product, as_product


def pi_connected(x) -> HElement:
    """Keep exactly the connected (one-block) terms."""
    return element(x).filter(lambda a: a.rows > 0 and len(a.blocks) == 1)


def pi_blockcount(k: int, x) -> HElement:
    if k < 1:
        raise DomainError("block count must be positive")
    return element(x).filter(lambda a: a.rows > 0 and len(a.blocks) == k)


def _checked(psi: Callable, cache: dict, a: MatrixComposition) -> HElement:
    hit = cache.get(a)
    if hit is None:
        hit = element(psi(a))
        for b in hit.terms:
            if b.rows == 0 or len(b.blocks) != 1:
                raise ContractViolation(f"psi({a}) contains the non-connected term {b}")
        cache[a] = hit
    return hit


def _diag_of_sums(parts: list[HElement]) -> dict:
    acc: dict = {EMPTY: 1}
    for part in parts:
        nxt: dict = {}
        for a, c in acc.items():
            for b, d in part.terms.items():
                add_into(nxt, {diag_concat(a, b): c * d})
        acc = nxt
    return acc


def cofree_extend(psi: Callable[[MatrixComposition], HElement], x, *, _cache: dict | None = None) -> HElement:
    """The coalgebra map ``Psi`` with ``pi o Psi = psi`` (on the augmentation ideal).

    ``Psi(a) = counit(a) e + sum_n sum diag(psi(g_1), ..., psi(g_n))`` over all
    cuts of the block word of ``a`` into ``n`` nonempty consecutive groups.
    """
    cache: dict = {} if _cache is None else _cache
    out: dict = {}
    for a, c in element(x).terms.items():
        if a.rows == 0:
            add_into(out, {EMPTY: 1}, c)
            continue
        for n in range(1, len(a.blocks) + 1):
            for gs in split_groups(a, n):
                add_into(out, _diag_of_sums([_checked(psi, cache, g) for g in gs]), c)
    return HElement(out, _trusted=True)


@lru_cache(maxsize=1 << 15)
def _log_psi(p: Product, a: MatrixComposition) -> HElement:
    return pi_connected(eulerian_idempotent(p, a))


@lru_cache(maxsize=1 << 15)
def _log_basis(p: Product, a: MatrixComposition) -> HElement:
    return cofree_extend(lambda b: _log_psi(p, b), HElement.basis(a))


def log_map(product, x) -> HElement:
    """``Log_m``: the coalgebra map induced by ``pi o e_m``; an isomorphism onto the block shuffle."""
    p = as_product(product)
    return element(x).map_basis(lambda a: _log_basis(p, a))


def exp_map(product, x) -> HElement:
    """Inverse of :func:`log_map`.

    ``Log = id + N`` where ``N`` strictly lowers the block count, so the
    iteration ``y <- x - N y`` reaches the exact inverse after at most
    ``max block count`` steps.
    """
    p = as_product(product)
    x = element(x)
    bound = max((len(a.blocks) for a in x.terms), default=0) + 2
    y = x
    for _ in range(bound + 1):
        r = x - log_map(p, y)
        if not r:
            return y
        y = y + r
    raise AssertionError("exp_map did not converge; Log is not unipotent on this input")


def hopf_transport(src, dst, x) -> HElement:
    """Hopf isomorphism ``(H, src, Delta) -> (H, dst, Delta)`` through the block shuffle."""
    s, d = as_product(src), as_product(dst)
    x = element(x)
    if s == d:
        return x
    if d == Product.BSH:
        return log_map(s, x)
    if s == Product.BSH:
        return exp_map(d, x)
    return exp_map(d, log_map(s, x))


def clear_caches() -> None:
    _log_psi.cache_clear()
    _log_basis.cache_clear()
