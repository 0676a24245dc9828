"""Deconcatenation coproduct, antipode, convolution and the Eulerian idempotent."""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Callable, Union

from .algebra import HElement, HTensor, add_into, counit, element
from .composition import EMPTY, MatrixComposition, diag_concat, groups, int_compositions, int_compositions_of_length
from .errors import DomainError
from .products import Product, as_product, multiply, multiply_many

# a linear endomap of H, given on basis compositions
BasisMap = Callable[[MatrixComposition], HElement]
Endomap = Callable[[HElement], HElement]
Input = Union[HElement, MatrixComposition]

__all__ = [
    "coproduct", "counit", "reduced_coproduct", "iterated_reduced_coproduct",
    "antipode", "convolve", "identity", "unit_counit", "linear", "reduced_convolution_power",
    "eulerian_idempotent", "convolution_exponential", "eulerian_decomposition",
    "tensor_apply", "tensor_multiply", "split_groups",
]


def linear(f: BasisMap) -> Endomap:
    """Linear extension of a basis-level map (also accepts bare compositions)."""
    def apply(x: Input) -> HElement:
        return element(x).map_basis(f)
    apply.basis = f  # type: ignore[attr-defined]
    return apply


def _basis_of(f) -> BasisMap:
    return getattr(f, "basis", None) or (lambda a: element(f(HElement.basis(a))))


identity: Endomap = linear(HElement.basis)
unit_counit: Endomap = linear(lambda a: HElement.basis(EMPTY) if a.rows == 0 else HElement.zero())


def _splits(a: MatrixComposition):
    blocks = a.blocks
    for k in range(len(blocks) + 1):
        yield diag_concat(*blocks[:k]), diag_concat(*blocks[k:])


def coproduct(x: Input) -> HTensor:
    """Deconcatenation of block words: ``sum_k diag(u_1..u_k) (x) diag(u_k+1..u_l)``."""
    out: dict = {}
    for a, c in element(x).terms.items():
        add_into(out, {pair: 1 for pair in _splits(a)}, c)
    return HTensor(out, _trusted=True)


def reduced_coproduct(x: Input) -> HTensor:
    out: dict = {}
    for a, c in element(x).terms.items():
        blocks = a.blocks
        add_into(out, {(diag_concat(*blocks[:k]), diag_concat(*blocks[k:])): 1
                       for k in range(1, len(blocks))}, c)
    return HTensor(out, _trusted=True)


def split_groups(a: MatrixComposition, k: int):
    """All ways of cutting the block word of ``a`` into ``k`` nonempty consecutive groups."""
    blocks = a.blocks
    for I in int_compositions_of_length(len(blocks), k):
        yield tuple(diag_concat(*blocks[g.start:g.stop]) for g in groups(I))


def iterated_reduced_coproduct(n: int, x: Input) -> HTensor:
    """``n``-fold iterated reduced coproduct; the result has ``n + 1`` tensor factors.

    For ``n = 0`` this is the identity on the augmentation ideal (one-factor tensors).
    """
    if n < 0:
        raise DomainError("iteration count must be non-negative")
    out: dict = {}
    for a, c in element(x).terms.items():
        if a.rows == 0:
            continue
        add_into(out, {g: 1 for g in split_groups(a, n + 1)}, c)
    return HTensor(out, _trusted=True)


def tensor_apply(maps, t: HTensor) -> HTensor:
    """``(f_1 (x) ... (x) f_k)(t)`` for basis-level or element-level maps."""
    fs = [_basis_of(f) for f in maps]
    out: dict = {}
    for key, c in t.terms.items():
        if len(key) != len(fs):
            raise DomainError(f"tensor of arity {len(key)} given {len(fs)} maps")
        partial: dict = {(): c}
        for f, a in zip(fs, key):
            nxt: dict = {}
            for k, v in partial.items():
                for b, d in f(a).terms.items():
                    add_into(nxt, {k + (b,): v * d})
            partial = nxt
        add_into(out, partial)
    return HTensor(out, _trusted=True)


def tensor_multiply(product, t: HTensor) -> HElement:
    """``m`` applied to every tensor term (arity >= 1)."""
    out: dict = {}
    for key, c in t.terms.items():
        add_into(out, multiply_many(product, *key).terms, c)
    return HElement(out, _trusted=True)


_antipode_cache: dict = {}


def _antipode_basis(p: Product, a: MatrixComposition) -> HElement:
    key = (p, a)
    hit = _antipode_cache.get(key)
    if hit is not None:
        return hit
    if a.rows == 0:
        res = HElement.one()
    else:
        out: dict = {a: -1}
        blocks = a.blocks
        for k in range(1, len(blocks)):
            left = diag_concat(*blocks[:k])
            right = diag_concat(*blocks[k:])
            add_into(out, multiply(p, _antipode_basis(p, left), right).terms, -1)
        res = HElement(out, _trusted=True)
    _antipode_cache[key] = res
    return res


def antipode(product, x: Input) -> HElement:
    """Antipode via ``S(a) = -a - sum m(S(a') (x) a'')`` over the reduced coproduct."""
    p = as_product(product)
    return element(x).map_basis(lambda a: _antipode_basis(p, a))


def convolve(f, g, product) -> Endomap:
    """Convolution ``m o (f (x) g) o Delta`` of two linear maps."""
    p = as_product(product)
    fb, gb = _basis_of(f), _basis_of(g)

    def basis(a: MatrixComposition) -> HElement:
        out: dict = {}
        for left, right in _splits(a):
            add_into(out, multiply(p, fb(left), gb(right)).terms)
        return HElement(out, _trusted=True)

    return linear(basis)


@lru_cache(maxsize=1 << 15)
def _reduced_power_basis(p: Product, a: MatrixComposition, k: int) -> HElement:
    if k == 0:
        return HElement.one() if a.rows == 0 else HElement.zero()
    if a.rows == 0:
        return HElement.zero()
    out: dict = {}
    for gs in split_groups(a, k):
        add_into(out, multiply_many(p, *gs).terms)
    return HElement(out, _trusted=True)


def reduced_convolution_power(product, k: int, x: Input) -> HElement:
    """``(id - u o counit)^{*k}``; the zeroth power is the convolution unit ``u o counit``."""
    p = as_product(product)
    if k < 0:
        raise DomainError("negative convolution power")
    return element(x).map_basis(lambda a: _reduced_power_basis(p, a, k))


@lru_cache(maxsize=1 << 15)
def _eulerian_basis(p: Product, a: MatrixComposition) -> HElement:
    out: dict = {}
    for k in range(1, len(a.blocks) + 1):
        add_into(out, _reduced_power_basis(p, a, k).terms, Fraction((-1) ** (k - 1), k))
    return HElement(out, _trusted=True)


def eulerian_idempotent(product, x: Input) -> HElement:
    """``sum_k (-1)^(k-1)/k (id - u o counit)^{*k}``, truncated at the block count."""
    p = as_product(product)
    return element(x).map_basis(lambda a: _eulerian_basis(p, a))


def convolution_exponential(product, p_map, x: Input) -> HElement:
    """``sum_k p^{*k}/k!`` for a map with ``p(e) = 0``.

    Such a map is locally nilpotent: ``p^{*k}`` vanishes on compositions with
    fewer than ``k`` blocks, so the series is finite on every input.
    """
    prod_ = as_product(product)
    pb = _basis_of(p_map)
    if pb(EMPTY):
        raise DomainError("the exponent map must vanish on the empty composition")
    cache: dict = {}

    def pv(b: MatrixComposition) -> HElement:
        if b not in cache:
            cache[b] = pb(b)
        return cache[b]

    def basis(a: MatrixComposition) -> HElement:
        out: dict = {}
        if a.rows == 0:
            return HElement.one()
        for k in range(1, len(a.blocks) + 1):
            acc: dict = {}
            for gs in split_groups(a, k):
                add_into(acc, multiply_many(prod_, *(pv(g) for g in gs)).terms)
            add_into(out, acc, Fraction(1, factorial(k)))
        return HElement(out, _trusted=True)

    return element(x).map_basis(basis)


def eulerian_decomposition(product, a: MatrixComposition) -> HElement:
    """``sum_{I} 1/len(I)! m(e(group_1) (x) ... )`` over compositions ``I`` of the block count."""
    p = as_product(product)
    blocks = a.blocks
    out: dict = {}
    if not blocks:
        return HElement.one()
    for I in int_compositions(len(blocks)):
        parts = [eulerian_idempotent(p, diag_concat(*blocks[g.start:g.stop])) for g in groups(I)]
        add_into(out, multiply_many(p, *parts).terms, Fraction(1, factorial(len(I))))
    return HElement(out, _trusted=True)


def clear_caches() -> None:
    _antipode_cache.clear()
    _reduced_power_basis.cache_clear()
    _eulerian_basis.cache_clear()
