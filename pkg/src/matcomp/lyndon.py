"""Lyndon words over connected compositions, CFL factorisation and free generators.

Words are tuples of connected compositions ordered by :func:`connected_key`.
A :class:`GeneratorPolynomial` is a polynomial in commuting symbols ``B_w``
indexed by Lyndon words; its monomials are stored as the non-increasing tuple
of their Lyndon factors, which is exactly the CFL factorisation of the
concatenated word.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .algebra import HElement, Scalar, _format_terms, _Sparse, add_into, as_scalar, element, leading_term
from .composition import (
    MatrixComposition,
    Word,
    connected_key,
    diag_concat,
    format_composition,
    grlex_key,
    word_key,
)
from .errors import DomainError
from .products import Product, as_product, multiply, multiply_many


def _check_word(w) -> Word:
    w = tuple(w)
    for u in w:
        if not isinstance(u, MatrixComposition) or not u.is_connected():
            raise DomainError(f"word letter {u} is not a connected composition")
    return w


def is_lyndon(w: Sequence[MatrixComposition]) -> bool:
    """Nonempty and strictly smaller than each of its proper suffixes."""
    w = _check_word(w)
    if not w:
        return False
    key = word_key(w)
    return all(key < word_key(w[i:]) for i in range(1, len(w)))


def cfl_factorize(u: Sequence[MatrixComposition]) -> tuple[Word, ...]:
    """Chen-Fox-Lyndon factorisation by Duval's algorithm."""
    u = _check_word(u)
    if not u:
        raise DomainError("the empty word has no CFL factorisation")
    keys = [connected_key(x) for x in u]
    n = len(u)
    out = []
    i = 0
    while i < n:
        j, k = i + 1, i
        while j < n and keys[k] <= keys[j]:
            k = i if keys[k] < keys[j] else k + 1
            j += 1
        while i <= k:
            out.append(u[i:i + j - k])
            i += j - k
    return tuple(out)


def b_of_lyndon(w: Sequence[MatrixComposition]) -> MatrixComposition:
    w = _check_word(w)
    if not is_lyndon(w):
        raise DomainError(f"{''.join(map(format_composition, w))} is not a Lyndon word")
    return diag_concat(*w)


@lru_cache(maxsize=1 << 15)
def _b_of_word(p: Product, u: Word) -> HElement:
    if not u:
        return HElement.one()
    return multiply_many(p, *(diag_concat(*f) for f in cfl_factorize(u)))


def b_of_word(product, u: Sequence[MatrixComposition]) -> HElement:
    """Product of ``B_w`` over the CFL factors of ``u``; the empty word gives the unit."""
    return _b_of_word(as_product(product), _check_word(u))


# -- generator polynomials ------------------------------------------------------

def _monomial_key(words: Iterable[Sequence[MatrixComposition]]) -> tuple[Word, ...]:
    ws = [_check_word(w) for w in words]
    for w in ws:
        if not is_lyndon(w):
            raise DomainError(f"generator index {''.join(map(format_composition, w))} is not Lyndon")
    return tuple(sorted(ws, key=word_key, reverse=True))


def _format_word_symbol(w: Word) -> str:
    return "B(" + "".join(format_composition(x) for x in w) + ")"


def format_monomial(key: tuple[Word, ...]) -> str:
    if not key:
        return "1"
    parts = []
    ordered = list(reversed(key))  # increasing order reads like the tables
    i = 0
    while i < len(ordered):
        j = i
        while j < len(ordered) and ordered[j] == ordered[i]:
            j += 1
        sym = _format_word_symbol(ordered[i])
        parts.append(sym if j - i == 1 else f"{sym}^{j - i}")
        i = j
    return "*".join(parts)


class GeneratorPolynomial(_Sparse):
    """Rational polynomial in commuting generators ``B_w`` (``w`` Lyndon)."""

    __slots__ = ()

    def _check_key(self, k) -> None:
        if not isinstance(k, tuple) or _monomial_key(k) != k:
            raise TypeError("monomial keys must be non-increasing tuples of Lyndon words")

    @classmethod
    def from_products(cls, terms: Iterable[tuple[Scalar, Sequence[MatrixComposition]]]) -> "GeneratorPolynomial":
        """Build from ``(coefficient, [B-argument compositions])`` pairs.

        Each argument is read as the block word of the composition and must be Lyndon.
        """
        out: dict = {}
        for c, comps in terms:
            key = _monomial_key(a.blocks for a in comps)
            add_into(out, {key: as_scalar(c)})
        return cls(out, _trusted=True)

    def items(self) -> list[tuple[tuple[Word, ...], Scalar]]:
        return sorted(self._terms.items(), key=lambda kv: grlex_key(_concat(kv[0])), reverse=True)

    def __iter__(self):
        return iter(self.items())

    def degree_words(self) -> list[Word]:
        return [sum(k, ()) for k in self._terms]

    def __str__(self) -> str:
        return _format_terms((c, format_monomial(k)) for k, c in self.items())

    def __repr__(self) -> str:
        return f"GeneratorPolynomial({str(self)!r})"


def _concat(key: tuple[Word, ...]) -> MatrixComposition:
    return diag_concat(*(x for w in key for x in w))


def rewrite_in_generators(product, x) -> GeneratorPolynomial:
    """Express ``x`` as a polynomial in the generators ``B_w``.

    Repeatedly removes the grlex-leading term ``c a`` of the residual using
    ``B^m_a``, whose leading monomial is ``a``.  The leading coefficient of
    ``B^m_a`` is the number of ways the CFL factors shuffle back into ``a`` and
    need not be 1, so the step divides by it.
    """
    p = as_product(product)
    residual = dict(element(x).terms)
    out: dict = {}
    while residual:
        a = max(residual, key=grlex_key)
        c = residual[a]
        u = a.blocks
        key = cfl_factorize(u) if u else ()
        b = _b_of_word(p, u)
        lead, kappa = leading_term(b)
        if lead != a:
            raise AssertionError(f"leading monomial of B^{p.value}_{a} is {lead}")
        coeff = Fraction(c) / kappa
        coeff = coeff.numerator if coeff.denominator == 1 else coeff
        add_into(out, {key: coeff})
        add_into(residual, b.terms, -coeff)
    return GeneratorPolynomial(out, _trusted=True)


def eval_generator_poly(product, P: GeneratorPolynomial) -> HElement:
    """Substitute ``B_w = diag(w)`` and multiply with the given product."""
    p = as_product(product)
    out: dict = {}
    for key, c in P.terms.items():
        add_into(out, multiply_many(p, *(diag_concat(*w) for w in key)).terms, c)
    return HElement(out, _trusted=True)


def lyndon_transport(src, dst, x) -> HElement:
    """The algebra isomorphism fixing every ``B_w``, from ``(H, src)`` to ``(H, dst)``."""
    s, d = as_product(src), as_product(dst)
    x = element(x)
    if s == d:
        return x
    return eval_generator_poly(d, rewrite_in_generators(s, x))


def lyndon_words_up_to(letters: Sequence[MatrixComposition], max_len: int) -> list[Word]:
    """All Lyndon words of length <= ``max_len`` over the given letters (brute force)."""
    from itertools import product as cartesian

    letters = sorted(set(letters), key=connected_key)
    out = []
    for n in range(1, max_len + 1):
        for w in cartesian(letters, repeat=n):
            if is_lyndon(w):
                out.append(tuple(w))
    return out


def clear_caches() -> None:
    _b_of_word.cache_clear()
