"""Sparse exact-rational linear combinations of compositions and of tuples of them."""
from __future__ import annotations

from fractions import Fraction
from math import lcm
from numbers import Rational
from typing import Callable, Iterable, Iterator, Mapping, Union

from .composition import EMPTY, MatrixComposition, format_composition, grlex_key
from .errors import DomainError

Scalar = Union[int, Fraction]


def as_scalar(c) -> Scalar:
    if isinstance(c, bool):
        raise TypeError("booleans are not coefficients")
    if isinstance(c, int):
        return c
    if isinstance(c, Rational):
        f = Fraction(c)
        return f.numerator if f.denominator == 1 else f
    if isinstance(c, str):
        f = Fraction(c)
        return f.numerator if f.denominator == 1 else f
    raise TypeError(f"unsupported coefficient {c!r}; coefficients are exact rationals")


def format_scalar(c: Scalar) -> str:
    f = Fraction(c)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def add_into(target: dict, source: Mapping, scale: Scalar = 1) -> dict:
    """``target += scale * source`` with zero pruning, in place."""
    if scale == 1:
        for k, v in source.items():
            s = target.get(k, 0) + v
            if s:
                target[k] = s
            else:
                target.pop(k, None)
    elif scale:
        for k, v in source.items():
            s = target.get(k, 0) + scale * v
            if s:
                target[k] = s
            else:
                target.pop(k, None)
    return target


def _den(c) -> int:
    return 1 if type(c) is int else c.denominator


def linear_combination(pairs: Iterable[tuple[Scalar, Mapping]]) -> dict:
    """``sum_i c_i * table_i`` as a pruned dict.

    Rational inputs are brought to one common denominator so the inner loop
    runs on integers; this is much faster than accumulating ``Fraction``s.
    """
    pairs = [(c, t) for c, t in pairs if c and t]
    if not pairs:
        return {}
    Lc = lcm(*(_den(c) for c, _ in pairs))
    Lv = lcm(*(_den(v) for _, t in pairs for v in t.values()))
    acc: dict = {}
    get = acc.get
    for c, t in pairs:
        ci = c * Lc if type(c) is int else c.numerator * (Lc // c.denominator)
        if Lv == 1:
            for k, v in t.items():
                acc[k] = get(k, 0) + ci * v
        else:
            for k, v in t.items():
                vi = v * Lv if type(v) is int else v.numerator * (Lv // v.denominator)
                acc[k] = get(k, 0) + ci * vi
    L = Lc * Lv
    out = {}
    if L == 1:
        for k, v in acc.items():
            if v:
                out[k] = v
    else:
        for k, v in acc.items():
            if v:
                f = Fraction(v, L)
                out[k] = f.numerator if f.denominator == 1 else f
    return out


def _format_terms(pairs: Iterable[tuple[Scalar, str]]) -> str:
    out = []
    for c, body in pairs:
        f = Fraction(c)
        neg = f < 0
        mag = -f if neg else f
        text = body if mag == 1 else f"{format_scalar(mag)}*{body}"
        if not out:
            out.append(("-" if neg else "") + text)
        else:
            out.append((" - " if neg else " + ") + text)
    return "".join(out) if out else "0"


class _Sparse:
    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping | None = None, *, _trusted: bool = False):
        if _trusted:
            self._terms = terms
            return
        clean = {}
        if terms:
            for k, v in terms.items():
                self._check_key(k)
                v = as_scalar(v)
                if v:
                    s = clean.get(k, 0) + v
                    if s:
                        clean[k] = s
                    else:
                        clean.pop(k, None)
        self._terms = clean

    def _check_key(self, k) -> None:
        raise NotImplementedError

    @property
    def terms(self) -> Mapping:
        """Read-only view of the coefficient table (unordered, fast)."""
        return self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return not self._terms
        if type(other) is not type(self):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def coefficient(self, key) -> Scalar:
        return self._terms.get(key, 0)

    def _combine(self, other, sign: int):
        if isinstance(other, int) and other == 0:
            return self
        if type(other) is not type(self):
            return NotImplemented
        out = dict(self._terms)
        add_into(out, other._terms, sign)
        return type(self)(out, _trusted=True)

    def __add__(self, other):
        return self._combine(other, 1)

    __radd__ = __add__

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return type(self)({k: -v for k, v in self._terms.items()}, _trusted=True)

    def __rmul__(self, c):
        c = as_scalar(c)
        if not c:
            return type(self)({}, _trusted=True)
        return type(self)({k: c * v for k, v in self._terms.items()}, _trusted=True)

    def __mul__(self, c):
        if isinstance(c, _Sparse):
            return NotImplemented
        return self.__rmul__(c)

    def __truediv__(self, c):
        return self.__rmul__(Fraction(1) / as_scalar(c))


class HElement(_Sparse):
    """A finite rational combination of matrix compositions.

    Iteration yields ``(composition, coefficient)`` pairs in grlex-descending
    order; use :attr:`terms` for unordered, allocation-free access.
    """

    __slots__ = ()

    def _check_key(self, k) -> None:
        if not isinstance(k, MatrixComposition):
            raise TypeError(f"HElement keys must be compositions, got {type(k).__name__}")

    @classmethod
    def basis(cls, a: MatrixComposition, c: Scalar = 1) -> "HElement":
        c = as_scalar(c)
        return cls({a: c} if c else {}, _trusted=True)

    @classmethod
    def zero(cls) -> "HElement":
        return cls({}, _trusted=True)

    @classmethod
    def one(cls) -> "HElement":
        return cls({EMPTY: 1}, _trusted=True)

    def items(self) -> list[tuple[MatrixComposition, Scalar]]:
        return sorted(self._terms.items(), key=lambda kv: grlex_key(kv[0]), reverse=True)

    def __iter__(self) -> Iterator[tuple[MatrixComposition, Scalar]]:
        return iter(self.items())

    def support(self) -> set[MatrixComposition]:
        return set(self._terms)

    def map_basis(self, f: Callable[[MatrixComposition], "HElement"]) -> "HElement":
        """Linear extension of a basis-level map."""
        return HElement(linear_combination((c, f(a)._terms) for a, c in self._terms.items()), _trusted=True)

    def filter(self, keep: Callable[[MatrixComposition], bool]) -> "HElement":
        return HElement({a: c for a, c in self._terms.items() if keep(a)}, _trusted=True)

    def __str__(self) -> str:
        return _format_terms((c, format_composition(a)) for a, c in self.items())

    def __repr__(self) -> str:
        return f"HElement({str(self)!r})"


class HTensor(_Sparse):
    """A finite rational combination of ``arity``-tuples of compositions."""

    __slots__ = ()

    def _check_key(self, k) -> None:
        if not (isinstance(k, tuple) and k and all(isinstance(x, MatrixComposition) for x in k)):
            raise TypeError("HTensor keys must be non-empty tuples of compositions")

    @property
    def arity(self) -> int | None:
        for k in self._terms:
            return len(k)
        return None

    def items(self) -> list[tuple[tuple[MatrixComposition, ...], Scalar]]:
        return sorted(self._terms.items(), key=lambda kv: tuple(grlex_key(x) for x in kv[0]), reverse=True)

    def __iter__(self):
        return iter(self.items())

    def __str__(self) -> str:
        return _format_terms((c, " (x) ".join(format_composition(x) for x in k)) for k, c in self.items())

    def __repr__(self) -> str:
        return f"HTensor({str(self)!r})"


def element(x) -> HElement:
    """Coerce a composition, scalar or element into an :class:`HElement`."""
    if isinstance(x, HElement):
        return x
    if isinstance(x, MatrixComposition):
        return HElement.basis(x)
    return HElement.basis(EMPTY, as_scalar(x))


def tensor(*factors) -> HTensor:
    """Tensor product of elements (multilinear)."""
    acc: dict = {(): 1}
    for f in factors:
        f = element(f)
        nxt: dict = {}
        for k, c in acc.items():
            for a, d in f.terms.items():
                key = k + (a,)
                s = nxt.get(key, 0) + c * d
                if s:
                    nxt[key] = s
                else:
                    nxt.pop(key, None)
        acc = nxt
    return HTensor(acc, _trusted=True)


def leading_monomial(x: HElement) -> MatrixComposition:
    """The grlex-greatest composition with a nonzero coefficient."""
    if not x:
        raise DomainError("the zero element has no leading monomial")
    return max(x.terms, key=grlex_key)


def leading_term(x: HElement) -> tuple[MatrixComposition, Scalar]:
    a = leading_monomial(x)
    return a, x.terms[a]


def add(x: HElement, y: HElement) -> HElement:
    return x + y


def scale(c, x: HElement) -> HElement:
    return as_scalar(c) * x


def counit(x: HElement) -> Scalar:
    return x.terms.get(EMPTY, 0)
