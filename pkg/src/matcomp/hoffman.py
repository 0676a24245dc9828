"""Row/column merges, the two-parameter Hoffman map and the series evaluations ``ev_{f,g}``."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from typing import Callable, Optional, Sequence

from . import kernels
from .algebra import HElement, Scalar, as_scalar, element
from .composition import (
    IntComposition,
    MatrixComposition,
    check_int_composition,
    groups,
    int_compositions,
)
from .errors import DomainError


def merge_action(a: MatrixComposition, I: Sequence[int], J: Sequence[int]) -> MatrixComposition:
    """Merge consecutive row groups of sizes ``I``, then column groups of sizes ``J``."""
    if a.rows == 0:
        raise DomainError("merge action needs a nonempty composition")
    I = check_int_composition(I, a.rows)
    J = check_int_composition(J, a.cols)
    n = a.cols
    rows = []
    for g in groups(I):
        acc = [0] * n
        for r in g:
            for c in range(n):
                acc[c] += a.entries[r * n + c]
        rows.append(acc)
    entries = tuple(sum(row[c] for c in g) for row in rows for g in groups(J))
    return MatrixComposition(len(I), len(J), entries)


@lru_cache(maxsize=None)
def _groupings(n: int) -> tuple[tuple[IntComposition, tuple], ...]:
    out = []
    for I in int_compositions(n):
        out.append((I, tuple((g.start, g.stop) for g in groups(I))))
    return tuple(out)


def _weighted_merges(a: MatrixComposition, row_weight: Callable[[IntComposition], Scalar],
                     col_weight: Callable[[IntComposition], Scalar], scale: int = 1) -> HElement:
    """``sum_{I,J} row_weight(I) col_weight(J) a_{I,J} / scale``."""
    rg = _groupings(a.rows)
    cg = _groupings(a.cols)
    table = kernels.merge_sum(
        a.rows, a.cols, a.entries,
        tuple(g for _, g in rg), tuple(row_weight(I) for I, _ in rg),
        tuple(g for _, g in cg), tuple(col_weight(J) for J, _ in cg),
    )
    out = {}
    for (r, c, e), w in table.items():
        w = Fraction(w, scale)
        out[MatrixComposition(r, c, e)] = w.numerator if w.denominator == 1 else w
    return HElement(out, _trusted=True)


# Both maps have weights whose denominators divide rows! * cols!, so the
# kernels run on integers and each output term is divided once.

def _scaled_inv_factorial(I: IntComposition) -> int:
    return factorial(sum(I)) // prod(factorial(k) for k in I)


def _scaled_inv_signed(I: IntComposition) -> int:
    return (-1) ** (sum(I) - len(I)) * (factorial(sum(I)) // prod(I))


@lru_cache(maxsize=1 << 15)
def _phi_basis(a: MatrixComposition) -> HElement:
    if a.rows == 0:
        return HElement.basis(a)
    return _weighted_merges(a, _scaled_inv_factorial, _scaled_inv_factorial,
                            factorial(a.rows) * factorial(a.cols))


@lru_cache(maxsize=1 << 15)
def _phi_inv_basis(a: MatrixComposition) -> HElement:
    if a.rows == 0:
        return HElement.basis(a)
    return _weighted_merges(a, _scaled_inv_signed, _scaled_inv_signed,
                            factorial(a.rows) * factorial(a.cols))


def phi(x) -> HElement:
    """``sum_{I,J} a_{I,J} / (I! J!)``; maps the shuffle structure to the quasi-shuffle one."""
    return element(x).map_basis(_phi_basis)


def phi_inv(x) -> HElement:
    """``sum_{I,J} (-1)^(rows-len I + cols-len J) / (prod I prod J) a_{I,J}``."""
    return element(x).map_basis(_phi_inv_basis)


# -- formal power series without constant term -----------------------------------

@dataclass(frozen=True)
class SeriesCoeffs:
    """Coefficients ``c_1, c_2, ...`` of a series in ``t K[[t]]``.

    Either a finite list (``coeffs[k-1]`` is the coefficient of ``t^k``, known up
    to ``order = len(coeffs)``) or an exact rule producing any coefficient.
    """

    coeffs: tuple = ()
    rule: Optional[Callable[[int], Scalar]] = field(default=None, compare=False)
    name: str = ""

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", tuple(as_scalar(c) for c in self.coeffs))

    @property
    def order(self) -> float:
        return float("inf") if self.rule is not None else len(self.coeffs)

    def __getitem__(self, k: int) -> Scalar:
        if k < 1:
            raise DomainError("series coefficients are indexed from 1")
        if self.rule is not None:
            return as_scalar(self.rule(k))
        if k > len(self.coeffs):
            raise DomainError(f"series known to order {len(self.coeffs)}, coefficient {k} requested")
        return self.coeffs[k - 1]

    def truncate(self, order: int) -> "SeriesCoeffs":
        return SeriesCoeffs(tuple(self[k] for k in range(1, order + 1)), name=self.name)

    def __str__(self) -> str:
        if self.name:
            return self.name
        return "[" + ", ".join(str(c) for c in self.coeffs) + "]"

    @classmethod
    def identity(cls) -> "SeriesCoeffs":
        return cls(rule=lambda k: 1 if k == 1 else 0, name="t")

    @classmethod
    def exp1(cls) -> "SeriesCoeffs":
        """``e^t - 1``."""
        return cls(rule=lambda k: Fraction(1, factorial(k)), name="exp1")

    @classmethod
    def log1p(cls) -> "SeriesCoeffs":
        """``log(1 + t)``."""
        return cls(rule=lambda k: Fraction((-1) ** (k - 1), k), name="log1p")

    @classmethod
    def named(cls, name: str) -> "SeriesCoeffs":
        table = {"t": cls.identity, "exp1": cls.exp1, "log1p": cls.log1p}
        if name not in table:
            raise DomainError(f"unknown series {name!r}; expected one of {sorted(table)}")
        return table[name]()


def _series_weight(f: SeriesCoeffs) -> Callable[[IntComposition], Scalar]:
    def w(I: IntComposition) -> Scalar:
        out: Scalar = 1
        for k in I:
            out *= f[k]
            if not out:
                return 0
        return out
    return w


def evaluate_map(f: SeriesCoeffs, g: SeriesCoeffs, x) -> HElement:
    """``ev_{f,g}(a) = sum_{I,J} f_{I_1}..f_{I_len} g_{J_1}..g_{J_len} a_{I,J}``."""
    x = element(x)
    for a in x.terms:
        if a.rows > f.order or a.cols > g.order:
            raise DomainError(f"series truncation too short for a {a.rows}x{a.cols} composition")
    fw, gw = _series_weight(f), _series_weight(g)
    return x.map_basis(lambda a: HElement.basis(a) if a.rows == 0 else _weighted_merges(a, fw, gw))


def series_compose(f: SeriesCoeffs, g: SeriesCoeffs, order: int) -> SeriesCoeffs:
    """Coefficients of ``f o g`` up to ``order`` via ``[t^k](f o g) = sum_j f_j [t^k] g^j``."""
    if order < 1:
        raise DomainError("order must be positive")
    gs = [0] + [g[k] for k in range(1, order + 1)]  # index = power of t
    power = [1] + [0] * order  # g^0
    out = [0] * (order + 1)
    for j in range(1, order + 1):
        nxt = [0] * (order + 1)
        for i, c in enumerate(power):
            if c:
                for k in range(1, order + 1 - i):
                    nxt[i + k] += c * gs[k]
        power = nxt
        fj = f[j]
        if fj:
            for k in range(j, order + 1):
                out[k] += fj * power[k]
    return SeriesCoeffs(tuple(out[1:]))


def clear_caches() -> None:
    _phi_basis.cache_clear()
    _phi_inv_basis.cache_clear()
