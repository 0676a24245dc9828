from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import C, compositions
from matcomp import golden
from matcomp.coalgebra import coproduct, tensor_apply
from matcomp.composition import EMPTY, int_compositions
from matcomp.encodings import (
    brew_composition,
    brew_count,
    brew_factorial,
    brew_matrices,
    merge_via_brew,
    phi_via_brew,
)
from matcomp.errors import DomainError
from matcomp.expr import parse_element as E
from matcomp.hoffman import SeriesCoeffs, evaluate_map, merge_action, phi, phi_inv, series_compose
from matcomp.products import multiply

exp1, log1p, t = SeriesCoeffs.exp1(), SeriesCoeffs.log1p(), SeriesCoeffs.identity()
series4 = st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=4), min_size=4, max_size=4) \
    .map(lambda cs: SeriesCoeffs(tuple(cs)))


def test_merge_action():
    assert merge_action(C("[1;2]"), (2,), (1,)) == C("[1*2]")
    a = C("[1 e; e 2]")
    assert merge_action(a, (1, 1), (1, 1)) == a
    assert merge_action(a, (2,), (1, 1)) == C("[1 2]")
    with pytest.raises(DomainError):
        merge_action(a, (1,), (2,))


@pytest.mark.parametrize("a,expect", golden.PHI_EXAMPLES)
def test_phi_examples(a, expect):
    assert phi(E(a)) == E(expect)


def test_phi_third_display_term():
    # I = (3), J = (1, 1) merges all rows of [1 e; e 2; e 3] into [1 2*3] with weight 1/3!
    got = phi(C("[1 e; e 2; e 3]"))
    assert got.coefficient(C("[1 2*3]")) == Fraction(1, 6)
    assert got.coefficient(C("[1*2*3]")) == Fraction(1, 12)
    assert got != E(golden.PHI_THIRD_AS_DISPLAYED[1])


@pytest.mark.parametrize("a,expect", golden.PHI_INV_EXAMPLES)
def test_phi_inv_examples(a, expect):
    assert phi_inv(E(a)) == E(expect)


def test_empty_and_identity():
    assert phi(EMPTY) == E("[]") == phi_inv(EMPTY)
    a = E("[1 2; e 3] - 2*[1]")
    assert evaluate_map(t, t, a) == a


def test_named_series_evaluations():
    a = C("[1 e 2; e 3 e; 4 e 1]")
    assert evaluate_map(exp1, exp1, a) == phi(a)
    assert evaluate_map(log1p, log1p, a) == phi_inv(a)
    with pytest.raises(DomainError):
        evaluate_map(SeriesCoeffs((1, 0)), t, a)


def test_series():
    assert series_compose(exp1, log1p, 6).coeffs == (1, 0, 0, 0, 0, 0)
    assert series_compose(log1p, exp1, 6).coeffs == (1, 0, 0, 0, 0, 0)
    f = SeriesCoeffs((1, Fraction(1, 2), 3))
    assert series_compose(f, t, 3) == f == series_compose(t, f, 3)
    assert exp1[3] == Fraction(1, 6) and log1p[2] == Fraction(-1, 2)
    with pytest.raises(DomainError):
        f[4]
    with pytest.raises(DomainError):
        SeriesCoeffs.named("sin")


def test_brew_counts():
    for n in range(1, 6):
        assert brew_count(n) == 2 ** (n - 1) == len(int_compositions(n))
    for v in range(1, 4):
        for length in range(v, 5):
            comps = sorted(brew_composition(M) for M in brew_matrices(v, length))
            assert comps == sorted(I for I in int_compositions(length) if len(I) == v)


def test_brew_diag_and_factorial():
    for U in brew_matrices(2, 3):
        for V in brew_matrices(1, 2):
            D = np.zeros((3, 5), dtype=object)
            D[:2, :3] = U
            D[2:, 3:] = V
            assert any((D == M).all() for M in brew_matrices(3, 5))
            assert brew_factorial(D) == brew_factorial(U) * brew_factorial(V)


@given(compositions(3, 3))
def test_merges_match_brew_oracle(a):
    for I in int_compositions(a.rows):
        for J in int_compositions(a.cols):
            assert merge_action(a, I, J) == merge_via_brew(a, I, J)
    assert phi(a) == phi_via_brew(a)


@given(compositions(4, 3))
def test_inverse(a):
    assert phi_inv(phi(a)) == E(str(a)) == phi(phi_inv(a))


@given(compositions(2, 2), compositions(2, 2))
def test_multiplicative(a, b):
    assert phi(multiply("sh2", a, b)) == multiply("qsh", phi(a), phi(b))


@given(compositions(4, 4))
def test_coproduct_compatible(a):
    assert tensor_apply([phi, phi], coproduct(a)) == coproduct(phi(a))


@given(series4, series4, series4, series4, compositions(4, 4))
def test_evaluation_composition_law(f, g, p, q, a):
    lhs = evaluate_map(f, p, evaluate_map(g, q, a))
    assert lhs == evaluate_map(series_compose(f, g, 4), series_compose(p, q, 4), a)
