import pytest
from hypothesis import given
from hypothesis import strategies as st

from matcomp import config
from matcomp.errors import AlphabetError
from matcomp.monoid import Monomial, Ordering, cmp_deglex, degree, format_code, parse_code, star

w1, w2, w3 = (Monomial.letter(i) for i in (1, 2, 3))
eps = Monomial.unit()

monomials = st.lists(st.integers(0, 3), min_size=4, max_size=4).map(lambda e: Monomial(tuple(e)))


def test_star_examples():
    assert star(w1, w2).exponents == (1, 1, 0, 0)
    assert star(w1, eps) == w1
    assert star(w2, star(w1, w3)) == Monomial.parse("1*2*3")


def test_degree_examples():
    assert degree(eps) == 0
    assert degree(Monomial.parse("1*2*2")) == 3


def test_deglex_examples():
    assert cmp_deglex(w1, w2) == Ordering.LT
    assert cmp_deglex(w2, Monomial.parse("1*2*3")) == Ordering.LT
    assert cmp_deglex(w3, w3) == Ordering.EQ
    # equal degree falls back to the sorted letter word
    assert cmp_deglex(Monomial.parse("1*3"), Monomial.parse("2*2")) == Ordering.LT


def test_alphabet_mismatch():
    with config.settings(alphabet=3):
        a = Monomial.letter(1)
    with pytest.raises(AlphabetError):
        star(a, w1)
    with pytest.raises(AlphabetError):
        Monomial.letter(5)


def test_text_roundtrip():
    for text in ("e", "1", "1*2*2", "3*4"):
        assert format_code(parse_code(text)) == text
    assert parse_code(" 2 * 1 ") == parse_code("1*2")


@given(monomials, monomials, monomials)
def test_star_laws(a, b, c):
    assert star(a, star(b, c)) == star(star(a, b), c)
    assert star(a, b) == star(b, a)
    assert degree(star(a, b)) == degree(a) + degree(b)


@given(monomials, monomials, monomials)
def test_deglex_is_total_and_degree_first(a, b, c):
    assert cmp_deglex(a, b) == -cmp_deglex(b, a)
    assert (cmp_deglex(a, b) == Ordering.EQ) == (a == b)
    if cmp_deglex(a, b) <= 0 and cmp_deglex(b, c) <= 0:
        assert cmp_deglex(a, c) <= 0
    if degree(a) < degree(b):
        assert cmp_deglex(a, b) == Ordering.LT
