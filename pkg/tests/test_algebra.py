from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import C, compositions
from matcomp.algebra import HElement, HTensor, add, counit, element, leading_monomial, scale, tensor
from matcomp.composition import EMPTY, grlex_key
from matcomp.errors import DomainError
from matcomp.expr import parse_element as E
from matcomp.products import multiply

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@st.composite
def elements(draw, max_terms: int = 4):
    pairs = draw(st.lists(st.tuples(compositions(2, 2), rationals), max_size=max_terms))
    return HElement({a: c for a, c in pairs})


def test_add_and_scale():
    x = E("[1] + [1 e; e 2]")
    assert not add(x, scale(-1, x))
    assert scale(Fraction(1, 2), E("[1] + [2]")) == E("1/2*[1] + 1/2*[2]")
    assert add(E("[1]"), E("[1]")) == E("2*[1]")


def test_printing():
    assert str(E("[1;2] + 1/2*[1*2]")) == "[1; 2] + 1/2*[1*2]"
    assert str(E("[1] - [2]")) == "-[2] + [1]"
    assert str(HElement()) == "0"
    t = tensor(C("[1]"), C("[2]")) - tensor(EMPTY, C("[1]"))
    assert str(t) == "[1] (x) [2] - [] (x) [1]"


def test_no_zero_coefficients():
    x = HElement({C("[1]"): 0, C("[2]"): 1})
    assert list(x.terms) == [C("[2]")]
    with pytest.raises(TypeError):
        HElement({C("[1]"): 0.5})


def test_leading_monomial():
    assert leading_monomial(E("[1] + [1 e; e 2]")) == C("[1 e; e 2]")
    assert leading_monomial(E("-3/4*[2 1]")) == C("[2 1]")
    assert leading_monomial(multiply("sh2", C("[1]"), C("[2]"))) == \
        leading_monomial(multiply("bsh", C("[1]"), C("[2]")))
    with pytest.raises(DomainError):
        leading_monomial(HElement())


def test_counit():
    assert counit(E("[] + 2*[1]")) == 1
    assert counit(E("[1]")) == 0


def test_iteration_is_grlex_descending():
    x = E("[1] + [2] + [1 e; e 2] + [e 1; 2 e]")
    keys = [grlex_key(a) for a, _ in x]
    assert keys == sorted(keys, reverse=True)


def test_tensor_rejects_bad_keys():
    with pytest.raises(TypeError):
        HTensor({(): 1})


@given(elements(), elements(), elements())
def test_vector_space_laws(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert x + y == y + x
    assert 2 * (x + y) == 2 * x + 2 * y
    assert all(c != 0 for c in (x + y).terms.values())


@given(elements(), elements())
def test_leading_monomial_of_sum(x, y):
    s = x + y
    if not (x and y and s):
        return
    top = max(grlex_key(leading_monomial(x)), grlex_key(leading_monomial(y)))
    assert grlex_key(leading_monomial(s)) <= top
    if leading_monomial(x) != leading_monomial(y):
        assert grlex_key(leading_monomial(s)) == top


def test_element_coercion():
    assert element(3) == 3 * HElement.one()
    assert element(C("[1]")) == E("[1]")
