import pytest
from hypothesis import given

from conftest import C, compositions
from matcomp import golden
from matcomp.algebra import HElement, HTensor, counit, element, tensor
from matcomp.coalgebra import (
    antipode,
    convolution_exponential,
    convolve,
    coproduct,
    eulerian_decomposition,
    eulerian_idempotent,
    identity,
    iterated_reduced_coproduct,
    reduced_convolution_power,
    reduced_coproduct,
    unit_counit,
)
from matcomp.composition import EMPTY
from matcomp.errors import DomainError
from matcomp.expr import parse_element as E
from matcomp.products import Product, multiply
from matcomp.verify import antipode_left, antipode_right, bialgebra_rhs, tensor_coproduct_at

PRODUCTS = list(Product)


def test_coproduct_examples():
    assert coproduct(C("[1 e; e 2]")) == tensor(C("[1 e; e 2]"), EMPTY) + tensor(C("[1]"), C("[2]")) \
        + tensor(EMPTY, C("[1 e; e 2]"))
    assert coproduct(EMPTY) == tensor(EMPTY, EMPTY)
    c = C("[e 1; 2 e]")
    assert coproduct(c) == tensor(c, EMPTY) + tensor(EMPTY, c)


def test_counit_and_reduced():
    assert counit(E("[] + 2*[1]")) == 1
    assert not reduced_coproduct(C("[1]"))
    got = iterated_reduced_coproduct(2, C("[1 e e; e 2 e; e e 3]"))
    assert got == tensor(C("[1]"), C("[2]"), C("[3]"))


def test_antipode_examples():
    assert antipode("bsh", C("[1]")) == E("-[1]")
    assert antipode("bsh", C("[1 e; e 2]")) == E("[2 e; e 1]")
    assert antipode("sh2", EMPTY) == HElement.one()


def test_eulerian_examples():
    a, expect = golden.EULERIAN_SHUFFLE_EXAMPLE
    assert eulerian_idempotent("sh2", E(a)) == E(expect)
    assert eulerian_idempotent("qsh", C("[1]")) == E("[1]")
    assert not eulerian_idempotent("sh2", multiply("sh2", C("[1]"), C("[2]")))


def test_convolution_basics():
    a = C("[1 e e; e 2 3; e e 1]")
    for p in PRODUCTS:
        assert convolve(identity, unit_counit, p)(a) == element(a)
        assert not reduced_convolution_power(p, len(a.blocks) + 1, a)
        assert convolve(identity, lambda x: antipode(p, x), p)(a) == HElement.zero()
    assert reduced_convolution_power("bsh", 0, EMPTY) == HElement.one()
    zero = lambda x: HElement.zero()  # noqa: E731
    assert convolution_exponential("sh2", zero, EMPTY) == HElement.one()
    with pytest.raises(DomainError):
        convolution_exponential("sh2", identity, EMPTY)


def test_decomposition_three_blocks():
    a = C("[2 e e e; e 1 3 e; e e e 1]")
    assert len(a.blocks) == 3
    for p in PRODUCTS:
        assert eulerian_decomposition(p, a) == element(a)


@given(compositions(4, 4))
def test_coassociative_and_counital(a):
    d = coproduct(a)
    assert tensor_coproduct_at(d, 0) == tensor_coproduct_at(d, 1)
    left = HTensor({(y,): c for (x, y), c in d.terms.items() if x == EMPTY})
    right = HTensor({(x,): c for (x, y), c in d.terms.items() if y == EMPTY})
    assert left == right == HTensor({(a,): 1})


@pytest.mark.parametrize("p", PRODUCTS)
@given(compositions(2, 2), compositions(2, 2))
def test_bialgebra(p, a, b):
    assert coproduct(multiply(p, a, b)) == bialgebra_rhs(p, a, b)


@pytest.mark.parametrize("p", PRODUCTS)
@given(compositions(3, 3))
def test_antipode_axiom(p, a):
    assert antipode_left(p, a) == antipode_right(p, a) == HElement.zero()


@pytest.mark.parametrize("p", PRODUCTS)
@given(compositions(3, 3))
def test_eulerian_idempotent_and_exp(p, a):
    e = eulerian_idempotent(p, a)
    assert eulerian_idempotent(p, e) == e
    assert convolution_exponential(p, lambda x: eulerian_idempotent(p, x), a) == element(a)
    assert {x.degree for x in e.terms} <= {a.degree}


@pytest.mark.parametrize("p", PRODUCTS)
@given(compositions(2, 2), compositions(2, 2))
def test_eulerian_kills_products(p, a, b):
    assert not eulerian_idempotent(p, multiply(p, a, b))
