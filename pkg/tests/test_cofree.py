import pytest
from hypothesis import given

from conftest import C, compositions
from matcomp import golden
from matcomp.algebra import HElement, counit
from matcomp.coalgebra import coproduct, eulerian_idempotent, tensor_apply
from matcomp.cofree import cofree_extend, exp_map, hopf_transport, log_map, pi_blockcount, pi_connected
from matcomp.composition import EMPTY
from matcomp.errors import ContractViolation
from matcomp.expr import parse_element as E
from matcomp.hoffman import phi
from matcomp.products import multiply


def twice(f):
    return lambda t: tensor_apply([f, f], t)


def test_projections():
    assert pi_connected(E("[1] + [1 e; e 2]")) == E("[1]")
    assert not pi_connected(E("[]"))
    x = E("[] + [1] + 3*[1 e; e 2] - [1 e e; e 2 e; e e 3]")
    assert pi_blockcount(1, x) == pi_connected(x)
    assert pi_blockcount(2, E("[1 e; e 2]")) == E("[1 e; e 2]")
    assert sum((pi_blockcount(k, x) for k in (1, 2, 3)), counit(x) * HElement.one()) == x


def test_extend_examples():
    c = C("[1 2; e 3]")
    psi = lambda b: pi_connected(phi(b))  # noqa: E731
    assert cofree_extend(psi, c) == psi(c)
    assert cofree_extend(pi_connected, E("[1 e; e 2] + [3]")) == E("[1 e; e 2] + [3]")
    with pytest.raises(ContractViolation):
        cofree_extend(lambda b: E("[1 e; e 2]"), C("[1]"))


def test_log_exp_examples():
    a, expect = golden.LOG_SHUFFLE_EXAMPLE
    assert log_map("sh2", E(a)) == E(expect)
    assert exp_map("sh2", E(expect)) == E(a)
    a, expect = golden.EXP_SHUFFLE_EXAMPLE
    assert exp_map("sh2", E(a)) == E(expect)
    c = C("[e 1; 2 e]")
    assert log_map("qsh", c) == E("[e 1; 2 e]") == exp_map("sh2", c)


def test_hopf_transport_identity():
    x = E("[1 e; e 2] + [3]")
    for m in ("sh2", "qsh", "bsh"):
        assert hopf_transport(m, m, x) == x
    assert hopf_transport("sh2", "bsh", x) == log_map("sh2", x)


@given(compositions(2, 2), compositions(2, 2))
def test_pi_kills_block_shuffles(a, b):
    assert not pi_connected(multiply("bsh", a, b))


@given(compositions(3, 3))
def test_extension_is_coalgebra_map(a):
    psi = lambda b: pi_connected(phi(b))  # noqa: E731
    ext = lambda x: cofree_extend(psi, x)  # noqa: E731
    assert coproduct(ext(a)) == twice(ext)(coproduct(a))
    assert cofree_extend(pi_connected, a) == E(str(a))


@given(compositions(3, 3))
def test_projection_characterises_extension(a):
    c = a.blocks[-1]
    bumped = lambda x: pi_connected(x) + (E(str(c)) if x == c else HElement.zero())  # noqa: E731
    assert cofree_extend(bumped, a) != E(str(a))


@pytest.mark.parametrize("p", ["sh2", "qsh"])
@given(compositions(3, 3))
def test_log_exp_inverse(p, a):
    assert exp_map(p, log_map(p, a)) == E(str(a)) == log_map(p, exp_map(p, a))
    if a.is_connected():
        assert pi_connected(eulerian_idempotent(p, a)) == E(str(a))


@pytest.mark.parametrize("p", ["sh2", "qsh"])
@given(compositions(2, 2), compositions(2, 2))
def test_log_is_a_bialgebra_map(p, a, b):
    lg = lambda x: log_map(p, x)  # noqa: E731
    assert lg(multiply(p, a, b)) == multiply("bsh", lg(a), lg(b))
    assert coproduct(lg(a)) == twice(lg)(coproduct(a))
    assert not pi_connected(eulerian_idempotent(p, multiply(p, a, b)))


@pytest.mark.parametrize("src,dst", [("sh2", "qsh"), ("qsh", "sh2"), ("bsh", "sh2")])
@given(compositions(2, 2), compositions(2, 2))
def test_hopf_transport(src, dst, a, b):
    T = lambda x: hopf_transport(src, dst, x)  # noqa: E731
    assert T(multiply(src, a, b)) == multiply(dst, T(a), T(b))
    assert coproduct(T(a)) == twice(T)(coproduct(a))


def test_exp_of_empty():
    assert exp_map("sh2", EMPTY) == HElement.one() == log_map("qsh", EMPTY)
