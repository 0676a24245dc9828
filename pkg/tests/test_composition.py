import pickle

import pytest
from hypothesis import given

from conftest import C, compositions
from matcomp import config, golden
from matcomp.composition import (
    EMPTY,
    block_decompose,
    cmp_connected,
    cmp_grlex,
    cmp_lex,
    construct,
    diag_concat,
    format_composition,
    int_compositions,
    is_connected,
    parse_composition,
    vectorize,
)
from matcomp.errors import AlphabetError, CompositionError, DomainError
from matcomp.monoid import Monomial, Ordering


def test_construct():
    w1, w2 = Monomial.letter(1), Monomial.letter(2)
    e = Monomial.unit()
    assert construct([[w1, e], [e, w2]]) == C("[1 e; e 2]")
    with pytest.raises(CompositionError, match="row 1"):
        construct([[e, e], [w1, w2]])
    with pytest.raises(CompositionError, match="column 2"):
        construct([[w1, e], [w2, e]])
    assert construct([]) is EMPTY


def test_parse_and_print():
    for text in ("[1 e; e 2*3]", "[1]", "[]", "[e 1; 2 e]"):
        assert format_composition(parse_composition(text)) == text
    assert parse_composition("[ 1   e ;e 2 * 3 ]") == C("[1 e; e 2*3]")
    assert format_composition(C("[1;2]")) == "[1; 2]"


@pytest.mark.parametrize("bad", ["1 e", "[1 e; e]", "[e e; 1 2]", "[1;]", "[x]"])
def test_parse_rejects(bad):
    with pytest.raises((CompositionError, ValueError)):
        parse_composition(bad)


def test_alphabet_is_checked():
    with pytest.raises(AlphabetError):
        parse_composition("[5]")
    with config.settings(alphabet=6):
        assert parse_composition("[5 6]").cols == 2


def test_diag_concat():
    assert diag_concat(C("[1]"), C("[2]")) == C("[1 e; e 2]")
    a = C("[1 2; e 3]")
    assert diag_concat(a, EMPTY) == a == diag_concat(EMPTY, a)
    x, y, z = C("[1]"), C("[2]"), C("[3]")
    assert diag_concat(diag_concat(x, y), z) == diag_concat(x, diag_concat(y, z))


def test_block_decompose():
    assert block_decompose(C("[1 e; e 2]")) == (C("[1]"), C("[2]"))
    assert block_decompose(C("[e 1; 2 e]")) == (C("[e 1; 2 e]"),)
    assert block_decompose(EMPTY) == ()
    assert block_decompose(C("[1 2 e; e e 3]")) == (C("[1 2]"), C("[3]"))
    assert not is_connected(C("[1 e e; 2 e e; e 1 2]"))


def test_vectorize_is_column_major():
    assert vectorize(C("[1 2; 3 4]")) == tuple(C(f"[{x}]").entries[0] for x in (1, 3, 2, 4))


def test_connected_order_examples():
    chain = [C(x) for x in golden.CONNECTED_CHAIN]
    letters = [x for x in chain if x.is_connected()]
    for x, y in zip(letters, letters[1:]):
        assert cmp_connected(x, y) == Ordering.LT
    assert cmp_connected(EMPTY, C("[1]")) == Ordering.LT
    assert cmp_connected(C("[2 1]"), C("[2 1]")) == Ordering.EQ
    with pytest.raises(DomainError):
        cmp_connected(C("[1 e; e 2]"), C("[1]"))
    # the displayed chain also ends with a 2-block composition; grlex ranks it last
    for x, y in zip(chain, chain[1:]):
        assert cmp_grlex(x.blocks, y.blocks) == Ordering.LT


def test_grlex_examples():
    words = [C(x).blocks for x in golden.GRLEX_CHAIN]
    for u, v in zip(words, words[1:]):
        assert cmp_grlex(u, v) == Ordering.LT
    u = C("[1 e; e 2]").blocks
    assert cmp_lex(u, u + (C("[3]"),)) == Ordering.LT


def test_int_compositions():
    assert int_compositions(0) == ((),)
    assert sorted(int_compositions(3)) == sorted([(3,), (1, 2), (2, 1), (1, 1, 1)])
    assert all(len(int_compositions(n)) == 2 ** (n - 1) for n in range(1, 8))


def test_pickle_and_hash():
    a = C("[1 e; 2 3]")
    b = pickle.loads(pickle.dumps(a))
    assert a == b and hash(a) == hash(b)


@given(compositions(4, 4))
def test_decompose_roundtrip(a):
    blocks = block_decompose(a)
    assert diag_concat(*blocks) == a
    assert all(is_connected(u) for u in blocks)
    assert parse_composition(format_composition(a)) == a


@given(compositions(), compositions())
def test_len_additive(a, b):
    assert len(diag_concat(a, b).blocks) == len(a.blocks) + len(b.blocks)


@given(compositions(), compositions(), compositions())
def test_grlex_total(a, b, c):
    u, v, w = a.blocks, b.blocks, c.blocks
    assert cmp_grlex(u, v) == -cmp_grlex(v, u)
    assert (cmp_grlex(u, v) == 0) == (u == v)
    if cmp_grlex(u, v) < 0 and cmp_grlex(v, w) < 0:
        assert cmp_grlex(u, w) < 0
