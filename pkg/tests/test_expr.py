import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import compositions
from matcomp.algebra import HTensor
from matcomp.errors import DomainError, ParseError
from matcomp.expr import BinOp, Lit, Scale, evaluate, evaluate_text, parse, parse_element, to_text
from matcomp.composition import format_composition


def test_literal():
    node = parse("[1 e; e 2]")
    assert isinstance(node, Lit) and format_composition(node.value) == "[1 e; e 2]"


def test_precedence():
    node = parse("1/2*[1] sh2 [2] - [1 e; e 2]")
    assert isinstance(node, BinOp) and node.op == "-"
    assert isinstance(node.left, BinOp) and node.left.op == "sh2"
    assert isinstance(node.left.left, Scale)


def test_errors_have_positions():
    with pytest.raises(ParseError, match="row 1 contains only e"):
        parse("[e e; 1 2]")
    with pytest.raises(ParseError) as exc:
        parse("[1] sh2\n  + )")
    assert exc.value.line == 2 and exc.value.column == 3
    with pytest.raises(ParseError, match="unknown function"):
        parse("foo([1])")
    with pytest.raises(ParseError, match="outside alphabet"):
        parse("[7]")
    with pytest.raises(ParseError):
        parse("ev(sin, t, [1])")


def test_evaluation():
    assert evaluate_text("[1] sh2 [2]") == parse_element(
        "[1 e; e 2] + [e 1; 2 e] + [e 2; 1 e] + [2 e; e 1]")
    assert str(evaluate_text("phi([1;2])")) == "[1; 2] + 1/2*[1*2]"
    d = evaluate_text("delta([1 e; e 2])")
    assert isinstance(d, HTensor) and len(d) == 3
    assert evaluate_text("ev(exp1, exp1, [1;2])") == evaluate_text("phi([1;2])")
    assert evaluate_text("ev([1, 0], t, [1;2])") == parse_element("[1;2]")
    assert evaluate_text("exp_sh2(log_sh2([1 e; e 2]))") == parse_element("[1 e; e 2]")
    assert evaluate_text("2") == parse_element("2*[]")


def test_type_errors():
    with pytest.raises(DomainError):
        evaluate_text("delta([1]) sh2 [1]")
    with pytest.raises(DomainError):
        evaluate_text("delta([1]) + [1]")
    with pytest.raises(DomainError):
        parse_element("[1] (x) [2]")


def test_tensor_literal():
    t = evaluate_text("[1] (x) [2] + [] (x) [1 e; e 2]")
    assert t == evaluate_text("delta([1 e; e 2])") - evaluate_text("[1 e; e 2] (x) []")


EXPRS = ["[1] sh2 [2]", "1/2*[1] qsh -[2 1]", "phi([1;2] - 3*[1])", "ev(exp1, [1, 1/2], [1 2])",
         "([1] bsh [2]) (x) eul_sh2([1 e; e 2])", "antipode_qsh([1 e; e 2])"]


@pytest.mark.parametrize("text", EXPRS)
def test_roundtrip(text):
    node = parse(text)
    assert parse(to_text(node)) == node
    assert evaluate(parse(to_text(node))) == evaluate(node)


@given(st.lists(compositions(2, 2), min_size=1, max_size=2), st.sampled_from(["sh2", "qsh", "bsh", "+", "-"]))
def test_canonical_print_is_idempotent(parts, op):
    text = f" {op} ".join(format_composition(a) for a in parts)
    once = str(evaluate_text(text))
    if once != "0":
        assert str(evaluate_text(once)) == once
