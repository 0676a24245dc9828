"""The expression language used by the CLI.

Grammar (loosest binding first)::

    expr    := tensor (("+" | "-") tensor)*
    tensor  := product ("(x)" product)*
    product := unary (("sh2" | "qsh" | "bsh") unary)*
    unary   := "-" unary | RATIONAL "*" unary | atom
    atom    := COMPOSITION | RATIONAL | "(" expr ")" | NAME "(" args ")"

Names: ``phi``, ``phiinv``, ``delta``, ``pi``, ``eul_m``, ``log_m``, ``exp_m``,
``antipode_m`` (``m`` one of sh2/qsh/bsh; log/exp take sh2/qsh) and
``ev(f, g, x)`` whose series are ``exp1``, ``log1p``, ``t`` or ``[c1, c2, ...]``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from . import config
from .algebra import HElement, HTensor, add_into, as_scalar, format_scalar, tensor
from .composition import MatrixComposition, format_composition, parse_composition
from .errors import CompositionError, DomainError, ParseError

PRODUCT_OPS = ("sh2", "qsh", "bsh")
_UNARY = {"phi", "phiinv", "delta", "pi"} | {f"{k}_{m}" for k in ("eul", "antipode") for m in PRODUCT_OPS} \
    | {f"{k}_{m}" for k in ("log", "exp") for m in ("sh2", "qsh")}
SERIES_NAMES = ("exp1", "log1p", "t")


# -- AST ---------------------------------------------------------------------

@dataclass(frozen=True)
class Lit:
    value: MatrixComposition


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Neg:
    arg: "Node"


@dataclass(frozen=True)
class Scale:
    coeff: Fraction
    arg: "Node"


@dataclass(frozen=True)
class BinOp:
    op: str  # + - (x) sh2 qsh bsh
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Call:
    name: str
    args: tuple


@dataclass(frozen=True)
class SeriesArg:
    name: str = ""
    coeffs: tuple = ()


Node = Union[Lit, Num, Neg, Scale, BinOp, Call, SeriesArg]


# -- lexer -------------------------------------------------------------------

_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<tensor>\(x\))
  | (?P<bracket>\[[^\[\]]*\])
  | (?P<rational>\d+(?:/\d+)?)
  | (?P<name>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<op>[-+*(),])
""", re.VERBOSE)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    pos: int


def tokenize(text: str) -> list[Token]:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", text, pos)
        kind = m.lastgroup
        if kind != "ws":
            out.append(Token(kind, m.group(), pos))
        pos = m.end()
    out.append(Token("end", "", len(text)))
    return out


# -- parser ------------------------------------------------------------------

class _Parser:
    def __init__(self, text: str, d: int):
        self.text = text
        self.d = d
        self.toks = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def error(self, msg: str, tok: Token | None = None) -> ParseError:
        tok = tok or self.tok
        return ParseError(msg, self.text, tok.pos)

    def eat(self, kind: str, text: str | None = None) -> Token:
        t = self.tok
        if t.kind != kind or (text is not None and t.text != text):
            want = text or kind
            got = t.text or "end of input"
            raise self.error(f"expected {want!r}, found {got!r}")
        self.i += 1
        return t

    def at(self, kind: str, text: str | None = None) -> bool:
        t = self.tok
        return t.kind == kind and (text is None or t.text == text)

    def parse(self) -> Node:
        node = self.expr()
        if not self.at("end"):
            raise self.error(f"unexpected {self.tok.text!r}")
        return node

    def expr(self) -> Node:
        node = self.tensor()
        while self.at("op", "+") or self.at("op", "-"):
            op = self.eat("op").text
            node = BinOp(op, node, self.tensor())
        return node

    def tensor(self) -> Node:
        node = self.product()
        while self.at("tensor"):
            self.eat("tensor")
            node = BinOp("(x)", node, self.product())
        return node

    def product(self) -> Node:
        node = self.unary()
        while self.tok.kind == "name" and self.tok.text in PRODUCT_OPS:
            op = self.eat("name").text
            node = BinOp(op, node, self.unary())
        return node

    def unary(self) -> Node:
        if self.at("op", "-"):
            self.eat("op")
            return Neg(self.unary())
        if self.at("rational") and self.toks[self.i + 1].kind == "op" and self.toks[self.i + 1].text == "*":
            c = Fraction(self.eat("rational").text)
            self.eat("op", "*")
            return Scale(c, self.unary())
        return self.atom()

    def composition(self, tok: Token) -> MatrixComposition:
        try:
            return parse_composition(tok.text, self.d)
        except (CompositionError, ValueError) as exc:
            raise ParseError(f"invalid composition {tok.text}: {exc}", self.text, tok.pos) from None

    def atom(self) -> Node:
        t = self.tok
        if t.kind == "bracket":
            self.eat("bracket")
            return Lit(self.composition(t))
        if t.kind == "rational":
            self.eat("rational")
            return Num(Fraction(t.text))
        if self.at("op", "("):
            self.eat("op")
            node = self.expr()
            self.eat("op", ")")
            return node
        if t.kind == "name":
            name = self.eat("name").text
            if name == "ev":
                self.eat("op", "(")
                f = self.series()
                self.eat("op", ",")
                g = self.series()
                self.eat("op", ",")
                x = self.expr()
                self.eat("op", ")")
                return Call("ev", (f, g, x))
            if name not in _UNARY:
                raise ParseError(f"unknown function {name!r}", self.text, t.pos)
            self.eat("op", "(")
            x = self.expr()
            self.eat("op", ")")
            return Call(name, (x,))
        raise self.error(f"unexpected {t.text or 'end of input'!r}")

    def series(self) -> SeriesArg:
        t = self.tok
        if t.kind == "name" and t.text in SERIES_NAMES:
            self.eat("name")
            return SeriesArg(name=t.text)
        if t.kind == "bracket":
            self.eat("bracket")
            body = t.text[1:-1].strip()
            try:
                coeffs = tuple(Fraction(x.strip()) for x in body.split(",")) if body else ()
            except ValueError:
                raise ParseError(f"malformed series coefficients {t.text}", self.text, t.pos) from None
            return SeriesArg(coeffs=coeffs)
        raise self.error("expected a series: exp1, log1p, t or [c1, c2, ...]")


def parse(text: str, d: int | None = None) -> Node:
    """Parse an expression; raises :class:`ParseError` with line/column on bad input."""
    return _Parser(text, config.alphabet_size() if d is None else d).parse()


# -- printing ------------------------------------------------------------------

def to_text(node: Node) -> str:
    """Fully parenthesised source text; ``parse(to_text(n)) == n``."""
    if isinstance(node, Lit):
        return format_composition(node.value)
    if isinstance(node, Num):
        return format_scalar(node.value)
    if isinstance(node, Neg):
        return f"-({to_text(node.arg)})"
    if isinstance(node, Scale):
        return f"{format_scalar(node.coeff)}*({to_text(node.arg)})"
    if isinstance(node, BinOp):
        return f"({to_text(node.left)} {node.op} {to_text(node.right)})"
    if isinstance(node, SeriesArg):
        return node.name or "[" + ", ".join(format_scalar(c) for c in node.coeffs) + "]"
    if isinstance(node, Call):
        return f"{node.name}(" + ", ".join(to_text(a) for a in node.args) + ")"
    raise TypeError(node)


# -- evaluation ----------------------------------------------------------------

Value = Union[HElement, HTensor]


def _need_element(v: Value, what: str) -> HElement:
    if not isinstance(v, HElement):
        raise DomainError(f"{what} needs an element of H, got a tensor")
    return v


def _series(node: SeriesArg):
    from .hoffman import SeriesCoeffs
    if node.name:
        return SeriesCoeffs.named(node.name)
    return SeriesCoeffs(node.coeffs)


def evaluate(node: Node) -> Value:
    from . import cofree, coalgebra, hoffman
    from .products import multiply

    if isinstance(node, Lit):
        return HElement.basis(node.value)
    if isinstance(node, Num):
        return HElement.one() * as_scalar(node.value)
    if isinstance(node, Neg):
        return -evaluate(node.arg)
    if isinstance(node, Scale):
        return as_scalar(node.coeff) * evaluate(node.arg)
    if isinstance(node, BinOp) and node.op in ("+", "-"):
        return _evaluate_sum(node)
    if isinstance(node, BinOp):
        left, right = evaluate(node.left), evaluate(node.right)
        if node.op == "(x)":
            return _tensor_concat(left, right)
        return multiply(node.op, _need_element(left, node.op), _need_element(right, node.op))
    if isinstance(node, Call):
        if node.name == "ev":
            f, g, x = node.args
            return hoffman.evaluate_map(_series(f), _series(g), _need_element(evaluate(x), "ev"))
        x = _need_element(evaluate(node.args[0]), node.name)
        name = node.name
        if name == "phi":
            return hoffman.phi(x)
        if name == "phiinv":
            return hoffman.phi_inv(x)
        if name == "delta":
            return coalgebra.coproduct(x)
        if name == "pi":
            return cofree.pi_connected(x)
        kind, prod_ = name.split("_", 1)
        if kind == "eul":
            return coalgebra.eulerian_idempotent(prod_, x)
        if kind == "antipode":
            return coalgebra.antipode(prod_, x)
        if kind == "log":
            return cofree.log_map(prod_, x)
        if kind == "exp":
            return cofree.exp_map(prod_, x)
    raise TypeError(f"cannot evaluate {node!r}")


def _evaluate_sum(node: BinOp) -> Value:
    # long sums parse as left-nested chains; walk the spine instead of recursing
    tail = []
    while isinstance(node, BinOp) and node.op in ("+", "-"):
        tail.append((node.op, node.right))
        node = node.left
    first = evaluate(node)
    acc = dict(first.terms)
    kind = type(first)
    arity = first.arity if isinstance(first, HTensor) else None
    for op, rhs in reversed(tail):
        v = evaluate(rhs)
        if type(v) is not kind:
            raise DomainError(f"cannot {'add' if op == '+' else 'subtract'} values of different types")
        if kind is HTensor and v:
            if arity is None:
                arity = v.arity
            elif v.arity != arity:
                raise DomainError("cannot add tensors of different arity")
        add_into(acc, v.terms, 1 if op == "+" else -1)
    return kind(acc, _trusted=True)


def _tensor_concat(left: Value, right: Value) -> HTensor:
    def parts(v: Value) -> dict:
        if isinstance(v, HElement):
            return {(a,): c for a, c in v.terms.items()}
        return dict(v.terms)
    out: dict = {}
    for k1, c1 in parts(left).items():
        for k2, c2 in parts(right).items():
            key = k1 + k2
            s = out.get(key, 0) + c1 * c2
            if s:
                out[key] = s
            else:
                out.pop(key, None)
    return HTensor(out, _trusted=True)


def evaluate_text(text: str, d: int | None = None) -> Value:
    return evaluate(parse(text, d))


def parse_element(text: str, d: int | None = None) -> HElement:
    """Parse and evaluate text that must denote an element of H."""
    return _need_element(evaluate_text(text, d), "an element literal")


__all__ = ["parse", "evaluate", "evaluate_text", "parse_element", "to_text", "tokenize", "tensor"]
