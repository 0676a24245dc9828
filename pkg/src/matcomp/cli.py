"""``matcomp`` command-line entry point."""
from __future__ import annotations

import argparse
import json
import os
import sys

from . import config
from .algebra import HElement, HTensor, format_scalar
from .composition import (
    cmp_connected,
    cmp_grlex,
    format_composition,
    format_word,
    parse_composition,
)
from .errors import MatcompError
from .expr import evaluate_text, parse_element
from .lyndon import GeneratorPolynomial, cfl_factorize, format_monomial, is_lyndon, lyndon_transport, \
    rewrite_in_generators
from .monoid import Monomial, cmp_deglex

PRODUCT_NAMES = ("sh2", "qsh", "bsh")

_SYMBOL = {-1: "<", 0: "=", 1: ">"}


def _value_json(v) -> dict:
    if isinstance(v, HElement):
        return {"type": "element",
                "terms": [{"composition": format_composition(a), "coefficient": format_scalar(c)} for a, c in v]}
    if isinstance(v, HTensor):
        return {"type": "tensor", "arity": v.arity,
                "terms": [{"factors": [format_composition(a) for a in k], "coefficient": format_scalar(c)}
                          for k, c in v]}
    if isinstance(v, GeneratorPolynomial):
        return {"type": "generator_polynomial",
                "terms": [{"monomial": format_monomial(k), "coefficient": format_scalar(c)} for k, c in v]}
    raise TypeError(v)


def _emit(args, text: str, data: dict) -> None:
    if args.format == "json":
        print(json.dumps(data, indent=2))
    else:
        print(text)


def _cmd_eval(args) -> int:
    v = evaluate_text(args.expression)
    _emit(args, str(v), _value_json(v))
    return 0


def _cmd_rewrite(args) -> int:
    poly = rewrite_in_generators(args.product, parse_element(args.expression))
    _emit(args, str(poly), {"product": args.product, **_value_json(poly)})
    return 0


def _cmd_transport(args) -> int:
    x = parse_element(args.expression)
    if args.hopf:
        from .cofree import hopf_transport
        y = hopf_transport(args.src, args.dst, x)
    else:
        y = lyndon_transport(args.src, args.dst, x)
    kind = "hopf" if args.hopf else "lyndon"
    _emit(args, str(y), {"from": args.src, "to": args.dst, "map": kind, **_value_json(y)})
    return 0


def _cmd_verify(args) -> int:
    from .verify import run_suite
    report = run_suite(args.suite, args.max_degree, args.samples, args.seed)
    print(report.json() if args.format == "json" else report.text())
    return 0 if report.passed else 1


def _cmd_order_cmp(args) -> int:
    if args.order == "deglex":
        a, b = Monomial.parse(args.a), Monomial.parse(args.b)
        result = cmp_deglex(a, b)
    else:
        a, b = parse_composition(args.a), parse_composition(args.b)
        result = cmp_connected(a, b) if args.order == "connected" else cmp_grlex(a.blocks, b.blocks)
    text = f"{args.a} {_SYMBOL[int(result)]} {args.b}"
    _emit(args, text, {"order": args.order, "a": args.a, "b": args.b, "result": result.name})
    return 0


def _cmd_lyndon(args) -> int:
    word = tuple(u for text in args.letters for u in parse_composition(text).blocks)
    if args.check:
        ok = is_lyndon(word)
        _emit(args, "lyndon" if ok else "not lyndon", {"word": format_word(word), "lyndon": ok})
        return 0
    factors = cfl_factorize(word)
    _emit(args, " ".join(f"({format_word(f)})" for f in factors),
          {"word": format_word(word), "factors": [format_word(f) for f in factors]})
    return 0


def _defaults() -> dict:
    env = os.environ.get("MATCOMP_ALPHABET")
    return {"alphabet": int(env) if env else config.DEFAULT_ALPHABET,
            "max_terms": config.DEFAULT_MAX_TERMS, "seed": 0, "format": "text"}


def _add_common(p: argparse.ArgumentParser) -> None:
    # accepted before or after the subcommand; defaults are filled in after parsing
    # so that a subcommand never overwrites a value given at the top level
    s = argparse.SUPPRESS
    p.add_argument("--alphabet", type=int, default=s, help="number of letters d (default: $MATCOMP_ALPHABET or 4)")
    p.add_argument("--max-terms", type=int, default=s, help="cap on enumerated index pairs per product")
    p.add_argument("--seed", type=int, default=s, help="sampling seed (default 0)")
    p.add_argument("--format", choices=("text", "json"), default=s, help="output format (default text)")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    _add_common(common)
    parser = argparse.ArgumentParser(prog="matcomp",
                                     description="Exact computation in the matrix-composition Hopf algebra.")
    _add_common(parser)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="evaluate an expression")
    p.add_argument("expression")
    p.set_defaults(run=_cmd_eval)

    p = sub.add_parser("rewrite", parents=[common], help="rewrite in the Lyndon generators")
    p.add_argument("--product", choices=PRODUCT_NAMES, required=True)
    p.add_argument("expression")
    p.set_defaults(run=_cmd_rewrite)

    p = sub.add_parser("transport", parents=[common], help="map between product structures")
    p.add_argument("--from", dest="src", choices=PRODUCT_NAMES, required=True)
    p.add_argument("--to", dest="dst", choices=PRODUCT_NAMES, required=True)
    p.add_argument("--hopf", action="store_true", help="use the Hopf isomorphism Exp o Log instead of the Lyndon one")
    p.add_argument("expression")
    p.set_defaults(run=_cmd_transport)

    p = sub.add_parser("verify", parents=[common], help="run a property suite")
    p.add_argument("suite", choices=("hopf", "orders", "lyndon", "hoffman", "cofree", "oracles", "all"))
    p.add_argument("--max-degree", type=int, default=4)
    p.add_argument("--samples", type=int, default=100)
    p.set_defaults(run=_cmd_verify)

    p = sub.add_parser("order-cmp", parents=[common], help="compare two items")
    p.add_argument("--order", choices=("grlex", "connected", "deglex"), default="grlex")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(run=_cmd_order_cmp)

    p = sub.add_parser("lyndon", parents=[common], help="CFL factorisation or Lyndon test of a block word")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--cfl", action="store_true", help="print the factorisation (default)")
    mode.add_argument("--check", action="store_true", help="test whether the word is Lyndon")
    p.add_argument("letters", nargs="+", help="compositions whose blocks, in order, form the word")
    p.set_defaults(run=_cmd_lyndon)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    for key, value in _defaults().items():
        if not hasattr(args, key):
            setattr(args, key, value)
    try:
        config.configure(alphabet=args.alphabet, max_terms=args.max_terms)
        return args.run(args)
    except (MatcompError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
