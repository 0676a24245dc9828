"""Seeded property suites over the algebraic laws of H.

Every check draws its inputs from a deterministic pool (see
:mod:`matcomp.sampling`), so equal seeds and flags produce identical reports.
"""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from fractions import Fraction
from itertools import product as cartesian
from math import comb
from typing import Callable, Iterable

from . import config, golden, kernels
from .algebra import HElement, HTensor, add_into, counit, element, leading_monomial
from .coalgebra import (
    antipode,
    convolution_exponential,
    convolve,
    coproduct,
    eulerian_decomposition,
    eulerian_idempotent,
    identity,
    reduced_convolution_power,
    tensor_apply,
    unit_counit,
)
from .cofree import cofree_extend, exp_map, hopf_transport, log_map, pi_connected
from .composition import (
    EMPTY,
    MatrixComposition,
    cmp_connected,
    cmp_grlex,
    diag_concat,
    format_composition,
    grlex_key,
    int_compositions,
    parse_composition,
    word_key,
)
from .encodings import (
    brew_composition,
    brew_factorial,
    brew_matrices,
    merge_via_brew,
    phi_via_brew,
    product_via_matrix_encoding,
)
from .expr import parse_element
from .hoffman import SeriesCoeffs, evaluate_map, merge_action, phi, phi_inv, series_compose
from .lyndon import (
    GeneratorPolynomial,
    b_of_word,
    cfl_factorize,
    eval_generator_poly,
    is_lyndon,
    lyndon_transport,
    rewrite_in_generators,
)
from .monoid import Monomial, Ordering, cmp_deglex, degree, star
from .products import (
    Product,
    delannoy,
    enumerate_quasi_shuffles,
    enumerate_shuffles,
    multiply,
)
from .sampling import Sampler, compositions_of_degree, pool

PRODUCTS = (Product.SH2, Product.QSH, Product.BSH)
SUITES = ("hopf", "orders", "lyndon", "hoffman", "cofree", "oracles")


@dataclass
class CheckResult:
    name: str
    passed: bool
    samples: int
    counterexample: str | None = None

    def line(self) -> str:
        head = f"{'PASS' if self.passed else 'FAIL'}  {self.name}  samples={self.samples}"
        return head if self.passed else f"{head}  counterexample: {self.counterexample}"


@dataclass
class Report:
    suite: str
    seed: int
    max_degree: int
    samples: int
    alphabet: int
    results: list

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def text(self) -> str:
        lines = [f"suite={self.suite} seed={self.seed} max_degree={self.max_degree} "
                 f"samples={self.samples} alphabet={self.alphabet}"]
        lines += [r.line() for r in self.results]
        ok = sum(r.passed for r in self.results)
        lines.append(f"{ok}/{len(self.results)} properties passed")
        return "\n".join(lines)

    def json(self) -> str:
        data = {
            "suite": self.suite, "seed": self.seed, "max_degree": self.max_degree,
            "samples": self.samples, "alphabet": self.alphabet, "passed": self.passed,
            "results": [asdict(r) for r in self.results],
        }
        return json.dumps(data, indent=2)


def _show(x) -> str:
    if isinstance(x, MatrixComposition):
        return format_composition(x)
    if isinstance(x, tuple):
        return "(" + ", ".join(_show(y) for y in x) + ")"
    return str(x)


class Context:
    def __init__(self, max_degree: int, samples: int, seed: int):
        self.max_degree = max_degree
        self.samples = samples
        self.seed = seed
        self.d = config.alphabet_size()
        self.results: list[CheckResult] = []

    def sampler(self, name: str) -> Sampler:
        # independent stream per property keeps reports stable when suites are combined
        return Sampler(_stable_seed(self.seed, name))

    def pool(self, max_degree: int | None = None, **kw) -> tuple:
        return pool(self.max_degree if max_degree is None else max_degree, self.d, **kw)

    def bounded_tuples(self, name: str, arity: int, total: int, count: int, **kw) -> list:
        """Random ``arity``-tuples of compositions with total degree <= ``total``."""
        s = self.sampler(name)
        out = []
        for _ in range(count):
            left = total
            tup = []
            for i in range(arity):
                cap = left - (arity - 1 - i)
                if cap < 1:
                    break
                a = s.one(self.pool(cap, **kw))
                tup.append(a)
                left -= a.degree
            if len(tup) == arity:
                out.append(tuple(tup))
        return out

    def check(self, name: str, cases: Iterable, predicate: Callable) -> None:
        n = 0
        for case in cases:
            n += 1
            try:
                ok = predicate(*case) if isinstance(case, tuple) else predicate(case)
            except Exception as exc:  # a crash is a failure with the input recorded
                self.results.append(CheckResult(name, False, n, f"{_show(case)} raised {exc!r}"))
                return
            if not ok:
                self.results.append(CheckResult(name, False, n, _show(case)))
                return
        self.results.append(CheckResult(name, True, n))

    def fact(self, name: str, ok: bool, detail: str = "") -> None:
        self.results.append(CheckResult(name, bool(ok), 1, None if ok else detail or "mismatch"))


def _stable_seed(seed: int, name: str) -> int:
    h = seed & 0xFFFFFFFF
    for ch in name:
        h = (h * 1000003 + ord(ch)) & 0xFFFFFFFF
    return h


def E(text: str) -> HElement:
    return parse_element(text)


def C(text: str) -> MatrixComposition:
    return parse_composition(text)


# -- shared helpers ----------------------------------------------------------------

def tensor_coproduct_at(t: HTensor, pos: int) -> HTensor:
    """Apply the coproduct to tensor factor ``pos``."""
    out: dict = {}
    for key, c in t.terms.items():
        for (l, r), d in coproduct(key[pos]).terms.items():
            add_into(out, {key[:pos] + (l, r) + key[pos + 1:]: c * d})
    return HTensor(out, _trusted=True)


def as_tensor(x: HElement) -> HTensor:
    return HTensor({(a,): c for a, c in x.terms.items()}, _trusted=True)


def bialgebra_rhs(p, a: MatrixComposition, b: MatrixComposition) -> HTensor:
    out: dict = {}
    for (a1, a2), c in coproduct(a).terms.items():
        for (b1, b2), d in coproduct(b).terms.items():
            left = multiply(p, a1, b1)
            right = multiply(p, a2, b2)
            for x, u in left.terms.items():
                for y, v in right.terms.items():
                    add_into(out, {(x, y): c * d * u * v})
    return HTensor(out, _trusted=True)


def tensor_product_of(p, t1: HTensor, t2: HTensor) -> HTensor:
    """``(m (x) m)(id (x) tau (x) id)(t1 (x) t2)`` for two 2-tensors."""
    out: dict = {}
    for (x1, x2), c in t1.terms.items():
        for (y1, y2), d in t2.terms.items():
            left = multiply(p, x1, y1)
            right = multiply(p, x2, y2)
            for u, cu in left.terms.items():
                for v, cv in right.terms.items():
                    add_into(out, {(u, v): c * d * cu * cv})
    return HTensor(out, _trusted=True)


def tensor_map2(f, t: HTensor) -> HTensor:
    return tensor_apply([f, f], t)


def antipode_left(p, a: MatrixComposition) -> HElement:
    out: dict = {}
    for (l, r), c in coproduct(a).terms.items():
        add_into(out, multiply(p, antipode(p, l), r).terms, c)
    return HElement(out, _trusted=True)


def antipode_right(p, a: MatrixComposition) -> HElement:
    out: dict = {}
    for (l, r), c in coproduct(a).terms.items():
        add_into(out, multiply(p, l, antipode(p, r)).terms, c)
    return HElement(out, _trusted=True)


def lm_collapse(a: MatrixComposition, b: MatrixComposition) -> bool:
    lms = {leading_monomial(multiply(p, a, b)) for p in PRODUCTS}
    return len(lms) == 1


def lower_order(p, a: MatrixComposition, b: MatrixComposition) -> bool:
    """``m(a, b) - a bsh b`` lives on compositions with fewer than ``len a + len b`` blocks."""
    bound = len(a.blocks) + len(b.blocks)
    rest = multiply(p, a, b) - multiply("bsh", a, b)
    return all(len(x.blocks) < bound for x in rest.terms)


def generator_row(row) -> tuple[MatrixComposition, GeneratorPolynomial]:
    lhs, terms = row
    poly = GeneratorPolynomial.from_products((Fraction(c), [C(s) for s in args]) for c, args in terms)
    return C(lhs), poly


def degrees_preserved(x: HElement, y) -> bool:
    ds = {a.degree for a in x.terms}
    if len(ds) > 1:
        return True
    if isinstance(y, HTensor):
        return all(sum(b.degree for b in k) in ds for k in y.terms)
    return all(b.degree in ds for b in element(y).terms)


# -- suites ------------------------------------------------------------------

def suite_hopf(ctx: Context) -> None:
    n, D = ctx.samples, ctx.max_degree
    ones = ctx.pool(D)
    for p in PRODUCTS:
        tag = f"hopf.{p.value}"
        s = ctx.sampler(tag + ".unit")
        ctx.check(f"{tag}.unit", s.many(ones, n),
                  lambda a: multiply(p, a, EMPTY) == element(a) == multiply(p, EMPTY, a))
        ctx.check(f"{tag}.commutativity", ctx.bounded_tuples(tag + ".comm", 2, D, n),
                  lambda a, b: multiply(p, a, b) == multiply(p, b, a))
        ctx.check(f"{tag}.associativity", ctx.bounded_tuples(tag + ".assoc", 3, D, n),
                  lambda a, b, c: multiply(p, multiply(p, a, b), c) == multiply(p, a, multiply(p, b, c)))
        ctx.check(f"{tag}.bialgebra", ctx.bounded_tuples(tag + ".bialg", 2, D, n),
                  lambda a, b: coproduct(multiply(p, a, b)) == bialgebra_rhs(p, a, b))
        unit = HElement.one()
        ctx.check(f"{tag}.antipode", ctx.sampler(tag + ".antipode").many(ones, n),
                  lambda a: antipode_left(p, a) == counit(element(a)) * unit == antipode_right(p, a))
        ctx.check(f"{tag}.antipode_grading", ctx.sampler(tag + ".sgrade").many(ones, n),
                  lambda a: degrees_preserved(element(a), antipode(p, a)))
    pairs = ctx.bounded_tuples("hopf.lm", 2, D, n)
    ctx.check("hopf.leading_monomial_collapse", pairs, lm_collapse)
    for p in (Product.SH2, Product.QSH):
        ctx.check(f"hopf.lower_order.{p.value}", pairs, lambda a, b: lower_order(p, a, b))
    s = ctx.sampler("hopf.coalgebra")
    sample = s.many(ones, n)
    ctx.check("hopf.coassociativity", sample,
              lambda a: tensor_coproduct_at(coproduct(a), 0) == tensor_coproduct_at(coproduct(a), 1))
    ctx.check("hopf.counit", sample,
              lambda a: as_tensor(element(a)) == HTensor(
                  {(y,): c for (x, y), c in coproduct(a).terms.items() if x == EMPTY})
              == HTensor({(x,): c for (x, y), c in coproduct(a).terms.items() if y == EMPTY}))
    ctx.check("hopf.coproduct_grading", sample, lambda a: degrees_preserved(element(a), coproduct(a)))


def suite_orders(ctx: Context) -> None:
    n = ctx.samples
    d = ctx.d
    s = ctx.sampler("orders.monoid")
    monos = [Monomial.from_code(a.entries[0]) for a in ctx.pool(3, max_rows=1, max_cols=1)]
    triples = [tuple(s.many(monos, 3)) for _ in range(n)]
    ctx.check("orders.star_assoc_comm", triples,
              lambda a, b, c: star(a, star(b, c)) == star(star(a, b), c) and star(a, b) == star(b, a))
    ctx.check("orders.star_unit_degree", triples,
              lambda a, b, c: star(a, Monomial.unit(d)) == a and degree(star(a, b)) == degree(a) + degree(b))

    def total(cmp, a, b, c) -> bool:
        ab, bc, ac = cmp(a, b), cmp(b, c), cmp(a, c)
        if cmp(b, a) != Ordering(-ab):
            return False
        if (ab == Ordering.EQ) != (a == b):
            return False
        if ab <= 0 and bc <= 0 and ac > 0:
            return False
        return True

    ctx.check("orders.deglex_total", triples, lambda a, b, c: total(cmp_deglex, a, b, c))
    ctx.check("orders.deglex_degree_first", triples,
              lambda a, b, c: degree(a) >= degree(b) or cmp_deglex(a, b) == Ordering.LT)
    if d >= 3:
        w = [Monomial.letter(i, d) for i in (1, 2, 3)]
        ctx.fact("orders.deglex_golden",
                 cmp_deglex(w[0], w[1]) == Ordering.LT
                 and cmp_deglex(w[1], star(w[0], star(w[1], w[2]))) == Ordering.LT)
        chain = [C(x) for x in golden.CONNECTED_CHAIN]
        letters = [x for x in chain if x.is_connected()]
        ctx.fact("orders.connected_chain_golden",
                 all(cmp_connected(x, y) == Ordering.LT for x, y in zip(letters, letters[1:]))
                 and cmp_connected(EMPTY, chain[0]) == Ordering.LT)
        # the chain's last member has two blocks, so it is ranked by grlex on block words
        ctx.fact("orders.connected_chain_grlex",
                 all(cmp_grlex(x.blocks, y.blocks) == Ordering.LT for x, y in zip(chain, chain[1:])))
    if d >= 4:
        chain = [C(x).blocks for x in golden.GRLEX_CHAIN]
        ctx.fact("orders.grlex_chain_golden",
                 all(cmp_grlex(x, y) == Ordering.LT for x, y in zip(chain, chain[1:])))
    connected = [a for a in ctx.pool() if a.is_connected()]
    cs = ctx.sampler("orders.connected")
    ctx.check("orders.connected_total", [tuple(cs.many(connected, 3)) for _ in range(n)],
              lambda a, b, c: total(cmp_connected, a, b, c))
    words = ctx.pool()
    ws = ctx.sampler("orders.grlex")
    ctx.check("orders.grlex_total", [tuple(x.blocks for x in ws.many(words, 3)) for _ in range(n)],
              lambda a, b, c: total(cmp_grlex, a, b, c))
    ctx.check("orders.grlex_monomial_order",
              [tuple(x.blocks for x in ws.many(words, 4)) for _ in range(n)],
              lambda a, b, u, v: cmp_grlex(a, b) != Ordering.LT or cmp_grlex(u + a + v, u + b + v) == Ordering.LT)
    ctx.check("orders.lex_prefix", [tuple(x.blocks for x in ws.many(words, 2)) for _ in range(n)],
              lambda u, a: word_key(u) < word_key(u + a))
    ctx.check("orders.block_roundtrip", ctx.sampler("orders.blocks").many(words, n),
              lambda a: diag_concat(*a.blocks) == a and all(u.is_connected() for u in a.blocks))
    ctx.check("orders.len_additive", ctx.bounded_tuples("orders.len", 2, ctx.max_degree, n),
              lambda a, b: len(diag_concat(a, b).blocks) == len(a.blocks) + len(b.blocks))

    def lm_bound(a, b, c1, c2) -> bool:
        x = c1 * element(a)
        y = c2 * element(b)
        z = x + y
        if not z:
            return True
        top = max(grlex_key(a), grlex_key(b))
        lm = grlex_key(leading_monomial(z))
        return lm <= top and (a == b or lm == top)

    rs = ctx.sampler("orders.lm")
    ctx.check("orders.leading_monomial_of_sum",
              [(x, y, rs.rational(), rs.rational()) for x, y in ctx.bounded_tuples("orders.lm2", 2, ctx.max_degree, n)],
              lambda a, b, c1, c2: (not c1 or not c2) or lm_bound(a, b, c1, c2))


def suite_lyndon(ctx: Context) -> None:
    n, D = ctx.samples, ctx.max_degree
    if ctx.d >= 3:
        for i, row in enumerate(golden.BLOCK_SHUFFLE_GENERATORS, start=1):
            a, poly = generator_row(row)
            got = rewrite_in_generators("bsh", a)
            ctx.fact(f"lyndon.block_shuffle_generators.row{i}", got == poly, f"{a}: {got}")
        for i, row in enumerate(golden.SHUFFLE_GENERATORS, start=1):
            a, poly = generator_row(row)
            got = rewrite_in_generators("sh2", a)
            ctx.fact(f"lyndon.shuffle_generators.row{i}", got == poly, f"{a}: {got}")
        ctx.fact("lyndon.examples",
                 all(is_lyndon(C(x).blocks) for x in golden.LYNDON_WORDS)
                 and not any(is_lyndon(C(x).blocks) for x in golden.NON_LYNDON_WORDS))
        a, expect = golden.LYNDON_TRANSPORT_FIRST
        ctx.fact("lyndon.transport_golden", lyndon_transport("bsh", "sh2", C(a)) == E(expect))
        a = C(golden.LYNDON_TRANSPORT_SECOND[0])
        ctx.fact("lyndon.transport_fixes_generator",
                 is_lyndon(a.blocks) and lyndon_transport("bsh", "sh2", a) == element(a))
        w = C(golden.COPRODUCT_WITNESS)
        psi = lambda x: lyndon_transport("bsh", "sh2", x)  # noqa: E731
        ctx.fact("lyndon.transport_breaks_coproduct",
                 tensor_map2(psi, coproduct(w)) != coproduct(psi(w)))

    letters = sorted({u for a in ctx.pool(2) for u in a.blocks}, key=lambda u: word_key((u,)))[:6]
    words = [w for k in range(1, 5) for w in cartesian(letters, repeat=k)]

    def brute_cfl(w):
        # the unique factorisation into non-increasing Lyndon words, by exhaustive search
        found = []

        def rec(rest, acc):
            if not rest:
                if all(word_key(x) >= word_key(y) for x, y in zip(acc, acc[1:])):
                    found.append(tuple(acc))
                return
            for k in range(1, len(rest) + 1):
                if is_lyndon(rest[:k]):
                    rec(rest[k:], acc + [rest[:k]])

        rec(tuple(w), [])
        return found

    ctx.check("lyndon.cfl_unique_bruteforce", words,
              lambda *w: brute_cfl(w) == [cfl_factorize(w)])
    ones = ctx.pool(min(D, 4))
    for p in PRODUCTS:
        s = ctx.sampler(f"lyndon.lm.{p.value}")
        ctx.check(f"lyndon.leading_monomial.{p.value}", s.many(ones, n),
                  lambda a: leading_monomial(b_of_word(p, a.blocks)) == a)
        ctx.check(f"lyndon.rewrite_roundtrip.{p.value}", s.many(ones, max(1, n // 4)),
                  lambda a: eval_generator_poly(p, rewrite_in_generators(p, a)) == element(a))
    for src, dst in [("bsh", "sh2"), ("sh2", "qsh"), ("qsh", "bsh")]:
        ctx.check(f"lyndon.transport_multiplicative.{src}_{dst}",
                  ctx.bounded_tuples(f"lyndon.tm.{src}{dst}", 2, min(D, 4), max(1, n // 4)),
                  lambda a, b: lyndon_transport(src, dst, multiply(src, a, b))
                  == multiply(dst, lyndon_transport(src, dst, a), lyndon_transport(src, dst, b)))


def random_series(s: Sampler, order: int) -> SeriesCoeffs:
    return SeriesCoeffs(tuple(s.rational() for _ in range(order)))


def suite_hoffman(ctx: Context) -> None:
    n, D = ctx.samples, ctx.max_degree
    if ctx.d >= 3:
        for a, expect in golden.PHI_EXAMPLES:
            ctx.fact(f"hoffman.phi_golden{a}", phi(E(a)) == E(expect), str(phi(E(a))))
        for a, expect in golden.PHI_INV_EXAMPLES:
            ctx.fact(f"hoffman.phi_inv_golden{a}", phi_inv(E(a)) == E(expect), str(phi_inv(E(a))))
    ones = ctx.pool()
    s = ctx.sampler("hoffman.inverse")
    ctx.check("hoffman.inverse", s.many(ones, n),
              lambda a: phi_inv(phi(a)) == element(a) == phi(phi_inv(a)))
    ctx.check("hoffman.multiplicative", ctx.bounded_tuples("hoffman.mult", 2, D, n),
              lambda a, b: phi(multiply("sh2", a, b)) == multiply("qsh", phi(a), phi(b)))
    ctx.check("hoffman.coproduct", ctx.sampler("hoffman.cop").many(ones, n),
              lambda a: tensor_map2(phi, coproduct(a)) == coproduct(phi(a)))
    exp1, log1p, t = SeriesCoeffs.exp1(), SeriesCoeffs.log1p(), SeriesCoeffs.identity()
    sample = ctx.sampler("hoffman.ev").many(ones, n)
    ctx.check("hoffman.ev_identity", sample, lambda a: evaluate_map(t, t, a) == element(a))
    ctx.check("hoffman.ev_exp_is_phi", sample, lambda a: evaluate_map(exp1, exp1, a) == phi(a))
    ctx.check("hoffman.ev_log_is_phi_inv", sample, lambda a: evaluate_map(log1p, log1p, a) == phi_inv(a))
    small = ctx.pool(max_rows=4, max_cols=4)
    rs = ctx.sampler("hoffman.evlaw")
    quads = [(tuple(random_series(rs, 4) for _ in range(4)), rs.one(small)) for _ in range(max(20, n // 10))]

    def ev_law(fs, a) -> bool:
        f, g, p, q = fs
        lhs = evaluate_map(f, p, evaluate_map(g, q, a))
        return lhs == evaluate_map(series_compose(f, g, 4), series_compose(p, q, 4), a)

    ctx.check("hoffman.ev_composition_law", quads, ev_law)
    ctx.fact("hoffman.series_exp_log", series_compose(exp1, log1p, 6).coeffs == (1, 0, 0, 0, 0, 0)
             and series_compose(log1p, exp1, 6).coeffs == (1, 0, 0, 0, 0, 0))
    ctx.check("hoffman.merge_count", ctx.sampler("hoffman.count").many(ones, n),
              lambda a: len(int_compositions(a.rows)) * len(int_compositions(a.cols))
              == 2 ** (a.rows - 1) * 2 ** (a.cols - 1))


def suite_cofree(ctx: Context) -> None:
    n, D = ctx.samples, ctx.max_degree
    ones = ctx.pool()
    pairs = ctx.bounded_tuples("cofree.pairs", 2, D, n)
    ctx.check("cofree.pi_kills_block_shuffles", pairs, lambda a, b: not pi_connected(multiply("bsh", a, b)))
    sample = ctx.sampler("cofree.single").many(ones, n)
    ctx.check("cofree.extend_pi_is_identity", sample, lambda a: cofree_extend(pi_connected, a) == element(a))
    psi = lambda c: pi_connected(phi(c))  # noqa: E731
    ctx.check("cofree.extend_is_coalgebra_map", sample,
              lambda a: coproduct(cofree_extend(psi, a)) == tensor_map2(lambda x: cofree_extend(psi, x), coproduct(a)))

    def perturbed(a) -> bool:
        c = a.blocks[0]
        bumped = lambda x: pi_connected(x) + (element(c) if x == c else HElement.zero())  # noqa: E731
        return cofree_extend(bumped, a) != element(a)

    ctx.check("cofree.projection_characterises", sample, perturbed)
    connected = [a for a in ones if a.is_connected()]
    cs = ctx.sampler("cofree.connected").many(connected, n)
    for p in (Product.SH2, Product.QSH):
        tag = f"cofree.{p.value}"
        ctx.check(f"{tag}.contraction_identity", cs, lambda c: pi_connected(eulerian_idempotent(p, c)) == element(c))
        ctx.check(f"{tag}.psi_kills_products", ctx.bounded_tuples(tag + ".kill", 2, D, n),
                  lambda a, b: not pi_connected(eulerian_idempotent(p, multiply(p, a, b))))
        ctx.check(f"{tag}.log_connected_identity", cs, lambda c: log_map(p, c) == element(c))
        few = ctx.sampler(tag + ".inv").many(ctx.pool(max_blocks=4), n)
        ctx.check(f"{tag}.exp_log_inverse", few,
                  lambda a: exp_map(p, log_map(p, a)) == element(a) == log_map(p, exp_map(p, a)))
        ctx.check(f"{tag}.log_multiplicative", ctx.bounded_tuples(tag + ".mult", 2, D, n),
                  lambda a, b: log_map(p, multiply(p, a, b)) == multiply("bsh", log_map(p, a), log_map(p, b)))
        ctx.check(f"{tag}.log_coproduct", few,
                  lambda a: coproduct(log_map(p, a)) == tensor_map2(lambda x: log_map(p, x), coproduct(a)))
    if ctx.d >= 2:
        a, expect = golden.LOG_SHUFFLE_EXAMPLE
        ctx.fact("cofree.log_golden", log_map("sh2", E(a)) == E(expect)
                 and exp_map("sh2", E(expect)) == E(a))
        a, expect = golden.EXP_SHUFFLE_EXAMPLE
        ctx.fact("cofree.exp_golden", exp_map("sh2", E(a)) == E(expect))
        a, expect = golden.EULERIAN_SHUFFLE_EXAMPLE
        ctx.fact("cofree.eulerian_golden", eulerian_idempotent("sh2", E(a)) == E(expect))
    small = ctx.pool(min(D, 4), max_blocks=3)
    for p in PRODUCTS:
        tag = f"cofree.eulerian.{p.value}"
        es = ctx.sampler(tag).many(small, n)
        ctx.check(f"{tag}.idempotent", es,
                  lambda a: eulerian_idempotent(p, eulerian_idempotent(p, a)) == eulerian_idempotent(p, a))
        ctx.check(f"{tag}.kills_products", ctx.bounded_tuples(tag + ".k", 2, min(D, 4), n),
                  lambda a, b: not eulerian_idempotent(p, multiply(p, a, b)))
        ctx.check(f"{tag}.exp_of_eulerian", es,
                  lambda a: convolution_exponential(p, lambda x: eulerian_idempotent(p, x), a) == element(a))
        ctx.check(f"{tag}.decomposition", es, lambda a: eulerian_decomposition(p, a) == element(a))
        ctx.check(f"{tag}.nilpotent", es,
                  lambda a: not reduced_convolution_power(p, len(a.blocks) + 1, a))
        ctx.check(f"{tag}.convolution_unit", es,
                  lambda a: convolve(identity, unit_counit, p)(a) == element(a)
                  == convolve(unit_counit, identity, p)(a))
        ctx.check(f"{tag}.grading", es, lambda a: degrees_preserved(element(a), eulerian_idempotent(p, a)))
    for src, dst in [("sh2", "qsh"), ("qsh", "sh2"), ("sh2", "bsh"), ("bsh", "qsh")]:
        tag = f"cofree.transport.{src}_{dst}"
        ctx.check(f"{tag}.multiplicative", ctx.bounded_tuples(tag, 2, min(D, 4), max(1, n // 2)),
                  lambda a, b: hopf_transport(src, dst, multiply(src, a, b))
                  == multiply(dst, hopf_transport(src, dst, a), hopf_transport(src, dst, b)))
        ctx.check(f"{tag}.coproduct", ctx.sampler(tag + ".c").many(small, max(1, n // 2)),
                  lambda a: coproduct(hopf_transport(src, dst, a))
                  == tensor_map2(lambda x: hopf_transport(src, dst, x), coproduct(a)))

    def chain(a, b) -> bool:
        # qsh = Exp o bsh o (Log (x) Log) and Delta commutes with Exp and Log
        lhs = coproduct(multiply("qsh", a, b))
        la, lb = log_map("qsh", a), log_map("qsh", b)
        via = tensor_map2(lambda x: exp_map("qsh", x),
                          tensor_product_of("bsh", coproduct(la), coproduct(lb)))
        direct = tensor_product_of("qsh", coproduct(a), coproduct(b))
        return lhs == via == direct

    ctx.check("cofree.bialgebra_via_transport", ctx.bounded_tuples("cofree.chain", 2, min(D, 4), max(1, n // 2)), chain)
    if ctx.d >= 2:
        w = C(golden.COPRODUCT_WITNESS)
        psi_l = lambda x: lyndon_transport("bsh", "sh2", x)  # noqa: E731
        ctx.fact("cofree.lyndon_transport_not_coalgebra_map",
                 tensor_map2(psi_l, coproduct(w)) != coproduct(psi_l(w)))


def suite_oracles(ctx: Context) -> None:
    n, D = ctx.samples, ctx.max_degree
    pairs = [(a, b) for a in ctx.pool(D - 1) for b in ctx.pool(D - a.degree)] if D >= 2 else []
    for p in PRODUCTS:
        ctx.check(f"oracles.matrix_encoding.{p.value}", pairs,
                  lambda a, b: product_via_matrix_encoding(p, a, b) == multiply(p, a, b))
    ctx.check("oracles.shuffle_term_count", pairs,
              lambda a, b: sum(multiply("sh2", a, b).terms.values())
              == comb(a.rows + b.rows, a.rows) * comb(a.cols + b.cols, a.cols))
    ones = ctx.pool()

    def merges_agree(a) -> bool:
        return all(merge_action(a, I, J) == merge_via_brew(a, I, J)
                   for I in int_compositions(a.rows) for J in int_compositions(a.cols))

    ctx.check("oracles.merge_action_brew", ctx.sampler("oracles.merge").many(ones, n), merges_agree)
    ctx.check("oracles.phi_brew", ctx.sampler("oracles.phi").many(ones, n), lambda a: phi(a) == phi_via_brew(a))

    def brew_diag(l1, v1, l2, v2) -> bool:
        import numpy as np
        for U in brew_matrices(l1, v1):
            for V in brew_matrices(l2, v2):
                W = np.zeros((l1 + l2, v1 + v2), dtype=object)
                W[:l1, :v1] = U
                W[l1:, v1:] = V
                if not any((W == M).all() for M in brew_matrices(l1 + l2, v1 + v2)):
                    return False
                if brew_factorial(W) != brew_factorial(U) * brew_factorial(V):
                    return False
        return True

    sizes = [(l1, v1, l2, v2) for v1 in range(1, 4) for v2 in range(1, 4)
             for l1 in range(1, v1 + 1) for l2 in range(1, v2 + 1)]
    ctx.check("oracles.brew_diag_factorial", sizes, brew_diag)
    ctx.check("oracles.brew_bijection", [(v, l) for l in range(1, 6) for v in range(1, l + 1)],
              lambda v, l: sorted(brew_composition(M) for M in brew_matrices(v, l))
              == sorted(I for I in int_compositions(l) if len(I) == v))
    grid = [(m, s) for m in range(1, 5) for s in range(1, 5)]
    ctx.check("oracles.shuffle_enumeration", grid,
              lambda m, s: len(enumerate_shuffles(m, s)) == comb(m + s, m)
              and all(q.is_valid() for q in enumerate_shuffles(m, s)))

    def qsh_brute(m, s) -> bool:
        brute = set()
        for j in range(max(m, s), m + s + 1):
            for q in cartesian(range(1, j + 1), repeat=m + s):
                left, right = q[:m], q[m:]
                if set(q) == set(range(1, j + 1)) and all(x < y for x, y in zip(left, left[1:])) \
                        and all(x < y for x, y in zip(right, right[1:])):
                    brute.add(q)
        got = {x.assignment for x in enumerate_quasi_shuffles(m, s)}
        return got == brute and len(got) == delannoy(m, s)

    ctx.check("oracles.quasi_shuffle_enumeration", [(m, s) for m in range(1, 4) for s in range(1, 4)], qsh_brute)
    if ctx.d >= 3:
        import numpy as np
        from .encodings import act
        P = np.array([[1, 0, 0], [0, 0, 1], [0, 1, 0]], dtype=object)
        ctx.fact("oracles.sh_action_golden",
                 act(P, C("[1 e; 2 e; e 3]"), np.eye(2, dtype=int).astype(object)) == C("[1 e; e 3; 2 e]"))
        for text, expect in golden.SHUFFLE_EXAMPLES + golden.BLOCK_SHUFFLE_EXAMPLES + [golden.QUASI_SHUFFLE_EXAMPLE]:
            ctx.fact(f"oracles.product_golden[{text}]", parse_element(text) == E(expect))
    impls = kernels.backends()
    if len(impls) > 1:
        py, cy = impls["python"], impls["cython"]
        from .products import _qsh_tables, _shuffle_tables

        def same(a, b) -> bool:
            args_sh = (a.rows, a.cols, a.entries, b.rows, b.cols, b.entries,
                       _shuffle_tables(a.rows, b.rows), _shuffle_tables(a.cols, b.cols))
            args_q = (a.rows, a.cols, a.entries, b.rows, b.cols, b.entries,
                      _qsh_tables(a.rows, b.rows), _qsh_tables(a.cols, b.cols))
            return py.shuffle_product(*args_sh) == cy.shuffle_product(*args_sh) \
                and py.quasi_shuffle_product(*args_q) == cy.quasi_shuffle_product(*args_q)

        ctx.check("oracles.kernel_backends_agree", pairs[: max(n, 1)] if pairs else [], same)


_SUITES = {
    "hopf": suite_hopf,
    "orders": suite_orders,
    "lyndon": suite_lyndon,
    "hoffman": suite_hoffman,
    "cofree": suite_cofree,
    "oracles": suite_oracles,
}


def run_suite(name: str, max_degree: int = 4, samples: int = 100, seed: int = 0) -> Report:
    """Run one suite (or ``all``) and return a deterministic report."""
    if name != "all" and name not in _SUITES:
        raise ValueError(f"unknown suite {name!r}; expected one of {', '.join(SUITES)} or all")
    if max_degree < 1 or samples < 1:
        raise ValueError("max_degree and samples must be positive")
    ctx = Context(max_degree, samples, seed)
    for key in (SUITES if name == "all" else (name,)):
        _SUITES[key](ctx)
    return Report(name, seed, max_degree, samples, ctx.d, ctx.results)
