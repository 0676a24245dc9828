"""Exact computation in the Hopf algebra of matrix compositions.

Compositions are immutable grids of monomials; elements of H are sparse rational
combinations of them.  Three commutative products (``sh2``, ``qsh``, ``bsh``)
share the deconcatenation coproduct.
"""
from . import config
from .algebra import HElement, HTensor, counit, element, leading_monomial, leading_term, tensor
from .coalgebra import (
    antipode,
    convolution_exponential,
    convolve,
    coproduct,
    eulerian_decomposition,
    eulerian_idempotent,
    reduced_convolution_power,
    reduced_coproduct,
)
from .cofree import cofree_extend, exp_map, hopf_transport, log_map, pi_blockcount, pi_connected
from .composition import (
    EMPTY,
    MatrixComposition,
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
from .errors import (
    AlphabetError,
    CompositionError,
    ContractViolation,
    DomainError,
    MatcompError,
    ParseError,
    SizeCapExceeded,
)
from .expr import evaluate, evaluate_text, parse, parse_element, to_text
from .hoffman import SeriesCoeffs, evaluate_map, merge_action, phi, phi_inv, series_compose
from .lyndon import (
    GeneratorPolynomial,
    b_of_lyndon,
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
    block_shuffle,
    enumerate_quasi_shuffles,
    enumerate_shuffles,
    multiply,
    quasi_shuffle,
    shuffle2,
)
from .verify import run_suite

__version__ = "0.1.0"


def clear_caches() -> None:
    """Drop every memoised product, map and rewrite table."""
    from . import coalgebra, cofree, hoffman, lyndon, products
    for mod in (products, coalgebra, lyndon, hoffman, cofree):
        mod.clear_caches()


def C(text: str) -> MatrixComposition:
    """Shorthand for :func:`parse_composition`."""
    return parse_composition(text)


def E(text: str) -> HElement:
    """Shorthand for :func:`parse_element`."""
    return parse_element(text)


__all__ = [name for name in dir() if not name.startswith("_")]
