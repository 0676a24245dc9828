import os

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from matcomp import config
from matcomp.composition import MatrixComposition, parse_composition
from matcomp.monoid import letter_code
from matcomp.sampling import monomials_of_degree

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

# lines printed by tests/test_acceptance.py, repeated in the terminal summary
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(autouse=True)
def _default_alphabet():
    with config.settings(alphabet=4, max_terms=config.DEFAULT_MAX_TERMS):
        yield


def C(text: str) -> MatrixComposition:
    return parse_composition(text)


_CODES = [c for k in (0, 1, 1, 2) for c in monomials_of_degree(k, 4)]


@st.composite
def compositions(draw, max_rows: int = 3, max_cols: int = 3, allow_empty: bool = False):
    """Valid compositions over four letters with entries of degree at most 2."""
    if allow_empty and draw(st.integers(0, 9)) == 0:
        return MatrixComposition(0, 0, ())
    m = draw(st.integers(1, max_rows))
    n = draw(st.integers(1, max_cols))
    entries = list(draw(st.lists(st.sampled_from(_CODES), min_size=m * n, max_size=m * n)))
    # repair zero rows/columns by placing a letter on the diagonal-ish cell
    for r in range(m):
        if not any(entries[r * n:(r + 1) * n]):
            entries[r * n + r % n] = letter_code(1)
    for c in range(n):
        if not any(entries[c::n]):
            entries[(c % m) * n + c] = letter_code(2)
    return MatrixComposition.from_codes(m, n, entries)


def small(max_rows: int = 2, max_cols: int = 2):
    return compositions(max_rows, max_cols)
