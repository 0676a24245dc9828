import os
import subprocess
import sys

import pytest
from hypothesis import given

from conftest import compositions
from matcomp import kernels
from matcomp.hoffman import _groupings, _scaled_inv_signed
from matcomp.products import _qsh_tables, _shuffle_tables

BACKENDS = kernels.backends()


def test_selected_backend_is_available():
    assert kernels.BACKEND in BACKENDS


@pytest.mark.skipif(len(BACKENDS) < 2, reason="compiled kernels not built")
@given(compositions(3, 3), compositions(2, 3))
def test_backends_agree(a, b):
    py, cy = BACKENDS["python"], BACKENDS["cython"]
    args = (a.rows, a.cols, a.entries, b.rows, b.cols, b.entries)
    sh = args + (_shuffle_tables(a.rows, b.rows), _shuffle_tables(a.cols, b.cols))
    qs = args + (_qsh_tables(a.rows, b.rows), _qsh_tables(a.cols, b.cols))
    assert py.shuffle_product(*sh) == cy.shuffle_product(*sh)
    assert py.quasi_shuffle_product(*qs) == cy.quasi_shuffle_product(*qs)
    rg, cg = _groupings(a.rows), _groupings(a.cols)
    merge = (a.rows, a.cols, a.entries,
             tuple(g for _, g in rg), tuple(_scaled_inv_signed(I) for I, _ in rg),
             tuple(g for _, g in cg), tuple(_scaled_inv_signed(J) for J, _ in cg))
    assert py.merge_sum(*merge) == cy.merge_sum(*merge)


def test_pure_python_fallback():
    code = (
        "from matcomp import kernels, verify\n"
        "assert kernels.BACKEND == 'python', kernels.BACKEND\n"
        "r = verify.run_suite('hopf', 3, 15, 0)\n"
        "print(kernels.BACKEND, r.passed)\n"
    )
    proc = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True,
                          env={**os.environ, "MATCOMP_PURE_PYTHON": "1"})
    assert proc.returncode == 0, proc.stderr
    assert proc.stdout.split() == ["python", "True"]
