"""Kernel backend selection.

The compiled extension ``matcomp._kernels`` is used when it imports; otherwise
the pure-Python module is used.  Setting ``MATCOMP_PURE_PYTHON=1`` forces the
fallback.  Both backends return identical tables.
"""
from __future__ import annotations

import os

from . import _kernels_py

BACKEND = "python"
_compiled = None

if os.environ.get("MATCOMP_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as _compiled  # type: ignore[attr-defined]
        BACKEND = "cython"
    except ImportError:  # extension not built
        _compiled = None

_impl = _compiled if _compiled is not None else _kernels_py

shuffle_product = _impl.shuffle_product
quasi_shuffle_product = _impl.quasi_shuffle_product
merge_sum = _impl.merge_sum


def backends() -> dict:
    """All importable backends by name (used by tests and the benchmark)."""
    out = {"python": _kernels_py}
    if _compiled is not None:
        out["cython"] = _compiled
    return out
