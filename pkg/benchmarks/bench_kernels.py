"""Time the pure-Python and compiled product/merge kernels on the same inputs.

    python benchmarks/bench_kernels.py [--repeat N]

Each workload calls the kernel directly with cached index tables, so the
numbers measure the inner loops only.
"""
from __future__ import annotations

import argparse
import timeit

from matcomp import kernels
from matcomp.composition import parse_composition
from matcomp.hoffman import _groupings, _scaled_inv_factorial
from matcomp.products import _qsh_tables, _shuffle_tables


def workloads():
    a = parse_composition("[1 e 2; e 3 e; 4 e 1]")
    b = parse_composition("[2 1; e 3; 4 e]")
    c = parse_composition("[1 2 e e; e 3 1 e; e e 2 4; 3 e e 1]")
    yield "sh2 3x3 . 3x2", "shuffle_product", (
        a.rows, a.cols, a.entries, b.rows, b.cols, b.entries,
        _shuffle_tables(a.rows, b.rows), _shuffle_tables(a.cols, b.cols))
    yield "qsh 3x3 . 3x2", "quasi_shuffle_product", (
        a.rows, a.cols, a.entries, b.rows, b.cols, b.entries,
        _qsh_tables(a.rows, b.rows), _qsh_tables(a.cols, b.cols))
    rg, cg = _groupings(c.rows), _groupings(c.cols)
    yield "phi merges 4x4", "merge_sum", (
        c.rows, c.cols, c.entries,
        tuple(g for _, g in rg), tuple(_scaled_inv_factorial(I) for I, _ in rg),
        tuple(g for _, g in cg), tuple(_scaled_inv_factorial(J) for J, _ in cg))


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    impls = kernels.backends()
    if "cython" not in impls:
        print("compiled backend not built; only the Python kernels are timed")
    print(f"{'workload':<18}" + "".join(f"{name:>14}" for name in impls) + ("     speedup" if len(impls) > 1 else ""))
    for label, fn, call_args in workloads():
        results = {name: getattr(mod, fn)(*call_args) for name, mod in impls.items()}
        if len({repr(sorted(r.items())) for r in results.values()}) != 1:
            raise SystemExit(f"backends disagree on {label}")
        times = {}
        for name, mod in impls.items():
            f = getattr(mod, fn)
            number = 20
            best = min(timeit.repeat(lambda: f(*call_args), number=number, repeat=args.repeat))
            times[name] = best / number
        row = f"{label:<18}" + "".join(f"{times[n] * 1e3:>12.3f}ms" for n in impls)
        if len(impls) > 1:
            row += f"{times['python'] / times['cython']:>11.1f}x"
        print(row)


if __name__ == "__main__":
    main()
