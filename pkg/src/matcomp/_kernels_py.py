"""Pure-Python product and merge kernels.

All kernels work on row-major tuples of packed monoid codes and on index
tables prepared (and cached) by the caller:

* a *shuffle table* row ``src`` lists, for each output position, the source
  position in ``diag(a, b)``;
* a *quasi-shuffle table* row lists, for each output position, a pair
  ``(i, j)`` of source positions in ``a`` and ``b`` (``-1`` when absent);
* a *grouping* is a tuple of ``(start, stop)`` ranges of consecutive
  positions to be merged.

The compiled module ``matcomp._kernels`` exports the same functions.
"""
from __future__ import annotations


def shuffle_product(m, n, a, s, t, b, row_table, col_table):
    """Multiplicity table ``{entries: count}`` of the ``(m+s) x (n+t)`` shuffle terms."""
    C = n + t
    pad_b = (0,) * t
    pad_a = (0,) * n
    drows = [a[r * n:(r + 1) * n] + pad_b for r in range(m)]
    drows += [pad_a + b[r * t:(r + 1) * t] for r in range(s)]
    counts: dict = {}
    get = counts.get
    for src_r in row_table:
        rows = [drows[i] for i in src_r]
        for src_c in col_table:
            key = tuple([row[c] for row in rows for c in src_c])
            counts[key] = get(key, 0) + 1
    return counts


def _merged_rows(m, n, a, s, t, b, pairs):
    pad_b = (0,) * t
    pad_a = (0,) * n
    out = []
    for i, j in pairs:
        left = a[i * n:(i + 1) * n] if i >= 0 else pad_a
        right = b[j * t:(j + 1) * t] if j >= 0 else pad_b
        out.append(left + right)
    return out


def quasi_shuffle_product(m, n, a, s, t, b, row_table, col_table):
    """Multiplicity table ``{(rows, cols, entries): count}`` of all quasi-shuffle terms."""
    counts: dict = {}
    get = counts.get
    col_specs = []
    for pairs in col_table:
        col_specs.append((len(pairs), [(i, n + j if j >= 0 else -1) for i, j in pairs]))
    for rpairs in row_table:
        rows = _merged_rows(m, n, a, s, t, b, rpairs)
        nr = len(rows)
        for nc, cpairs in col_specs:
            entries = []
            for row in rows:
                for i, j in cpairs:
                    if i < 0:
                        entries.append(row[j])
                    elif j < 0:
                        entries.append(row[i])
                    else:
                        entries.append(row[i] + row[j])
            key = (nr, nc, tuple(entries))
            counts[key] = get(key, 0) + 1
    return counts


def merge_sum(m, n, a, row_groupings, row_weights, col_groupings, col_weights):
    """``{(rows, cols, entries): sum of row_weight * col_weight}`` over all merge actions."""
    out: dict = {}
    merged_cols = []
    for gi, grouping in enumerate(row_groupings):
        rows = []
        for start, stop in grouping:
            acc = list(a[start * n:(start + 1) * n])
            for r in range(start + 1, stop):
                base = r * n
                for c in range(n):
                    acc[c] += a[base + c]
            rows.append(acc)
        merged_cols.append((rows, row_weights[gi]))
    for rows, wr in merged_cols:
        if not wr:
            continue
        for gj, grouping in enumerate(col_groupings):
            wc = col_weights[gj]
            if not wc:
                continue
            entries = []
            for row in rows:
                for start, stop in grouping:
                    v = row[start]
                    for c in range(start + 1, stop):
                        v += row[c]
                    entries.append(v)
            key = (len(rows), len(grouping), tuple(entries))
            w = out.get(key, 0) + wr * wc
            if w:
                out[key] = w
            else:
                out.pop(key, None)
    return out
