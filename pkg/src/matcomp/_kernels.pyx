# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False, cdivision=True
"""Compiled product and merge kernels.

Same contracts as ``matcomp._kernels_py``; index tables are copied into C
arrays once per call and the output tuples are filled without going through
Python-level iteration.
"""
from cpython.ref cimport Py_INCREF
from cpython.tuple cimport PyTuple_New, PyTuple_SET_ITEM
from libc.stdlib cimport free, malloc


cdef int *_flatten_table(object table, Py_ssize_t width) except NULL:
    cdef Py_ssize_t n = len(table), i, k
    cdef int *out = <int *> malloc((n * width + 1) * sizeof(int))
    if out == NULL:
        raise MemoryError()
    i = 0
    for row in table:
        for k in range(width):
            out[i * width + k] = row[k]
        i += 1
    return out


def shuffle_product(int m, int n, tuple a, int s, int t, tuple b, row_table, col_table):
    cdef Py_ssize_t R = m + s, C = n + t, N = R * C
    cdef Py_ssize_t nrt = len(row_table), nct = len(col_table)
    cdef Py_ssize_t ir, ic, u, v, k, base, r, c
    cdef int *rt = _flatten_table(row_table, R)
    cdef int *ct = _flatten_table(col_table, C)
    cdef list D = [0] * N
    cdef dict counts = {}
    cdef object key, x
    try:
        for r in range(m):
            for c in range(n):
                D[r * C + c] = a[r * n + c]
        for r in range(s):
            for c in range(t):
                D[(m + r) * C + n + c] = b[r * t + c]
        for ir in range(nrt):
            for ic in range(nct):
                key = PyTuple_New(N)
                k = 0
                for u in range(R):
                    base = rt[ir * R + u] * C
                    for v in range(C):
                        x = D[base + ct[ic * C + v]]
                        Py_INCREF(x)
                        PyTuple_SET_ITEM(key, k, x)
                        k += 1
                counts[key] = counts.get(key, 0) + 1
    finally:
        free(rt)
        free(ct)
    return counts


cdef int _pair_table(object table, int **first, int **second, int **offsets, int **lengths) except -1:
    cdef Py_ssize_t n = len(table), total = 0, i = 0, k = 0
    for row in table:
        total += len(row)
    first[0] = <int *> malloc((total + 1) * sizeof(int))
    second[0] = <int *> malloc((total + 1) * sizeof(int))
    offsets[0] = <int *> malloc((n + 1) * sizeof(int))
    lengths[0] = <int *> malloc((n + 1) * sizeof(int))
    if first[0] == NULL or second[0] == NULL or offsets[0] == NULL or lengths[0] == NULL:
        raise MemoryError()
    for row in table:
        offsets[0][i] = k
        lengths[0][i] = len(row)
        for p in row:
            first[0][k] = p[0]
            second[0][k] = p[1]
            k += 1
        i += 1
    return 0


def quasi_shuffle_product(int m, int n, tuple a, int s, int t, tuple b, row_table, col_table):
    cdef int *ra = NULL
    cdef int *rb = NULL
    cdef int *roff = NULL
    cdef int *rlen = NULL
    cdef int *ca = NULL
    cdef int *cb = NULL
    cdef int *coff = NULL
    cdef int *clen = NULL
    cdef Py_ssize_t nrt = len(row_table), nct = len(col_table)
    cdef Py_ssize_t ir, ic, u, v, k, nr, nc
    cdef int ia, ib, ja, jb
    cdef dict counts = {}
    cdef object key, x, y, zero = 0
    try:
        _pair_table(row_table, &ra, &rb, &roff, &rlen)
        _pair_table(col_table, &ca, &cb, &coff, &clen)
        for ir in range(nrt):
            nr = rlen[ir]
            for ic in range(nct):
                nc = clen[ic]
                key = PyTuple_New(nr * nc)
                k = 0
                for u in range(nr):
                    ia = ra[roff[ir] + u]
                    ib = rb[roff[ir] + u]
                    for v in range(nc):
                        ja = ca[coff[ic] + v]
                        jb = cb[coff[ic] + v]
                        if ia >= 0 and ja >= 0:
                            x = a[ia * n + ja]
                            if ib >= 0 and jb >= 0:
                                y = b[ib * t + jb]
                                if y:
                                    x = x + y
                        elif ib >= 0 and jb >= 0:
                            x = b[ib * t + jb]
                        else:
                            x = zero
                        Py_INCREF(x)
                        PyTuple_SET_ITEM(key, k, x)
                        k += 1
                full = (nr, nc, key)
                counts[full] = counts.get(full, 0) + 1
    finally:
        free(ra); free(rb); free(roff); free(rlen)
        free(ca); free(cb); free(coff); free(clen)
    return counts


def merge_sum(int m, int n, tuple a, row_groupings, row_weights, col_groupings, col_weights):
    cdef dict out = {}
    cdef list merged = []
    cdef list acc, rows
    cdef Py_ssize_t r, c, start, stop, gi, gj, k, nrows, ncols
    cdef object v, w, key
    for gi in range(len(row_groupings)):
        rows = []
        for start, stop in row_groupings[gi]:
            acc = list(a[start * n:(start + 1) * n])
            for r in range(start + 1, stop):
                for c in range(n):
                    acc[c] = acc[c] + a[r * n + c]
            rows.append(acc)
        merged.append(rows)
    for gi in range(len(row_groupings)):
        wr = row_weights[gi]
        if not wr:
            continue
        rows = merged[gi]
        nrows = len(rows)
        for gj in range(len(col_groupings)):
            wc = col_weights[gj]
            if not wc:
                continue
            grouping = col_groupings[gj]
            ncols = len(grouping)
            key = PyTuple_New(nrows * ncols)
            k = 0
            for row in rows:
                for start, stop in grouping:
                    v = (<list> row)[start]
                    for c in range(start + 1, stop):
                        v = v + (<list> row)[c]
                    Py_INCREF(v)
                    PyTuple_SET_ITEM(key, k, v)
                    k += 1
            full = (nrows, ncols, key)
            w = out.get(full, 0) + wr * wc
            if w:
                out[full] = w
            else:
                out.pop(full, None)
    return out
