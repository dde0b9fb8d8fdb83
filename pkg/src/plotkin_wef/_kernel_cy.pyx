# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled core of the interleaver-average combine.

Same contract as _kernel_py: loop bookkeeping runs in C while the coefficient
arithmetic stays on arbitrary-precision Python integers.
"""


def single_weight_numerator(Py_ssize_t n, list u_hat, list v_hat, list rows, Py_ssize_t w):
    cdef Py_ssize_t lo, hi, wv, a, top, i
    cdef list row_n, row_a, row_b
    cdef object total, inner, vv, uu
    row_n = <list> rows[n]
    lo = w - n if w > n else 0
    hi = w if w < n else n
    total = 0
    for wv in range(lo, hi + 1):
        vv = v_hat[wv]
        if not vv:
            continue
        a = w - wv
        row_a = <list> rows[a]
        row_b = <list> rows[n - a]
        top = wv if wv < a else a
        inner = 0
        for i in range(lo, top + 1):
            uu = u_hat[w - 2 * i]
            if uu:
                inner = inner + (<object> row_a[i]) * (<object> row_b[wv - i]) * uu
        if inner:
            total = total + (<object> row_n[a]) * vv * inner
    return total


def combine_numerators(Py_ssize_t n, list u_hat, list v_hat, list rows):
    cdef Py_ssize_t w
    return [single_weight_numerator(n, u_hat, v_hat, rows, w) for w in range(2 * n + 1)]
