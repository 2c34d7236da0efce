# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled scan kernels; same contracts as z2z4.kernels.pure."""

import numpy as np

cdef int _LEE[4]
_LEE[0] = 0
_LEE[1] = 1
_LEE[2] = 2
_LEE[3] = 1

DEF MAX_WIDTH = 256


def lee_weights(mat, int alpha):
    """Lee weight of every row."""
    cdef const unsigned char[:, ::1] m = np.ascontiguousarray(mat, dtype=np.uint8)
    cdef Py_ssize_t n = m.shape[0], width = m.shape[1]
    out = np.zeros(n, dtype=np.int64)
    cdef long long[::1] ov = out
    cdef Py_ssize_t i, j
    cdef long long s
    for i in range(n):
        s = 0
        for j in range(alpha):
            if m[i, j]:
                s += 1
        for j in range(alpha, width):
            s += _LEE[m[i, j]]
        ov[i] = s
    return out


cdef long long _scan(const unsigned char[:, ::1] gens, int alpha, int beta,
                     unsigned char[:, ::1] out, bint fill):
    """Odometer over the ambient space in lex order, keeping orthogonal words.

    Running sums track the Z4-valued form against each generator so the
    amortized cost per word is O(#generators), not O(width).
    """
    cdef int width = alpha + beta
    cdef Py_ssize_t g = gens.shape[0]
    cdef long long total = (<long long> 1 << alpha) * (<long long> 1 << (2 * beta))
    cdef unsigned char dig[MAX_WIDTH]
    cdef unsigned char radix[MAX_WIDTH]
    coef_arr = np.zeros((max(g, 1), width), dtype=np.int64)
    cdef long long[:, ::1] coef = coef_arr
    sums_arr = np.zeros(max(g, 1), dtype=np.int64)
    cdef long long[::1] sums = sums_arr
    cdef Py_ssize_t k
    cdef int j
    cdef long long step, count = 0
    cdef bint ok

    for j in range(width):
        dig[j] = 0
        radix[j] = 2 if j < alpha else 4
    for k in range(g):
        for j in range(width):
            coef[k, j] = (2 * gens[k, j]) if j < alpha else gens[k, j]
        sums[k] = 0

    for step in range(total):
        ok = True
        for k in range(g):
            if sums[k] & 3:
                ok = False
                break
        if ok:
            if fill:
                for j in range(width):
                    out[count, j] = dig[j]
            count += 1
        # increment the mixed-radix odometer, updating the running forms
        j = width - 1
        while j >= 0:
            if dig[j] + 1 < radix[j]:
                dig[j] += 1
                for k in range(g):
                    sums[k] += coef[k, j]
                break
            for k in range(g):
                sums[k] -= coef[k, j] * dig[j]
            dig[j] = 0
            j -= 1
    return count


def ambient_orthogonal(gens, int alpha, int beta):
    """Every ambient word orthogonal to all generator rows, in lex order."""
    cdef int width = alpha + beta
    if width > MAX_WIDTH:
        raise ValueError(f"width {width} exceeds compiled kernel limit {MAX_WIDTH}")
    g = np.ascontiguousarray(gens, dtype=np.uint8).reshape(-1, width)
    empty = np.zeros((0, width), dtype=np.uint8)
    cdef long long count = _scan(g, alpha, beta, empty, False)
    out = np.zeros((count, width), dtype=np.uint8)
    if count:
        _scan(g, alpha, beta, out, True)
    return out


def permuted_equals(mat, perm, target) -> bool:
    """Does permuting the columns of ``mat`` by ``perm`` give the row set of ``target``?

    ``target`` must be lex-sorted with distinct rows.
    """
    cdef const unsigned char[:, ::1] m = np.ascontiguousarray(mat, dtype=np.uint8)
    cdef const unsigned char[:, ::1] t = np.ascontiguousarray(target, dtype=np.uint8)
    cdef const long long[::1] p = np.ascontiguousarray(perm, dtype=np.int64)
    cdef Py_ssize_t n = m.shape[0], width = m.shape[1]
    if t.shape[0] != n or t.shape[1] != width:
        return False
    if width > MAX_WIDTH:
        raise ValueError(f"width {width} exceeds compiled kernel limit {MAX_WIDTH}")
    cdef unsigned char buf[MAX_WIDTH]
    cdef Py_ssize_t i, j, lo, hi, mid
    cdef int cmp
    for i in range(n):
        for j in range(width):
            buf[j] = m[i, p[j]]
        lo = 0
        hi = n
        cmp = -1
        while lo < hi:
            mid = (lo + hi) >> 1
            cmp = 0
            for j in range(width):
                if t[mid, j] < buf[j]:
                    cmp = -1
                    break
                if t[mid, j] > buf[j]:
                    cmp = 1
                    break
            if cmp < 0:
                lo = mid + 1
            elif cmp > 0:
                hi = mid
            else:
                break
        if cmp != 0:
            return False
    return True
