# cython: language_level=3
# cython: boundscheck=False, wraparound=False, initializedcheck=False, cdivision=True
"""Compiled implementations of the hot kernels.

Mirrors fasthough._core_py function for function; see that module for the
shared conventions.  All arithmetic is int64 and every quantity that the
fallback computes is reproduced bit for bit.  cdivision only ever divides
non-negative values here.
"""

import numpy as np

NAME = "c"


cdef inline long long _rot_left(long long v, int p, long long mask) noexcept nogil:
    return ((v << 1) & mask) | (v >> (p - 1))


cdef inline long long _absll(long long v) noexcept nogil:
    return -v if v < 0 else v


def _rotation_values_arr(int p):
    """(p, 2**p) int64 table of f(rot_r(x)); f(v) = -v if 2v < m else m - v."""
    cdef long long n = (<long long>1) << p
    cdef long long m = n - 1
    out_arr = np.empty((p, n), dtype=np.int64)
    cdef long long[:, ::1] out = out_arr
    cdef long long x, v
    cdef int r
    with nogil:
        for x in range(n):
            v = x
            for r in range(p):
                out[r, x] = -v if 2 * v < m else m - v
                v = _rot_left(v, p, m)
    return out_arr


def per_slope_max(int p):
    cdef long long n = (<long long>1) << p
    values_arr = _rotation_values_arr(p)
    cdef long long[:, ::1] values = values_arr
    out_arr = np.zeros(n, dtype=np.int64)
    acc_arr = np.zeros(n, dtype=np.int64)
    cdef long long[::1] out = out_arr
    cdef long long[::1] acc = acc_arr
    cdef long long k, g, prev = 0, diff, best, x, e
    cdef int bit
    with nogil:
        for k in range(1, n):
            g = k ^ (k >> 1)
            diff = g ^ prev
            bit = 0
            while (diff >> (bit + 1)) != 0:
                bit += 1
            best = 0
            if (g >> bit) & 1:
                for x in range(n):
                    acc[x] += values[bit, x]
                    e = _absll(acc[x])
                    if e > best:
                        best = e
            else:
                for x in range(n):
                    acc[x] -= values[bit, x]
                    e = _absll(acc[x])
                    if e > best:
                        best = e
            out[g] = best
            prev = g
    return out_arr


def per_slope_max_range(int p, long long lo, long long hi):
    cdef long long n = (<long long>1) << p
    values_arr = _rotation_values_arr(p)
    cdef long long[:, ::1] values = values_arr
    out_arr = np.zeros(hi - lo, dtype=np.int64)
    cdef long long[::1] out = out_arr
    cdef long long t, x, e, best, tt
    cdef int r
    with nogil:
        for t in range(lo, hi):
            if t == 0:
                continue
            best = 0
            for x in range(n):
                e = 0
                tt = t
                while tt != 0:
                    r = 0
                    while not (tt >> r) & 1:
                        r += 1
                    e += values[r, x]
                    tt &= tt - 1
                e = _absll(e)
                if e > best:
                    best = e
            out[t - lo] = best
    return out_arr


cdef inline long long _bin_index(long long num, long long p, long long m,
                                 long long bins) noexcept nogil:
    # Exact uniform bin on [-p/2, p/2]; edge values go away from zero
    # (zero on an edge goes up).  scaled > 0 since |num| < p*m/2.
    cdef long long scaled = bins * (2 * num + p * m)
    cdef long long span = 2 * p * m
    cdef long long idx = scaled / span
    if scaled % span == 0 and num < 0:
        idx -= 1
    return idx


def hist_counts(int p, long long bins):
    cdef long long n = (<long long>1) << p
    cdef long long m = n - 1
    values_arr = _rotation_values_arr(p)
    cdef long long[:, ::1] values = values_arr
    counts_arr = np.zeros(bins, dtype=np.int64)
    acc_arr = np.zeros(n, dtype=np.int64)
    cdef long long[::1] counts = counts_arr
    cdef long long[::1] acc = acc_arr
    cdef long long k, g, prev = 0, diff, x
    cdef int bit
    with nogil:
        counts[_bin_index(0, p, m, bins)] += n  # t = 0 row
        for k in range(1, n):
            g = k ^ (k >> 1)
            diff = g ^ prev
            bit = 0
            while (diff >> (bit + 1)) != 0:
                bit += 1
            if (g >> bit) & 1:
                for x in range(n):
                    acc[x] += values[bit, x]
                    counts[_bin_index(acc[x], p, m, bins)] += 1
            else:
                for x in range(n):
                    acc[x] -= values[bit, x]
                    counts[_bin_index(acc[x], p, m, bins)] += 1
            prev = g
    return counts_arr


def hist_counts_range(int p, long long lo, long long hi, long long bins):
    cdef long long n = (<long long>1) << p
    cdef long long m = n - 1
    values_arr = _rotation_values_arr(p)
    cdef long long[:, ::1] values = values_arr
    counts_arr = np.zeros(bins, dtype=np.int64)
    cdef long long[::1] counts = counts_arr
    cdef long long t, x, e, tt
    cdef int r
    with nogil:
        for t in range(lo, hi):
            for x in range(n):
                e = 0
                tt = t
                while tt != 0:
                    r = 0
                    while not (tt >> r) & 1:
                        r += 1
                    e += values[r, x]
                    tt &= tt - 1
                counts[_bin_index(e, p, m, bins)] += 1
    return counts_arr


def table_sums_range(int p, long long lo, long long hi):
    cdef long long n = (<long long>1) << p
    cdef long long m = n - 1
    cdef long long half = n >> 1
    out_arr = np.zeros(hi - lo, dtype=np.int64)
    cdef long long[::1] out = out_arr
    cdef long long x, v, s
    cdef int r
    with nogil:
        for x in range(lo, hi):
            v = x
            s = 0
            for r in range(p):
                if v < half:
                    s += v
                v = _rot_left(v, p, m)
            out[x - lo] = s
    return out_arr


def table_sums(int p):
    return table_sums_range(p, 0, (<long long>1) << p)


def fht_accumulate(pixels):
    """Butterfly accumulation; see the fallback for the contract.

    Counts one addition per output cell of every merge stage, which is also
    exactly what the loop performs.
    """
    pixels = np.ascontiguousarray(pixels, dtype=np.int64)
    cdef const long long[:, ::1] img = pixels
    cdef long long n = img.shape[0]
    cdef int p = 0
    while (<long long>1 << p) < n:
        p += 1
    cdef long long ws = 2 * n - 1
    buf_a_arr = np.zeros(n * ws, dtype=np.int64)
    buf_b_arr = np.zeros(n * ws, dtype=np.int64)
    cdef long long[::1] a = buf_a_arr
    cdef long long[::1] b = buf_b_arr
    cdef long long[::1] tmp
    cdef long long j, t, s, w, nw, half_t, off, lbase, rbase, obase, rs
    cdef long long nadds = 0
    cdef int stage
    with nogil:
        for j in range(n):
            for s in range(n):
                a[j * ws + s] = img[s, j]
        for stage in range(p):
            w = (<long long>1) << stage
            nw = 2 * w
            for j in range(n // nw):
                for t in range(nw):
                    half_t = t >> 1
                    off = (t + 1) >> 1
                    lbase = ((2 * j) * w + half_t) * ws
                    rbase = ((2 * j + 1) * w + half_t) * ws
                    obase = (j * nw + t) * ws
                    for s in range(ws):
                        rs = s + off
                        if rs < ws:
                            b[obase + s] = a[lbase + s] + a[rbase + rs]
                        else:
                            b[obase + s] = a[lbase + s] + 0
                    nadds += ws
            tmp = a
            a = b
            b = tmp
    cells = np.asarray(a).reshape(n, ws).copy()
    return cells, int(nadds)
