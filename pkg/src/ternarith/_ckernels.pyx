# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; same contract as ternarith._pykernels."""
from libc.stdlib cimport malloc, free

import numpy as np

NAME = "cython"

# above this modulus the repetition search uses a dict instead of a table
cdef long long SEEN_TABLE_MAX = 1 << 25


cdef inline void _clear(unsigned char[::1] bits, long long i) noexcept nogil:
    bits[i >> 3] &= ~(1 << (i & 7))


cdef inline bint _test(const unsigned char[::1] bits, long long i) noexcept nogil:
    return (bits[i >> 3] >> (i & 7)) & 1


def eratosthenes(long long n):
    out = bytearray(b"\xff" * ((n + 8) // 8))
    cdef unsigned char[::1] bits = out
    cdef long long p, i, top = (<long long>len(out)) * 8
    # clear padding past n, then 0 and 1
    for i in range(n + 1, top):
        _clear(bits, i)
    _clear(bits, 0)
    _clear(bits, 1)
    with nogil:
        p = 2
        while p * p <= n:
            if _test(bits, p):
                i = p * p
                while i <= n:
                    _clear(bits, i)
                    i += p
            p += 1
    return out


def ternary_stages(bytearray buf, long long n, primes):
    cdef unsigned char[::1] bits = buf
    cdef const long long[::1] ps = np.ascontiguousarray(primes, dtype=np.int64)
    cdef Py_ssize_t j, lo, np_ = ps.shape[0]
    cdef long long k = 1, p, shift, start
    with nogil:
        lo = 0
        while 3 * k * k + 3 * k + 1 <= n:
            shift = k * (k + 1)
            while lo < np_ and ps[lo] < 2 * k + 1:
                lo += 1
            for j in range(lo, np_):
                p = ps[j]
                start = p * p - shift
                if start > n:
                    break
                while start <= n:
                    _clear(bits, start)
                    start += p
            k += 1
    return k - 1


def first_repetition(long long n):
    cdef long long last = (n - 1) // 2, i, r = 0
    cdef int *seen
    cdef list residues = []
    if n > SEEN_TABLE_MAX:
        return _first_repetition_dict(n)
    seen = <int *> malloc(n * sizeof(int))
    if seen == NULL:
        raise MemoryError()
    try:
        for i in range(n):
            seen[i] = -1
        for i in range(last + 1):
            if i:
                r = (r - 2 * i) % n
                if r < 0:
                    r += n
            residues.append(r)
            if seen[r] >= 0:
                return residues, seen[r], i
            seen[r] = <int> i
        return residues, -1, -1
    finally:
        free(seen)


def _first_repetition_dict(long long n):
    cdef long long last = (n - 1) // 2, i, r = 0
    cdef dict seen = {}
    cdef list residues = []
    for i in range(last + 1):
        if i:
            r = (r - 2 * i) % n
            if r < 0:
                r += n
        residues.append(r)
        j = seen.get(r)
        if j is not None:
            return residues, j, i
        seen[r] = i
    return residues, -1, -1


def direct_scan(bytearray buf, long long n, primes, is_prime):
    cdef const unsigned char[::1] bits = buf
    cdef const long long[::1] ps = np.ascontiguousarray(primes, dtype=np.int64)
    cdef Py_ssize_t j
    cdef long long p, k, v
    cdef bint ok
    cdef list out = []
    for j in range(ps.shape[0]):
        p = ps[j]
        ok = True
        for k in range(1, p - 1):
            v = p + k * (k + 1)
            if v <= n:
                if not _test(bits, v):
                    ok = False
                    break
            elif not is_prime(v):
                ok = False
                break
        if ok:
            out.append(p)
    return out
