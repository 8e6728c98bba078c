# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled bitset kernels; mirrors ``_pykernels`` exactly."""

from cython.parallel cimport prange
from libc.stdint cimport uint64_t, uint8_t
from libc.stdlib cimport malloc, free

cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil

MAX_TABLE_VERTICES = 32


cdef uint64_t* _load(adj, int n) except NULL:
    cdef uint64_t* a = <uint64_t*> malloc(max(n, 1) * sizeof(uint64_t))
    if a == NULL:
        raise MemoryError()
    cdef int i
    for i in range(n):
        a[i] = <uint64_t> adj[i]
    return a


cdef inline int _count(const uint64_t* adj, uint64_t mask) noexcept nogil:
    cdef int count = 0
    cdef uint64_t frontier, f, low, nb
    while mask:
        frontier = mask & (~mask + 1)
        mask ^= frontier
        while frontier:
            nb = 0
            f = frontier
            while f:
                low = f & (~f + 1)
                nb |= adj[__builtin_ctzll(low)]
                f ^= low
            frontier = nb & mask
            mask ^= frontier
        count += 1
    return count


def count_components(adj, mask):
    cdef int n = len(adj)
    if n > 64:
        raise ValueError("compiled kernels support at most 64 vertices")
    cdef uint64_t* a = _load(adj, n)
    try:
        return _count(a, <uint64_t> mask)
    finally:
        free(a)


def component_masks(adj, mask):
    cdef int n = len(adj)
    if n > 64:
        raise ValueError("compiled kernels support at most 64 vertices")
    cdef uint64_t* a = _load(adj, n)
    cdef uint64_t m = <uint64_t> mask
    cdef uint64_t comp, frontier, f, low, nb
    parts = []
    try:
        while m:
            frontier = m & (~m + 1)
            comp = frontier
            m ^= frontier
            while frontier:
                nb = 0
                f = frontier
                while f:
                    low = f & (~f + 1)
                    nb |= a[__builtin_ctzll(low)]
                    f ^= low
                frontier = nb & m
                m ^= frontier
                comp |= frontier
            parts.append(comp)
    finally:
        free(a)
    return parts


cdef void _fill_table(const uint64_t* a, int n, uint8_t* table, int threads) noexcept nogil:
    cdef long long size = (<long long> 1) << n
    cdef uint64_t full = (((<uint64_t> 1) << n) - 1) if n < 64 else ~(<uint64_t> 0)
    cdef long long t
    for t in prange(size, nogil=True, num_threads=threads, schedule="static"):
        table[t] = <uint8_t> _count(a, full ^ (<uint64_t> t))


def component_table(adj, int n, int threads=1):
    if n > MAX_TABLE_VERTICES:
        raise ValueError("table kernels support at most %d vertices" % MAX_TABLE_VERTICES)
    cdef uint64_t* a = _load(adj, n)
    out = bytearray((<long long> 1) << n)
    cdef uint8_t[::1] view = out
    try:
        _fill_table(a, n, &view[0], max(threads, 1))
    finally:
        free(a)
    return out


def cut_set_masks(adj, int n, int threads=1):
    if n > MAX_TABLE_VERTICES:
        raise ValueError("table kernels support at most %d vertices" % MAX_TABLE_VERTICES)
    cdef long long size = (<long long> 1) << n
    cdef uint64_t* a = _load(adj, n)
    cdef uint8_t* table = <uint8_t*> malloc(size)
    cdef uint8_t* keep = <uint8_t*> malloc(size)
    cdef long long t
    cdef uint64_t rest, low
    cdef uint8_t c, ok
    cdef int nthreads = max(threads, 1)
    if table == NULL or keep == NULL:
        free(a); free(table); free(keep)
        raise MemoryError()
    out = []
    try:
        with nogil:
            _fill_table(a, n, table, nthreads)
            for t in prange(size, num_threads=nthreads, schedule="static"):
                c = table[t]
                ok = 1
                rest = <uint64_t> t
                while rest:
                    low = rest & (~rest + 1)
                    if table[(<uint64_t> t) ^ low] >= c:
                        ok = 0
                        break
                    rest = rest ^ low
                keep[t] = ok
        for t in range(size):
            if keep[t]:
                out.append((t, table[t]))
    finally:
        free(a)
        free(table)
        free(keep)
    return out
