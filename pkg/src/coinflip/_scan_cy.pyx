# cython: language_level=3
# cython: boundscheck=False, wraparound=False
"""Compiled translation scan.

Same contract as coinflip._scan.scan_pairs. Packs each candidate shift
(da, db) into one 64-bit key (32 bits per component, offset to unsigned),
sorts the key multiset, and reads maxima off the runs. The packing is
monotone in (da, db), so runs come out already in ascending shift order.

Callers must keep |coordinates| below 2**30 so the packed components fit;
coinflip.oracle checks that before dispatching here.
"""

from libc.stdint cimport int64_t, uint64_t
from libcpp.vector cimport vector

cdef extern from "<algorithm>" namespace "std" nogil:
    void sort[Iter](Iter first, Iter last)

cdef int64_t OFFSET = (<int64_t> 1) << 31


def scan_pairs(start, flipped):
    """Best overlap over all translations of `flipped` onto `start`.

    Returns (max_overlap, shifts) identical to the pure implementation.
    """
    cdef Py_ssize_t ns = len(start)
    cdef Py_ssize_t nf = len(flipped)
    if ns == 0 or nf == 0:
        raise ValueError("scan_pairs requires nonempty point lists")

    cdef vector[int64_t] sa, sb, fa, fb
    sa.reserve(ns)
    sb.reserve(ns)
    fa.reserve(nf)
    fb.reserve(nf)
    cdef int64_t x, y
    for x, y in start:
        sa.push_back(x)
        sb.push_back(y)
    for x, y in flipped:
        fa.push_back(x)
        fb.push_back(y)

    cdef vector[uint64_t] keys
    keys.reserve(ns * nf)
    cdef Py_ssize_t i, j, k, run_start, n_keys
    cdef Py_ssize_t best = 0
    cdef int64_t da, db
    cdef uint64_t key
    with nogil:
        for i in range(ns):
            for j in range(nf):
                da = sa[i] - fa[j]
                db = sb[i] - fb[j]
                key = (<uint64_t> (da + OFFSET) << 32) | <uint64_t> (db + OFFSET)
                keys.push_back(key)
        sort(keys.begin(), keys.end())
        n_keys = <Py_ssize_t> keys.size()
        k = 0
        while k < n_keys:
            run_start = k
            while k < n_keys and keys[k] == keys[run_start]:
                k += 1
            if k - run_start > best:
                best = k - run_start

    shifts = []
    k = 0
    while k < n_keys:
        run_start = k
        while k < n_keys and keys[k] == keys[run_start]:
            k += 1
        if k - run_start == best:
            key = keys[run_start]
            shifts.append((
                <int64_t> (key >> 32) - OFFSET,
                <int64_t> (key & 0xFFFFFFFFu) - OFFSET,
            ))
    return best, shifts
