# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled double-description hot loops (same contract as _pykernels)."""

from libc.stdint cimport uint64_t
from libc.stdlib cimport malloc, free

cdef extern from *:
    int __builtin_popcountll(unsigned long long)

cdef uint64_t _LOW = 0xFFFFFFFFFFFFFFFF


def adjacent_pairs(list masks, list pos, list neg, int min_common):
    cdef Py_ssize_t nr = len(masks)
    cdef Py_ssize_t nw, r, k, a, b, i, j, q
    cdef uint64_t *w
    cdef uint64_t *common
    cdef int cnt
    cdef bint contained, hit
    cdef Py_ssize_t npos = len(pos), nneg = len(neg)
    out = []
    if nr == 0 or npos == 0 or nneg == 0:
        return out
    nw = 1
    for m in masks:
        bl = (<object>m).bit_length()
        if (bl + 63) // 64 > nw:
            nw = (bl + 63) // 64
    w = <uint64_t *> malloc(nr * nw * sizeof(uint64_t))
    common = <uint64_t *> malloc(nw * sizeof(uint64_t))
    if w == NULL or common == NULL:
        free(w)
        free(common)
        raise MemoryError()
    try:
        for r in range(nr):
            m = masks[r]
            for k in range(nw):
                w[r * nw + k] = <uint64_t> (m & _LOW)
                m = m >> 64
        for a in range(npos):
            i = pos[a]
            for b in range(nneg):
                j = neg[b]
                cnt = 0
                for k in range(nw):
                    common[k] = w[i * nw + k] & w[j * nw + k]
                    cnt += __builtin_popcountll(common[k])
                if cnt < min_common:
                    continue
                hit = False
                for q in range(nr):
                    if q == i or q == j:
                        continue
                    contained = True
                    for k in range(nw):
                        if (w[q * nw + k] & common[k]) != common[k]:
                            contained = False
                            break
                    if contained:
                        hit = True
                        break
                if not hit:
                    out.append((i, j))
    finally:
        free(w)
        free(common)
    return out


def dot_all(list rows, v):
    cdef Py_ssize_t n = len(v), i
    cdef list out = []
    cdef tuple vt = tuple(v)
    for r in rows:
        s = 0
        for i in range(n):
            s += r[i] * vt[i]
        out.append(s)
    return out
