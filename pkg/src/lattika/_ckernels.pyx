# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled table kernels; see ``_pykernels`` for the reference semantics."""
import numpy as np
cimport numpy as cnp

cnp.import_array()


def transitive_closure(adj):
    cdef cnp.ndarray[cnp.uint8_t, ndim=2] r = np.array(adj, dtype=np.uint8)
    cdef Py_ssize_t n = r.shape[0], i, j, k
    for i in range(n):
        r[i, i] = 1
    for k in range(n):
        for i in range(n):
            if r[i, k]:
                for j in range(n):
                    if r[k, j]:
                        r[i, j] = 1
    return r


cdef _bound_table(const cnp.uint8_t[:, :] leq):
    cdef Py_ssize_t n = leq.shape[0], a, b, c, d
    cdef cnp.ndarray[cnp.int32_t, ndim=2] out = np.full((n, n), -1, dtype=np.int32)
    cdef cnp.ndarray[cnp.int32_t, ndim=1] down = np.zeros(n, dtype=np.int32)
    cdef int cnt, best
    for c in range(n):
        for d in range(n):
            down[c] += leq[d, c]
    for a in range(n):
        for b in range(a, n):
            cnt = 0
            for c in range(n):
                if leq[c, a] and leq[c, b]:
                    cnt += 1
            best = -1
            for c in range(n):
                if leq[c, a] and leq[c, b] and down[c] == cnt:
                    best = <int>c
                    break
            out[a, b] = best
            out[b, a] = best
    return out


def meet_join_tables(leq):
    cdef cnp.ndarray[cnp.uint8_t, ndim=2] m = np.ascontiguousarray(leq, dtype=np.uint8)
    cdef cnp.ndarray[cnp.uint8_t, ndim=2] mt = np.ascontiguousarray(m.T)
    return _bound_table(m), _bound_table(mt)


def cosmall_matrix(leq, join, long top):
    cdef const cnp.uint8_t[:, :] lq = np.ascontiguousarray(leq, dtype=np.uint8)
    cdef const cnp.int32_t[:, :] jn = np.ascontiguousarray(join, dtype=np.int32)
    cdef Py_ssize_t n = lq.shape[0], a, b, x
    cdef cnp.ndarray[cnp.uint8_t, ndim=2] out = np.zeros((n, n), dtype=np.uint8)
    cdef int ok
    for a in range(n):
        for b in range(n):
            if not lq[a, b]:
                continue
            ok = 1
            for x in range(n):
                if jn[b, x] == top and jn[a, x] != top:
                    ok = 0
                    break
            out[a, b] = ok
    return out


def modular_violation(leq, meet, join):
    cdef const cnp.uint8_t[:, :] lq = np.ascontiguousarray(leq, dtype=np.uint8)
    cdef const cnp.int32_t[:, :] mt = np.ascontiguousarray(meet, dtype=np.int32)
    cdef const cnp.int32_t[:, :] jn = np.ascontiguousarray(join, dtype=np.int32)
    cdef Py_ssize_t n = lq.shape[0], a, b, c, k, m
    cdef cnp.int32_t ab
    cdef cnp.int32_t[::1] above = np.empty(n, dtype=np.int32)
    for a in range(n):
        m = 0
        for c in range(n):
            if lq[a, c]:
                above[m] = c
                m += 1
        for b in range(n):
            ab = jn[a, b]
            for k in range(m):
                c = above[k]
                if jn[a, mt[b, c]] != mt[ab, c]:
                    return int(a), int(b), int(c)
    return -1, -1, -1


def meet_independent(meet, join, long top, ys):
    cdef const cnp.int32_t[:, :] mt = np.ascontiguousarray(meet, dtype=np.int32)
    cdef const cnp.int32_t[:, :] jn = np.ascontiguousarray(join, dtype=np.int32)
    cdef Py_ssize_t k = len(ys), j
    if k > 30:
        raise ValueError("meet_independent supports at most 30 elements")
    cdef cnp.ndarray[cnp.int32_t, ndim=1] y = np.asarray(ys, dtype=np.int32)
    cdef cnp.ndarray[cnp.int32_t, ndim=1] meets = np.zeros(1 << k, dtype=np.int32)
    cdef long mask, low, rest
    cdef int i, m
    for mask in range(1, 1 << k):
        low = mask & -mask
        i = 0
        while (low >> i) != 1:
            i += 1
        rest = mask ^ low
        if rest == 0:
            meets[mask] = y[i]
        else:
            meets[mask] = mt[meets[rest], y[i]]
        m = meets[mask]
        for j in range(k):
            if not (mask >> j) & 1 and jn[m, y[j]] != top:
                return False
    return True
