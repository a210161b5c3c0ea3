# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled Kauffman state enumeration; same contract as statesum_py."""

from libc.stdlib cimport malloc, free


cdef inline int _find(int* parent, int u) nogil:
    while parent[u] != u:
        parent[u] = parent[parent[u]]
        u = parent[u]
    return u


def state_histogram(int n_arcs, unders_in, overs_a, unders_out, overs_b):
    cdef int n = len(unders_in)
    if n > 30:
        raise ValueError("too many crossings for exhaustive enumeration")
    cdef int* a = <int*>malloc(4 * n * sizeof(int) + 1)
    cdef int* parent = <int*>malloc((n_arcs + 1) * sizeof(int))
    # counts[k * (n_arcs + 1) + loops]
    cdef long long* counts = <long long*>malloc((n + 1) * (n_arcs + 1) * sizeof(long long))
    cdef int i, j, k, comps, u, v, p, q
    cdef long long state, nstates = (<long long>1) << n
    try:
        for i in range(n):
            a[4 * i] = unders_in[i]
            a[4 * i + 1] = overs_a[i]
            a[4 * i + 2] = unders_out[i]
            a[4 * i + 3] = overs_b[i]
        for i in range((n + 1) * (n_arcs + 1)):
            counts[i] = 0
        with nogil:
            for state in range(nstates):
                for j in range(n_arcs):
                    parent[j] = j
                comps = n_arcs
                k = 0
                for i in range(n):
                    if (state >> i) & 1:
                        k += 1
                        p = 1
                        q = 3
                    else:
                        p = 3
                        q = 1
                    # first pair: a with (b or d); second: c with the other
                    u = _find(parent, a[4 * i])
                    v = _find(parent, a[4 * i + p])
                    if u != v:
                        parent[u] = v
                        comps -= 1
                    u = _find(parent, a[4 * i + 2])
                    v = _find(parent, a[4 * i + q])
                    if u != v:
                        parent[u] = v
                        comps -= 1
                counts[k * (n_arcs + 1) + comps] += 1
        hist = {}
        for k in range(n + 1):
            for j in range(n_arcs + 1):
                if counts[k * (n_arcs + 1) + j]:
                    hist[(k, j)] = counts[k * (n_arcs + 1) + j]
        return hist
    finally:
        free(a)
        free(parent)
        free(counts)
