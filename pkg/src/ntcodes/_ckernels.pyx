# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled inner loops. Every function here has a twin in ``_pykernels``."""

import numpy as np
cimport numpy as cnp
from libc.stdint cimport int32_t, int64_t, uint8_t, uint64_t

cnp.import_array()

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil


def pair_histogram_packed(const uint64_t[:] words, int m):
    cdef Py_ssize_t n = words.shape[0], i, j
    out = np.zeros(m + 1, dtype=np.int64)
    cdef int64_t[:] h = out
    with nogil:
        for i in range(n):
            h[0] += 1
            for j in range(i + 1, n):
                h[__builtin_popcountll(words[i] ^ words[j])] += 2
    return out


def pair_histogram_digits(const uint8_t[:, :] digits):
    cdef Py_ssize_t n = digits.shape[0], m = digits.shape[1], i, j, k
    cdef int d
    out = np.zeros(m + 1, dtype=np.int64)
    cdef int64_t[:] h = out
    with nogil:
        for i in range(n):
            h[0] += 1
            for j in range(i + 1, n):
                d = 0
                for k in range(m):
                    if digits[i, k] != digits[j, k]:
                        d += 1
                h[d] += 2
    return out


def distance_profile_packed(const uint64_t[:] points, const uint64_t[:] words, int m):
    cdef Py_ssize_t n = points.shape[0], w = words.shape[0], i, j
    out = np.zeros((n, m + 1), dtype=np.int64)
    cdef int64_t[:, :] prof = out
    with nogil:
        for i in range(n):
            for j in range(w):
                prof[i, __builtin_popcountll(points[i] ^ words[j])] += 1
    return out


def distance_profile_digits(const uint8_t[:, :] points, const uint8_t[:, :] words):
    cdef Py_ssize_t n = points.shape[0], w = words.shape[0], m = points.shape[1], i, j, k
    cdef int d
    out = np.zeros((n, m + 1), dtype=np.int64)
    cdef int64_t[:, :] prof = out
    with nogil:
        for i in range(n):
            for j in range(w):
                d = 0
                for k in range(m):
                    if points[i, k] != words[j, k]:
                        d += 1
                prof[i, d] += 1
    return out


def bfs_distances(const int64_t[:] sources, int m, int q):
    cdef int64_t size = 1, head = 0, tail = 0, v, u, place, digit, a
    cdef int k
    for k in range(m):
        size *= q
    out = np.full(size, -1, dtype=np.int32)
    queue = np.empty(size, dtype=np.int64)
    cdef int32_t[:] dist = out
    cdef int64_t[:] qu = queue
    cdef Py_ssize_t s
    for s in range(sources.shape[0]):
        v = sources[s]
        if dist[v] == -1:
            dist[v] = 0
            qu[tail] = v
            tail += 1
    with nogil:
        while head < tail:
            v = qu[head]
            head += 1
            place = 1
            for k in range(m):
                digit = (v // place) % q
                for a in range(q):
                    if a != digit:
                        u = v + (a - digit) * place
                        if dist[u] == -1:
                            dist[u] = dist[v] + 1
                            qu[tail] = u
                            tail += 1
                place *= q
    return out


def orbit_labels(const int64_t[:, :] perms, int64_t n):
    cdef Py_ssize_t g = perms.shape[0], k
    cdef int64_t start, head, tail, v, u
    out = np.full(n, -1, dtype=np.int64)
    queue = np.empty(n, dtype=np.int64)
    cdef int64_t[:] lab = out
    cdef int64_t[:] qu = queue
    with nogil:
        for start in range(n):
            if lab[start] != -1:
                continue
            lab[start] = start
            head = 0
            tail = 1
            qu[0] = start
            while head < tail:
                v = qu[head]
                head += 1
                for k in range(g):
                    u = perms[k, v]
                    if lab[u] == -1:
                        lab[u] = start
                        qu[tail] = u
                        tail += 1
    return out
