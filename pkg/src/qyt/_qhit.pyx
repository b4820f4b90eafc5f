# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled permutation censuses for Ferrers-board statistics.

Mirrors the pure-Python kernels in _kernels.py: one pass over S_n in
lexicographic order with all bookkeeping in C arrays.  Capped at n <= 12
(beyond that the n! sweep is out of reach regardless).
"""

from libc.string cimport memset


cdef inline bint _next_perm(int* a, int n) nogil:
    cdef int i = n - 2
    cdef int j, tmp
    while i >= 0 and a[i] >= a[i + 1]:
        i -= 1
    if i < 0:
        return False
    j = n - 1
    while a[j] <= a[i]:
        j -= 1
    tmp = a[i]; a[i] = a[j]; a[j] = tmp
    i += 1
    j = n - 1
    while i < j:
        tmp = a[i]; a[i] = a[j]; a[j] = tmp
        i += 1
        j -= 1
    return True


def hit_census(int n, heights):
    """counts[k] = permutations of S_n with exactly k hits on the board."""
    if n < 0 or n > 12:
        raise ValueError("compiled census supports 0 <= n <= 12")
    cdef long long counts[13]
    cdef int h[12]
    cdef int a[12]
    cdef int i, k
    memset(counts, 0, sizeof(counts))
    if n == 0:
        return [1]
    for i in range(n):
        h[i] = heights[i]
        a[i] = i + 1
    with nogil:
        while True:
            k = 0
            for i in range(n):
                if a[i] <= h[i]:
                    k += 1
            counts[k] += 1
            if not _next_perm(a, n):
                break
    return [counts[i] for i in range(n + 1)]


def q_hit_census(int n, heights):
    """counts[k][w] = permutations with k hits and circle weight w."""
    if n < 0 or n > 12:
        raise ValueError("compiled census supports 0 <= n <= 12")
    cdef int maxw = n * (n - 1) // 2
    cdef long long counts[871]  # 13 rows x 67 weight slots
    cdef int h[12]
    cdef int a[12]
    cdef int pos[13]
    cdef int i, j, k, w, p, r, v, s
    memset(counts, 0, sizeof(counts))
    if n == 0:
        return [[1]]
    for i in range(n):
        h[i] = heights[i]
        a[i] = i + 1
    with nogil:
        while True:
            for i in range(n):
                pos[a[i]] = i
            k = 0
            w = 0
            for j in range(n):
                p = a[j]
                if p <= h[j]:
                    k += 1
                v = h[j] - p
                if v < 0:
                    v += n
                r = p
                for s in range(v):
                    r += 1
                    if r > n:
                        r = 1
                    if pos[r] >= j:
                        w += 1
            counts[k * (maxw + 1) + w] += 1
            if not _next_perm(a, n):
                break
    return [
        [counts[k * (maxw + 1) + w] for w in range(maxw + 1)]
        for k in range(n + 1)
    ]
