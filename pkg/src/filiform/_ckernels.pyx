# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled nested-sum kernels; same API and results as ``_pykernels``.

Field arithmetic stays on Python objects (Fraction / Scalar); what is compiled
is the chain enumeration, index bookkeeping and the series convolution.
"""

from libc.stdlib cimport malloc, free
from math import comb


cdef list _binomials(int n):
    cdef int a, b
    return [[comb(a, b) for b in range(a + 1)] for a in range(n + 1)]


cdef object _chain_sum(list z, int t, int k, int j, object zero):
    cdef int lo, m, pos, depth
    cdef int *chain
    cdef object total, prod
    if j == 1:
        return z[t + 2 - k]
    lo = k + j
    if lo > t:
        return zero
    depth = j - 1
    chain = <int *> malloc(depth * sizeof(int))
    if chain == NULL:
        raise MemoryError()
    try:
        for m in range(depth):
            chain[m] = lo
        total = zero
        while True:
            prod = z[t + 3 - chain[depth - 1]] * z[chain[0] + 3 - lo]
            for m in range(1, depth):
                prod = prod * z[chain[m] + 3 - chain[m - 1]]
            total = total + prod
            # next nondecreasing chain in lexicographic order
            pos = depth - 1
            while pos >= 0 and chain[pos] == t:
                pos -= 1
            if pos < 0:
                break
            chain[pos] += 1
            for m in range(pos + 1, depth):
                chain[m] = chain[pos]
        return total
    finally:
        free(chain)


def chain_sum(list z, int t, int k, int j, zero):
    """S_j(t, k) by explicit enumeration of the chains."""
    return _chain_sum(z, t, k, j, zero)


cdef object _bracket_naive(list z, int t, int k, object y, object zero, list binoms):
    cdef int j
    cdef object total = zero, ypow = y, s
    for j in range(1, k):
        if t - k - j < 0:
            break
        s = _chain_sum(z, t, k, j, zero)
        if s:
            total = total + binoms[k - 1][j] * ypow * s
        ypow = ypow * y
    return total


def bracket_naive(list z, int t, int k, y, zero):
    return _bracket_naive(z, t, k, y, zero, _binomials(k))


def bracket_table_naive(list z, int n, y, zero):
    cdef int t, k
    cdef list binoms = _binomials(n)
    cdef list table = [[zero] * (n + 1) for _ in range(n + 1)]
    for t in range(4, n + 1):
        for k in range(3, t):
            table[t][k] = _bracket_naive(z, t, k, y, zero, binoms)
    return table


def bracket_table_dp(list z, int n, y, zero):
    cdef int deg = n - 4, j, a, b, t, k, d
    cdef list table = [[zero] * (n + 1) for _ in range(n + 1)]
    cdef list binoms, ybase, powers, prev, nxt
    cdef object pa, total, c
    if deg < 0:
        return table
    binoms = _binomials(n)
    ybase = [y * z[g + 3] for g in range(deg + 1)]
    powers = [None, ybase]
    for j in range(2, n - 2):
        prev = powers[j - 1]
        nxt = [zero] * (deg + 1)
        for a in range(deg + 1):
            pa = prev[a]
            if not pa:
                continue
            for b in range(deg + 1 - a):
                if ybase[b]:
                    nxt[a + b] = nxt[a + b] + pa * ybase[b]
        powers.append(nxt)
    for t in range(4, n + 1):
        for k in range(3, t):
            total = zero
            for j in range(1, k):
                d = t - k - j
                if d < 0:
                    break
                c = (<list> powers[j])[d]
                if c:
                    total = total + binoms[k - 1][j] * c
            table[t][k] = total
    return table


def phi_values(list z, int n, y, list table, zero, one, bint prefactor=False):
    cdef int t, k
    cdef list out = [zero] * (n + 2)
    cdef list row
    cdef object one_y = one + y, acc, s
    for t in range(3, n + 1):
        acc = one_y * z[t]
        row = table[t]
        for k in range(3, t):
            if row[k]:
                acc = acc - row[k] * out[k]
        out[t] = acc
    s = zero
    row = table[n]
    for k in range(3, n):
        if row[k]:
            s = s + row[k] * out[k]
    if prefactor:
        s = one_y * s
    out[n + 1] = z[n + 1] + y * z[n] - s
    return out
