# cython: boundscheck=False, wraparound=False
"""Compiled compatible-pair counting kernel.

Mirrors the pruned counter in :mod:`rank2greedy.dyck` with edge subsets
as 64-bit masks and the per-pair subpath walks in C.  Counts are
accumulated as Python integers, so the grid itself is exact no matter
how large the binomials get; only the edge masks are width-limited
(a1, a2 <= 63).
"""

import math

from libc.stdlib cimport free, malloc

cdef extern from *:
    int __builtin_popcountll(unsigned long long)
    int __builtin_ctzll(unsigned long long)

ctypedef unsigned long long u64


cdef struct Path:
    int a1
    int a2
    int n
    int *kind      # 0 horizontal, 1 vertical, in path order
    int *idx       # 1-based index within its family
    int *h_pos     # path position of u_i, at slot i-1
    int *v_pos     # path position of v_j, at slot j-1
    int *h_height  # height of u_i, at slot i-1


cdef bint build_path(Path *p, int a1, int a2) except False:
    cdef int n = a1 + a2
    p.a1 = a1
    p.a2 = a2
    p.n = n
    p.kind = <int *> malloc(n * sizeof(int))
    p.idx = <int *> malloc(n * sizeof(int))
    p.h_pos = <int *> malloc((a1 if a1 else 1) * sizeof(int))
    p.v_pos = <int *> malloc((a2 if a2 else 1) * sizeof(int))
    p.h_height = <int *> malloc((a1 if a1 else 1) * sizeof(int))
    if not (p.kind and p.idx and p.h_pos and p.v_pos and p.h_height):
        raise MemoryError()
    cdef int x = 0, y = 0, hi = 0, vi = 0, t = 0, j, top_x
    for j in range(1, a2 + 1):
        top_x = -((-j * a1) // a2)
        while x < top_x:
            hi += 1
            x += 1
            p.kind[t] = 0
            p.idx[t] = hi
            p.h_pos[hi - 1] = t
            p.h_height[hi - 1] = y
            t += 1
        vi += 1
        y += 1
        p.kind[t] = 1
        p.idx[t] = vi
        p.v_pos[vi - 1] = t
        t += 1
    return True


cdef void free_path(Path *p):
    free(p.kind)
    free(p.idx)
    free(p.h_pos)
    free(p.v_pos)
    free(p.h_height)


cdef bint pair_ok(Path *p, u64 s1, u64 s2, int u, int v, int b, int c):
    cdef int n = p.n
    cdef int te = p.h_pos[u - 1]
    cdef int tf = (p.v_pos[v - 1] + 1) % n
    cdef int length = (tf - te) % n
    if length == 0:
        length = n  # E == F: the full loop
    cdef int tot1 = 0, tot2s = 0
    cdef int s, t
    for s in range(length):
        t = (te + s) % n
        if p.kind[t] == 0:
            tot1 += 1
        elif (s2 >> (p.idx[t] - 1)) & 1:
            tot2s += 1
    cdef int ea1 = 0, ea2 = 0, ea1s = 0, ea2s = 0
    for s in range(1, length):
        t = (te + s - 1) % n
        if p.kind[t] == 0:
            ea1 += 1
            if (s1 >> (p.idx[t] - 1)) & 1:
                ea1s += 1
        else:
            ea2 += 1
            if (s2 >> (p.idx[t] - 1)) & 1:
                ea2s += 1
        if (tot1 - ea1) == b * (tot2s - ea2s) or ea2 == c * ea1s:
            return True
    return False


cdef bint is_compat(Path *p, u64 s1, u64 s2, int b, int c):
    cdef u64 m1 = s1, m2
    cdef int u, v
    while m1:
        u = __builtin_ctzll(m1) + 1
        m1 &= m1 - 1
        m2 = s2
        while m2:
            v = __builtin_ctzll(m2) + 1
            m2 &= m2 - 1
            if not pair_ok(p, s1, s2, u, v, b, c):
                return False
    return True


cdef u64 local_shadow(Path *p, u64 s2, int b, int j):
    cdef int n = p.n
    cdef int tf = (p.v_pos[j - 1] + 1) % n
    cdef int f = 0
    cdef u64 hs = 0
    cdef int s, t
    for s in range(1, n):
        t = (tf - s) % n
        if p.kind[t] == 0:
            f -= 1
            hs |= (<u64>1) << (p.idx[t] - 1)
        elif (s2 >> (p.idx[t] - 1)) & 1:
            f += b
        if f == 0:
            return hs
    return ((<u64>1) << p.a1) - 1


def count_grid(int a1, int a2, int b, int c):
    """Grid (|S2|, |S1|) -> number of compatible pairs on the maximal
    a1 x a2 Dyck path."""
    if a1 < 0 or a2 < 0:
        raise ValueError("path dimensions must be nonnegative")
    if a1 > 63 or a2 > 63:
        raise ValueError("mask kernel limited to sizes up to 63")
    comb = math.comb
    grid = {}
    cdef int q, pc, j, nfree, base, extra
    if a1 == 0 or a2 == 0:
        for q in range(a1 + 1):
            grid[(0, q)] = comb(a1, q)
        for pc in range(1, a2 + 1):
            grid[(pc, 0)] = comb(a2, pc)
        return grid

    cdef Path path
    build_path(&path, a1, a2)
    cdef u64 *height_mask = <u64 *> malloc(a2 * sizeof(u64))
    if not height_mask:
        free_path(&path)
        raise MemoryError()
    for j in range(a2):
        height_mask[j] = 0
    for j in range(a1):
        height_mask[path.h_height[j]] |= (<u64>1) << j

    cdef u64 full2 = ((<u64>1) << a2) - 1
    cdef u64 s2 = 0, sh, rsh, t
    try:
        while True:
            pc = __builtin_popcountll(s2)
            if pc == 0:
                for q in range(a1 + 1):
                    key = (0, q)
                    grid[key] = grid.get(key, 0) + comb(a1, q)
            elif a1 >= b * a2:
                # the shadow is exactly the b edges before each chosen
                # vertical, and compatibility is avoiding it
                nfree = a1 - b * pc
                for q in range(nfree + 1):
                    key = (pc, q)
                    grid[key] = grid.get(key, 0) + comb(nfree, q)
            else:
                sh = 0
                for j in range(a2):
                    if (s2 >> j) & 1:
                        sh |= local_shadow(&path, s2, b, j + 1)
                rsh = sh
                for j in range(a2):
                    if (s2 >> j) & 1:
                        rsh &= ~height_mask[j]
                nfree = a1 - __builtin_popcountll(sh)
                frow = [comb(nfree, extra) for extra in range(nfree + 1)]
                t = rsh
                while True:
                    if is_compat(&path, t, s2, b, c):
                        base = __builtin_popcountll(t)
                        for extra in range(nfree + 1):
                            key = (pc, base + extra)
                            grid[key] = grid.get(key, 0) + frow[extra]
                    if t == 0:
                        break
                    t = (t - 1) & rsh
            if s2 == full2:
                break
            s2 += 1
    finally:
        free(height_mask)
        free_path(&path)
    return grid
