# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels. Same contracts as ``_pykernels``."""

import numpy as np
cimport numpy as cnp

ctypedef cnp.int64_t i64


def greedy_color(Py_ssize_t n, const i64[::1] eu, const i64[::1] ev, const i64[::1] order, Py_ssize_t width):
    cdef Py_ssize_t m = eu.shape[0]
    cdef cnp.ndarray[cnp.uint8_t, ndim=2, mode="c"] used_arr = np.zeros((n, max(width, 1)), dtype=np.uint8)
    cdef cnp.uint8_t[:, ::1] used = used_arr
    cdef i64[::1] colors = np.zeros(m, dtype=np.int64)
    cdef Py_ssize_t k, e, a, b, c
    for k in range(m):
        e = order[k]
        a = eu[e]
        b = ev[e]
        c = 0
        while c < width and (used[a, c] or used[b, c]):
            c += 1
        if c >= width:
            raise RuntimeError("greedy coloring exceeded its palette bound")
        colors[e] = c
        used[a, c] = 1
        used[b, c] = 1
    return np.asarray(colors)


def peel(Py_ssize_t n, const i64[::1] indptr, const i64[::1] nbr):
    cdef i64[::1] deg = np.empty(n, dtype=np.int64)
    cdef Py_ssize_t v, u, k, i, d, p, q, h, cur
    cdef i64 maxd = 0
    for v in range(n):
        deg[v] = indptr[v + 1] - indptr[v]
        if deg[v] > maxd:
            maxd = deg[v]
    cdef i64[::1] head = np.full(maxd + 1, -1, dtype=np.int64)
    cdef i64[::1] nxt = np.full(n, -1, dtype=np.int64)
    cdef i64[::1] prv = np.full(n, -1, dtype=np.int64)
    cdef cnp.uint8_t[::1] removed = np.zeros(n, dtype=np.uint8)
    cdef i64[::1] order = np.zeros(n, dtype=np.int64)
    cdef i64[::1] left = np.zeros(n, dtype=np.int64)
    cdef i64 m = indptr[n] // 2

    for v in range(n - 1, -1, -1):
        d = deg[v]
        h = head[d]
        nxt[v] = h
        prv[v] = -1
        if h != -1:
            prv[h] = v
        head[d] = v

    cur = 0
    for i in range(n):
        while head[cur] == -1:
            cur += 1
        v = head[cur]
        p = prv[v]
        q = nxt[v]
        if p != -1:
            nxt[p] = q
        else:
            head[cur] = q
        if q != -1:
            prv[q] = p
        removed[v] = 1
        order[i] = v
        m -= deg[v]
        left[i] = m
        for k in range(indptr[v], indptr[v + 1]):
            u = nbr[k]
            if removed[u]:
                continue
            d = deg[u]
            p = prv[u]
            q = nxt[u]
            if p != -1:
                nxt[p] = q
            else:
                head[d] = q
            if q != -1:
                prv[q] = p
            d -= 1
            deg[u] = d
            h = head[d]
            nxt[u] = h
            prv[u] = -1
            if h != -1:
                prv[h] = u
            head[d] = u
        if cur > 0:
            cur -= 1
    return np.asarray(order), np.asarray(left)


def reach_rounds(Py_ssize_t n, Py_ssize_t origin, const i64[::1] cptr, const i64[::1] csrc,
                 const i64[::1] cdst, const i64[::1] rptr, const i64[::1] rcolors,
                 const cnp.uint8_t[::1] forb_v):
    cdef i64[::1] parent = np.full(n, -1, dtype=np.int64)
    cdef i64[::1] pcolor = np.full(n, -1, dtype=np.int64)
    cdef i64[::1] rnd = np.full(n, -1, dtype=np.int64)
    cdef i64[::1] depth = np.zeros(n, dtype=np.int64)
    cdef Py_ssize_t rounds = rptr.shape[0] - 1
    cdef Py_ssize_t i, k, e, x, y, z, c
    cdef i64 rx
    cdef Py_ssize_t reached = 1, rounds_used = 0
    cdef bint ok
    rnd[origin] = 0
    for i in range(1, rounds + 1):
        for k in range(rptr[i - 1], rptr[i]):
            c = rcolors[k]
            for e in range(cptr[c], cptr[c + 1]):
                x = csrc[e]
                rx = rnd[x]
                if rx < 0 or rx >= i:
                    continue
                y = cdst[e]
                if rnd[y] >= 0 or forb_v[y]:
                    continue
                z = x
                ok = True
                while z != origin:
                    if pcolor[z] == c:
                        ok = False
                        break
                    z = parent[z]
                if ok:
                    parent[y] = x
                    pcolor[y] = c
                    rnd[y] = i
                    depth[y] = depth[x] + 1
                    reached += 1
                    rounds_used = i
        if reached == n:
            break
    return np.asarray(parent), np.asarray(pcolor), np.asarray(rnd), np.asarray(depth), rounds_used
