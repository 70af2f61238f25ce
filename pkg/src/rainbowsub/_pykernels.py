"""Pure-Python kernels. Reference semantics for ``_ckernels.pyx``.

Both modules must return identical arrays for identical inputs; the test
suite checks this directly.  All array arguments are int64 except the
``uint8`` forbidden-vertex mask.
"""

from __future__ import annotations

import numpy as np


def greedy_color(n, eu, ev, order, width):
    """Give each edge, in ``order``, the smallest color free at both ends."""
    eu = eu.tolist()
    ev = ev.tolist()
    used = [set() for _ in range(n)]
    colors = [0] * len(eu)
    for e in order.tolist():
        a, b = eu[e], ev[e]
        ua, ub = used[a], used[b]
        c = 0
        while c in ua or c in ub:
            c += 1
        if c >= width:
            raise RuntimeError("greedy coloring exceeded its palette bound")
        colors[e] = c
        ua.add(c)
        ub.add(c)
    return np.asarray(colors, dtype=np.int64)


def peel(n, indptr, nbr):
    """Repeatedly delete a minimum-degree vertex.

    Returns the deletion order and, for each step, the number of edges left
    among the surviving vertices.
    """
    indptr = indptr.tolist()
    nbr = nbr.tolist()
    deg = [indptr[v + 1] - indptr[v] for v in range(n)]
    maxd = max(deg) if n else 0
    head = [-1] * (maxd + 1)
    nxt = [-1] * n
    prv = [-1] * n

    def push(v, d):
        h = head[d]
        nxt[v] = h
        prv[v] = -1
        if h != -1:
            prv[h] = v
        head[d] = v

    def unlink(v, d):
        p, q = prv[v], nxt[v]
        if p != -1:
            nxt[p] = q
        else:
            head[d] = q
        if q != -1:
            prv[q] = p

    for v in range(n - 1, -1, -1):
        push(v, deg[v])

    removed = [False] * n
    order = [0] * n
    left = [0] * n
    m = indptr[n] // 2
    cur = 0
    for i in range(n):
        while head[cur] == -1:
            cur += 1
        v = head[cur]
        unlink(v, cur)
        removed[v] = True
        order[i] = v
        m -= deg[v]
        left[i] = m
        for k in range(indptr[v], indptr[v + 1]):
            u = nbr[k]
            if not removed[u]:
                d = deg[u]
                unlink(u, d)
                deg[u] = d - 1
                push(u, d - 1)
        cur = cur - 1 if cur > 0 else 0
    return np.asarray(order, dtype=np.int64), np.asarray(left, dtype=np.int64)


def reach_rounds(n, origin, cptr, csrc, cdst, rptr, rcolors, forb_v):
    """Sprinkled rainbow BFS.

    Round ``i`` (1-based) offers the colors ``rcolors[rptr[i-1]:rptr[i]]`` in
    that order. A vertex ``x`` reached before round ``i`` (the origin counts
    as reached at round 0) extends its stored path along an edge ``xy`` of an
    offered color when ``y`` is unreached, not forbidden, and the color is
    absent from the path to ``x``.
    """
    cptr = cptr.tolist()
    csrc = csrc.tolist()
    cdst = cdst.tolist()
    rptr = rptr.tolist()
    rcolors = rcolors.tolist()
    forb = forb_v.tolist()
    parent = [-1] * n
    pcolor = [-1] * n
    rnd = [-1] * n
    depth = [0] * n
    rnd[origin] = 0
    reached = 1
    rounds_used = 0
    for i in range(1, len(rptr)):
        for k in range(rptr[i - 1], rptr[i]):
            c = rcolors[k]
            for e in range(cptr[c], cptr[c + 1]):
                x = csrc[e]
                rx = rnd[x]
                if rx < 0 or rx >= i:
                    continue
                y = cdst[e]
                if rnd[y] >= 0 or forb[y]:
                    continue
                z = x
                while z != origin:
                    if pcolor[z] == c:
                        break
                    z = parent[z]
                else:
                    parent[y] = x
                    pcolor[y] = c
                    rnd[y] = i
                    depth[y] = depth[x] + 1
                    reached += 1
                    rounds_used = i
        if reached == n:
            break
    return (
        np.asarray(parent, dtype=np.int64),
        np.asarray(pcolor, dtype=np.int64),
        np.asarray(rnd, dtype=np.int64),
        np.asarray(depth, dtype=np.int64),
        rounds_used,
    )
