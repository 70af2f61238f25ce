"""Immutable simple graphs with a proper edge coloring.

Vertices are dense integers ``0..n-1`` and colors are dense integers
``0..color_count-1``.  Adjacency is held in CSR form (``indptr``, ``nbr``,
``col``) with every neighbor list sorted, so per-vertex scans touch
contiguous memory and ``edge_color`` is a binary search.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

import numpy as np

from .errors import (
    DuplicateEdge,
    EmptyGraph,
    GraphError,
    ImproperColoring,
    SelfLoop,
    VertexOutOfRange,
)

__all__ = ["ColoredGraph", "GraphStats", "build", "induced_subgraph", "stats"]


def _frozen(a: np.ndarray) -> np.ndarray:
    a.flags.writeable = False
    return a


class ColoredGraph:
    """A finite simple graph with a proper edge coloring.

    Instances are created through :func:`build` (validating) and are never
    mutated afterwards, so they can be shared freely between workers.
    """

    __slots__ = ("n", "color_count", "eu", "ev", "ec", "indptr", "nbr", "col", "_classes")

    def __init__(self, n: int, eu, ev, ec, color_count: int):
        # callers guarantee: eu < ev, rows sorted lexicographically, validated
        self.n = int(n)
        self.color_count = int(color_count)
        self.eu = _frozen(np.asarray(eu, dtype=np.int64))
        self.ev = _frozen(np.asarray(ev, dtype=np.int64))
        self.ec = _frozen(np.asarray(ec, dtype=np.int64))
        src = np.concatenate([self.eu, self.ev])
        dst = np.concatenate([self.ev, self.eu])
        cc = np.concatenate([self.ec, self.ec])
        order = np.lexsort((dst, src))
        self.nbr = _frozen(dst[order])
        self.col = _frozen(cc[order])
        indptr = np.zeros(self.n + 1, dtype=np.int64)
        np.cumsum(np.bincount(src, minlength=self.n), out=indptr[1:])
        self.indptr = _frozen(indptr)
        self._classes = None

    # -- basic queries --------------------------------------------------------

    @property
    def m(self) -> int:
        return int(self.eu.shape[0])

    def degree(self, v: int) -> int:
        return int(self.indptr[v + 1] - self.indptr[v])

    def degrees(self) -> np.ndarray:
        return np.diff(self.indptr)

    def neighbors(self, v: int) -> np.ndarray:
        return self.nbr[self.indptr[v] : self.indptr[v + 1]]

    def colored_neighbors(self, v: int) -> list[tuple[int, int]]:
        lo, hi = self.indptr[v], self.indptr[v + 1]
        return list(zip(self.nbr[lo:hi].tolist(), self.col[lo:hi].tolist()))

    def edge_color(self, u: int, v: int) -> int | None:
        """Color of edge ``uv``, or None when the edge is absent."""
        if not (0 <= u < self.n and 0 <= v < self.n):
            return None
        lo, hi = int(self.indptr[u]), int(self.indptr[u + 1])
        k = lo + int(np.searchsorted(self.nbr[lo:hi], v))
        if k < hi and self.nbr[k] == v:
            return int(self.col[k])
        return None

    def has_edge(self, u: int, v: int) -> bool:
        return self.edge_color(u, v) is not None

    def edges(self) -> list[tuple[int, int, int]]:
        return list(zip(self.eu.tolist(), self.ev.tolist(), self.ec.tolist()))

    @property
    def color_classes(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Directed edge entries grouped by color, as ``(cptr, src, dst)``.

        Entries of color ``c`` live in ``cptr[c]:cptr[c+1]`` and are sorted by
        source vertex. Each undirected edge appears once per orientation.
        """
        if self._classes is None:
            src = np.concatenate([self.eu, self.ev])
            dst = np.concatenate([self.ev, self.eu])
            cc = np.concatenate([self.ec, self.ec])
            order = np.lexsort((src, cc))
            cptr = np.zeros(self.color_count + 1, dtype=np.int64)
            np.cumsum(np.bincount(cc, minlength=self.color_count), out=cptr[1:])
            self._classes = (_frozen(cptr), _frozen(src[order]), _frozen(dst[order]))
        return self._classes

    def __eq__(self, other) -> bool:
        if not isinstance(other, ColoredGraph):
            return NotImplemented
        return (
            self.n == other.n
            and self.color_count == other.color_count
            and np.array_equal(self.eu, other.eu)
            and np.array_equal(self.ev, other.ev)
            and np.array_equal(self.ec, other.ec)
        )

    __hash__ = None

    def __repr__(self) -> str:
        return f"ColoredGraph(n={self.n}, m={self.m}, colors={self.color_count})"


@dataclass(frozen=True)
class GraphStats:
    n: int
    m: int
    avg_degree: Fraction
    min_degree: int
    max_degree: int

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "avg_degree": float(self.avg_degree),
            "avg_degree_exact": [self.avg_degree.numerator, self.avg_degree.denominator],
            "min_degree": self.min_degree,
            "max_degree": self.max_degree,
        }


def _edge_arrays(edges) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    if isinstance(edges, np.ndarray):
        arr = edges.astype(np.int64, copy=False).reshape(-1, 3)
    else:
        arr = np.asarray(list(edges), dtype=np.int64).reshape(-1, 3)
    return arr[:, 0], arr[:, 1], arr[:, 2]


def _first(mask: np.ndarray) -> int:
    return int(np.flatnonzero(mask)[0])


def build(n: int, edges: Iterable[tuple[int, int, int]] | np.ndarray, color_count: int | None = None) -> ColoredGraph:
    """Validate an edge list and return the graph.

    ``color_count`` defaults to one more than the largest color used.  Every
    error names the first offending edge in input order.
    """
    n = int(n)
    if n < 0:
        raise GraphError(f"negative vertex count {n}")
    u, v, c = _edge_arrays(edges)

    def edge(i):
        return (int(u[i]), int(v[i]), int(c[i]))

    bad = (u < 0) | (u >= n) | (v < 0) | (v >= n)
    if bad.any():
        i = _first(bad)
        raise VertexOutOfRange(f"edge {edge(i)} has an endpoint outside [0, {n})", edge(i))
    if (c < 0).any():
        i = _first(c < 0)
        raise GraphError(f"edge {edge(i)} has a negative color", edge(i))
    loops = u == v
    if loops.any():
        i = _first(loops)
        raise SelfLoop(f"edge {edge(i)} is a self-loop", edge(i))

    lo, hi = np.minimum(u, v), np.maximum(u, v)
    m = lo.shape[0]
    if m:
        order = np.lexsort((np.arange(m), hi, lo))
        same = (lo[order][1:] == lo[order][:-1]) & (hi[order][1:] == hi[order][:-1])
        if same.any():
            i = int(order[1:][same].min())
            raise DuplicateEdge(f"edge {edge(i)} duplicates an earlier edge", edge(i))

        # properness: at each endpoint the incident colors are distinct
        ends = np.concatenate([u, v])
        cols = np.concatenate([c, c])
        idx = np.concatenate([np.arange(m), np.arange(m)])
        order = np.lexsort((idx, cols, ends))
        clash = (ends[order][1:] == ends[order][:-1]) & (cols[order][1:] == cols[order][:-1])
        if clash.any():
            pos = np.flatnonzero(clash)
            later = idx[order][1:][pos]
            k = int(np.argmin(later))
            i = int(later[k])
            j = int(idx[order][pos[k]])
            vert = int(ends[order][pos[k]])
            raise ImproperColoring(
                f"edge {edge(i)} repeats color {int(c[i])} of edge {edge(j)} at vertex {vert}",
                edge(i),
                vertex=vert,
                other=edge(j),
            )

    used = int(c.max()) + 1 if m else 0
    if color_count is None:
        color_count = used
    elif color_count < used:
        raise GraphError(f"color_count {color_count} below largest color {used - 1}")

    order = np.lexsort((hi, lo))
    return ColoredGraph(n, lo[order], hi[order], c[order], color_count)


def induced_subgraph(g: ColoredGraph, vertices: Iterable[int]) -> tuple[ColoredGraph, dict[int, int]]:
    """Subgraph induced by ``vertices`` and the ``old -> new`` index map.

    New indices follow increasing old index.  Colors keep their ids and the
    palette size of ``g`` is retained, so color sets stay comparable.
    """
    vs = np.unique(np.fromiter((int(x) for x in vertices), dtype=np.int64))
    if vs.size and (vs[0] < 0 or vs[-1] >= g.n):
        bad = int(vs[0]) if vs[0] < 0 else int(vs[-1])
        raise VertexOutOfRange(f"vertex {bad} outside [0, {g.n})")
    remap = np.full(g.n, -1, dtype=np.int64)
    remap[vs] = np.arange(vs.size)
    keep = (remap[g.eu] >= 0) & (remap[g.ev] >= 0)
    # remap is increasing, so canonical order and orientation survive
    sub = ColoredGraph(int(vs.size), remap[g.eu[keep]], remap[g.ev[keep]], g.ec[keep], g.color_count)
    return sub, {int(o): i for i, o in enumerate(vs.tolist())}


def stats(g: ColoredGraph) -> GraphStats:
    if g.n == 0:
        raise EmptyGraph("average degree is undefined for the empty graph")
    deg = g.degrees()
    return GraphStats(
        n=g.n,
        m=g.m,
        avg_degree=Fraction(2 * g.m, g.n),
        min_degree=int(deg.min()),
        max_degree=int(deg.max()),
    )


def is_proper(g: ColoredGraph) -> bool:
    """Re-check properness from the CSR arrays (debug aid)."""
    for v in range(g.n):
        cs = g.col[g.indptr[v] : g.indptr[v + 1]]
        if np.unique(cs).size != cs.size:
            return False
    return True
