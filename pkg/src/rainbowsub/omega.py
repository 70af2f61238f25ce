"""Subgraphs maximizing average degree divided by a size weight ω.

A graph is ω-maximal when no subgraph beats its ratio ``d(H) / ω(v(H))``.
Only induced subgraphs need to be searched: for a fixed vertex set the induced
subgraph has the largest average degree.  Sets with fewer than two vertices
are never candidates (``log2(1) = 0``).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import NoEdges, TooLarge, TooSmall
from .graph import ColoredGraph, induced_subgraph

__all__ = [
    "OmegaFunction",
    "OmegaResult",
    "LOG2",
    "omega_ratio",
    "extract_maximal",
    "brute_force_maximal",
    "check_min_degree",
]

TIE_TOL = 1e-12
BRUTE_FORCE_LIMIT = 20


@dataclass(frozen=True)
class OmegaFunction:
    """``log2`` or ``power`` (x ** alpha with 0 < alpha < 1)."""

    kind: str = "log2"
    alpha: float = 0.5

    def __post_init__(self):
        if self.kind not in ("log2", "power"):
            raise ValueError(f"unknown omega kind {self.kind!r}")
        if self.kind == "power" and not 0 < self.alpha < 1:
            raise ValueError("power omega needs 0 < alpha < 1")

    def __call__(self, x: float) -> float:
        if self.kind == "log2":
            return math.log2(x)
        return x**self.alpha

    def vector(self, x: np.ndarray) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        return np.log2(x) if self.kind == "log2" else x**self.alpha


LOG2 = OmegaFunction("log2")


@dataclass(frozen=True)
class OmegaResult:
    vertices: tuple[int, ...]
    ratio: float
    certified_optimal: bool

    def to_json(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "size": len(self.vertices),
            "ratio": self.ratio,
            "certified_optimal": self.certified_optimal,
        }


def _ratio(edges: int, size: int, omega: OmegaFunction) -> float:
    return (2.0 * edges / size) / omega(size)


def omega_ratio(g: ColoredGraph, omega: OmegaFunction = LOG2) -> float:
    if g.n < 2:
        raise TooSmall(f"omega ratio needs at least 2 vertices, got {g.n}")
    return _ratio(g.m, g.n, omega)


def _best_suffix(g: ColoredGraph, omega: OmegaFunction) -> tuple[np.ndarray, float]:
    order, left = kernels.peel(g.n, g.indptr, g.nbr)
    # suffix k = vertices surviving the first k deletions; k = 0 is g itself
    sizes = g.n - np.arange(g.n)
    edges = np.concatenate([[g.m], left[:-1]])
    ok = sizes >= 2
    ratios = np.full(g.n, -np.inf)
    ratios[ok] = (2.0 * edges[ok] / sizes[ok]) / omega.vector(sizes[ok])
    best_k, best = 0, ratios[0]
    for k in np.flatnonzero(ok)[1:]:
        # strict improvement only: on ties keep the larger suffix
        if ratios[k] > best + TIE_TOL * max(1.0, abs(best)):
            best_k, best = int(k), float(ratios[k])
    return np.sort(order[best_k:]), float(best)


def extract_maximal(g: ColoredGraph, omega: OmegaFunction = LOG2, max_passes: int = 50) -> OmegaResult:
    """Heuristic ω-maximal subgraph by min-degree peeling with restarts.

    Each pass peels the current graph and keeps the best-ratio suffix; the
    next pass restarts on that suffix.  Stops when a pass does not improve.
    The result never scores below ``omega_ratio(g)``.
    """
    if g.n < 2:
        raise TooSmall(f"need at least 2 vertices, got {g.n}")
    if g.m == 0:
        raise NoEdges("graph has no edges")
    current = np.arange(g.n, dtype=np.int64)
    sub = g
    ratio = omega_ratio(g, omega)
    for _ in range(max_passes):
        keep, r = _best_suffix(sub, omega)
        if keep.size == sub.n or r <= ratio + TIE_TOL * max(1.0, abs(ratio)):
            break
        current = current[keep]
        ratio = r
        sub, _ = induced_subgraph(sub, keep)
    return OmegaResult(tuple(current.tolist()), ratio, False)


def _subset_edge_counts(g: ColoredGraph) -> np.ndarray:
    n = g.n
    adj = np.zeros(n, dtype=np.int64)
    for u, v in zip(g.eu.tolist(), g.ev.tolist()):
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    counts = np.zeros(1 << n, dtype=np.int64)
    for i in range(n):
        low = np.arange(1 << i, dtype=np.int64)
        counts[(1 << i) + low] = counts[low] + np.bitwise_count(adj[i] & low)
    return counts


def brute_force_maximal(g: ColoredGraph, omega: OmegaFunction = LOG2) -> OmegaResult:
    """Exact ω-maximal subgraph by enumerating all 2^n vertex subsets.

    Ties (within the comparison tolerance) go to the smaller subset, then to
    the lexicographically smallest sorted vertex list.
    """
    if g.n > BRUTE_FORCE_LIMIT:
        raise TooLarge(f"brute force limited to {BRUTE_FORCE_LIMIT} vertices, got {g.n}")
    if g.n < 2:
        raise TooSmall(f"need at least 2 vertices, got {g.n}")
    counts = _subset_edge_counts(g)
    masks = np.arange(1 << g.n, dtype=np.int64)
    sizes = np.bitwise_count(masks).astype(np.int64)
    ok = sizes >= 2
    ratios = np.full(masks.size, -np.inf)
    ratios[ok] = (2.0 * counts[ok] / sizes[ok]) / omega.vector(sizes[ok])
    best = ratios.max()
    near = ok & (ratios >= best - TIE_TOL * max(1.0, abs(best)))
    smallest = sizes[near].min()
    cand = masks[near & (sizes == smallest)]
    members = [tuple(v for v in range(g.n) if (int(mk) >> v) & 1) for mk in cand]
    pick = min(members)
    edges = int(counts[sum(1 << v for v in pick)])
    return OmegaResult(pick, _ratio(edges, len(pick), omega), True)


def check_min_degree(g: ColoredGraph, omega: OmegaFunction = LOG2) -> bool:
    """Whether δ(g) ≥ d(g)/2, the minimum-degree property of ω-maximal graphs."""
    if g.n < 2:
        raise TooSmall(f"need at least 2 vertices, got {g.n}")
    # δ ≥ m/n, kept in integers
    return int(g.degrees().min()) * g.n >= g.m
