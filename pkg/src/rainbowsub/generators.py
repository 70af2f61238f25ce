"""Reference graph families with proper edge colorings.

Randomness comes from numpy's PCG64 bit generator (``numpy.random.default_rng``),
which is portable across platforms, so a seed reproduces a graph anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import DimensionOutOfRange, SizeOverflow
from .graph import ColoredGraph, build

__all__ = ["GenSpec", "hypercube", "jung_union", "random_colored", "complete"]

_MAX_VERTICES = 2**31 - 1


def hypercube(d: int) -> ColoredGraph:
    """Q_d on bitmask vertices; an edge gets the index of the flipped bit.

    This coloring has no rainbow cycle: around any cycle each coordinate is
    flipped an even number of times.
    """
    if not 1 <= d <= 30:
        raise DimensionOutOfRange(f"hypercube dimension {d} outside [1, 30]")
    n = 1 << d
    x = np.arange(n, dtype=np.int64)
    us, vs, cs = [], [], []
    for i in range(d):
        low = x[(x >> i) & 1 == 0]
        us.append(low)
        vs.append(low | (1 << i))
        cs.append(np.full(low.size, i, dtype=np.int64))
    return build(n, np.stack([np.concatenate(us), np.concatenate(vs), np.concatenate(cs)], axis=1))


def jung_union(copies: int, side: int) -> ColoredGraph:
    """Disjoint copies of K_{side,side}; edge (i, j) of a copy has color (i + j) mod side.

    Every copy reuses the same palette.
    """
    if copies < 1 or side < 1:
        raise ValueError("copies and side must be positive")
    n = 2 * side * copies
    if n > _MAX_VERTICES or side * side * copies > _MAX_VERTICES:
        raise SizeOverflow(f"jung_union({copies}, {side}) is too large")
    i, j = np.divmod(np.arange(side * side, dtype=np.int64), side)
    base = (2 * side * np.arange(copies, dtype=np.int64))[:, None]
    u = (base + i).ravel()
    v = (base + side + j).ravel()
    c = np.tile((i + j) % side, copies)
    return build(n, np.stack([u, v, c], axis=1))


def complete(n: int) -> ColoredGraph:
    """K_n with the round-robin coloring (a 1-factorization when n is even)."""
    if n < 2:
        raise ValueError("complete graph needs n >= 2")
    i, j = np.triu_indices(n, k=1)
    i = i.astype(np.int64)
    j = j.astype(np.int64)
    if n % 2:
        c = (i + j) % n
    else:
        k = n - 1
        c = np.where(j == k, (2 * i) % k, (i + j) % k)
    return build(n, np.stack([i, j, c], axis=1))


def _gnp_pairs(n: int, p: float, rng: np.random.Generator) -> tuple[np.ndarray, np.ndarray]:
    total = n * (n - 1) // 2
    if total == 0 or p <= 0:
        return np.zeros(0, np.int64), np.zeros(0, np.int64)
    if p >= 1:
        idx = np.arange(total, dtype=np.int64)
    else:
        # geometric gaps between successive present pairs, row-major over i < j
        chunks = []
        pos = -1
        batch = max(16, int(total * p * 1.1) + 64)
        while pos < total:
            steps = np.cumsum(rng.geometric(p, size=batch)) + pos
            chunks.append(steps)
            pos = int(steps[-1])
        idx = np.concatenate(chunks)
        idx = idx[idx < total]
    rows = np.arange(n, dtype=np.int64)
    offsets = rows * (2 * n - rows - 1) // 2
    i = np.searchsorted(offsets, idx, side="right") - 1
    j = idx - offsets[i] + i + 1
    return i, j


def random_colored(n: int, target_avg_degree: float, seed: int) -> ColoredGraph:
    """G(n, p) with p = target/(n-1), greedily edge-colored.

    Edges are colored in a seeded random order, each taking the smallest color
    free at both endpoints, so at most 2Δ-1 colors are used.
    """
    rng = np.random.default_rng(seed)
    p = min(1.0, max(0.0, target_avg_degree / (n - 1))) if n > 1 else 0.0
    u, v = _gnp_pairs(n, p, rng)
    m = u.size
    if m == 0:
        return build(max(n, 0), [])
    deg = np.bincount(np.concatenate([u, v]), minlength=n)
    order = rng.permutation(m).astype(np.int64)
    colors = kernels.greedy_color(n, u, v, order, int(2 * deg.max() - 1))
    return build(n, np.stack([u, v, colors], axis=1))


_FAMILIES = {
    "hypercube": ("d",),
    "jung": ("copies", "side"),
    "random": ("n", "target_avg_degree"),
    "complete": ("n",),
}


@dataclass(frozen=True)
class GenSpec:
    """A family name plus its parameters, e.g. ``GenSpec("jung", (2, 3))``."""

    family: str
    args: tuple = ()
    seed: int = 0

    def __post_init__(self):
        if self.family not in _FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; choose from {sorted(_FAMILIES)}")
        if len(self.args) != len(_FAMILIES[self.family]):
            names = " ".join(_FAMILIES[self.family])
            raise ValueError(f"family {self.family!r} takes: {names}")

    def generate(self) -> ColoredGraph:
        a = self.args
        if self.family == "hypercube":
            return hypercube(int(a[0]))
        if self.family == "jung":
            return jung_union(int(a[0]), int(a[1]))
        if self.family == "random":
            return random_colored(int(a[0]), float(a[1]), self.seed)
        return complete(int(a[0]))
