"""Color-restricted neighborhoods, color sampling and expansion measurement."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Mapping

import numpy as np

from .errors import BadProbability, BadSetSize, VertexOutOfRange
from .graph import ColoredGraph

__all__ = [
    "ForbiddenSet",
    "ForbiddenMap",
    "ExpansionReport",
    "restricted_neighborhood",
    "sample_colors",
    "expansion_bound",
    "measure_expansion",
]


@dataclass(frozen=True)
class ForbiddenSet:
    """Forbidden vertices and forbidden colors (φ)."""

    vertices: frozenset = frozenset()
    colors: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "vertices", frozenset(int(v) for v in self.vertices))
        object.__setattr__(self, "colors", frozenset(int(c) for c in self.colors))

    def __len__(self) -> int:
        return len(self.vertices) + len(self.colors)

    def union(self, vertices: Iterable[int] = (), colors: Iterable[int] = ()) -> "ForbiddenSet":
        return ForbiddenSet(self.vertices | set(vertices), self.colors | set(colors))

    def vertex_mask(self, n: int) -> np.ndarray:
        mask = np.zeros(n, dtype=np.uint8)
        vs = [v for v in self.vertices if 0 <= v < n]
        mask[vs] = 1
        return mask

    def color_mask(self, color_count: int) -> np.ndarray:
        mask = np.zeros(color_count, dtype=bool)
        cs = [c for c in self.colors if 0 <= c < color_count]
        mask[cs] = True
        return mask


EMPTY = ForbiddenSet()


@dataclass(frozen=True)
class ForbiddenMap:
    """Per-vertex forbidden sets: ``overrides[v]`` when present, else ``default``."""

    default: ForbiddenSet = EMPTY
    overrides: Mapping[int, ForbiddenSet] = field(default_factory=dict)

    def lookup(self, v: int) -> ForbiddenSet:
        return self.overrides.get(v, self.default)


def _vertex_mask(g: ColoredGraph, vertices) -> np.ndarray:
    if isinstance(vertices, np.ndarray) and vertices.dtype == bool:
        return vertices
    idx = np.fromiter((int(v) for v in vertices), dtype=np.int64)
    if idx.size and (idx.min() < 0 or idx.max() >= g.n):
        raise VertexOutOfRange(f"vertex set not contained in [0, {g.n})")
    mask = np.zeros(g.n, dtype=bool)
    mask[idx] = True
    return mask


def _color_mask(g: ColoredGraph, colors) -> np.ndarray:
    if isinstance(colors, np.ndarray) and colors.dtype == bool:
        return colors
    mask = np.zeros(g.color_count, dtype=bool)
    cs = [c for c in (int(c) for c in colors) if 0 <= c < g.color_count]
    mask[cs] = True
    return mask


def restricted_neighborhood(
    g: ColoredGraph, X, Q, phi: ForbiddenMap | ForbiddenSet | None = None
) -> set[int]:
    """``{y ∉ X : some x ∈ X has xy ∈ E, f(xy) ∈ Q minus φ(x), y ∉ φ(x)}``.

    ``X`` and ``Q`` may be iterables of ids or boolean masks.
    """
    if phi is None:
        phi = ForbiddenMap()
    elif isinstance(phi, ForbiddenSet):
        phi = ForbiddenMap(default=phi)
    xmask = _vertex_mask(g, X)
    qmask = _color_mask(g, Q)
    masks = {}

    def forbidden(fs: ForbiddenSet):
        key = id(fs)
        if key not in masks:
            masks[key] = (fs.vertex_mask(g.n).astype(bool), fs.color_mask(g.color_count))
        return masks[key]

    hit = np.zeros(g.n, dtype=bool)
    for x in np.flatnonzero(xmask).tolist():
        fv, fc = forbidden(phi.lookup(x))
        lo, hi = g.indptr[x], g.indptr[x + 1]
        ys, cs = g.nbr[lo:hi], g.col[lo:hi]
        ok = qmask[cs] & ~fc[cs] & ~fv[ys] & ~xmask[ys]
        hit[ys[ok]] = True
    return set(np.flatnonzero(hit).tolist())


def _check_p(p: float) -> None:
    if not (0.0 <= p <= 1.0) or math.isnan(p):
        raise BadProbability(f"probability {p} outside [0, 1]")


def _sample_mask(color_count: int, p: float, seed) -> np.ndarray:
    return np.random.default_rng(seed).random(color_count) < p


def sample_colors(color_count: int, p: float, seed) -> frozenset[int]:
    """Keep each color independently with probability ``p``."""
    _check_p(p)
    return frozenset(np.flatnonzero(_sample_mask(color_count, p, seed)).tolist())


def expansion_bound(n: int, b: int) -> float:
    """``min(b/4, b·log2(2n/3b) / (8·log2 b))``, all logs base 2."""
    return min(b / 4, b * math.log2(2 * n / (3 * b)) / (8 * math.log2(b)))


@dataclass
class ExpansionReport:
    trials: int
    bound: float
    observed: list[int]
    success_fraction: float

    def to_json(self) -> dict:
        return {
            "trials": self.trials,
            "bound": self.bound,
            "observed": self.observed,
            "success_fraction": self.success_fraction,
        }


def measure_expansion(
    g: ColoredGraph,
    B,
    phi: ForbiddenMap | ForbiddenSet | None,
    p_c: float,
    trials: int,
    seed: int,
) -> ExpansionReport:
    """Sample colors ``trials`` times and record ``|N_{Q,φ}(B)|`` against the expansion bound.

    Trial ``k`` samples with seed ``seed + k``.
    """
    _check_p(p_c)
    bmask = _vertex_mask(g, B)
    b = int(bmask.sum())
    if not 2 <= b <= g.n / 2:
        raise BadSetSize(f"|B| = {b} must satisfy 2 <= |B| <= n/2 = {g.n / 2}")
    bound = expansion_bound(g.n, b)
    observed = sorted(
        len(restricted_neighborhood(g, bmask, _sample_mask(g.color_count, p_c, seed + k), phi))
        for k in range(trials)
    )
    hits = sum(1 for x in observed if x >= bound)
    return ExpansionReport(trials, bound, observed, hits / trials if trials else 0.0)
