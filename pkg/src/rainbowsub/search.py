"""Rainbow path search: sprinkled BFS, two-sided connection, TK_t assembly.

Colors are exposed in ``l`` rounds.  Round ``i`` offers each color
independently with probability ``q_i`` (see :func:`q_schedule`), so the union
of all rounds is one Bernoulli(p_c) sample per color.  A vertex reached
before round ``i`` may extend its stored path by one edge whose color is
offered in round ``i``, provided the new endpoint is unreached and the color
is not already on the path.  Paths therefore stay rainbow and have length at
most ``l``.
"""

from __future__ import annotations

import itertools
import logging
import math
import warnings
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .certificates import RainbowCycle, RainbowPath, SubdivisionCertificate
from .errors import (
    BadProbability,
    ForbiddenOrigin,
    NoConnection,
    NoCycleFound,
    PairFailed,
    TooFewVertices,
    VertexOutOfRange,
)
from .expansion import EMPTY, ForbiddenSet
from .graph import ColoredGraph, induced_subgraph
from .omega import LOG2, extract_maximal
from .verify import verify_cycle, verify_path, verify_subdivision

__all__ = [
    "SearchParams",
    "ReachSet",
    "PhiBudgetWarning",
    "default_rounds",
    "q_schedule",
    "reach",
    "connect",
    "build_tkt",
    "find_rainbow_cycle",
]

log = logging.getLogger(__name__)


class PhiBudgetWarning(RuntimeWarning):
    """The forbidden set is larger than d / (16 log2 n)."""


def default_rounds(n: int) -> int:
    """``ceil(32 · log2 n · log2 log2 n)``, at least 1."""
    if n <= 2:
        return 1
    lg = math.log2(n)
    return max(1, math.ceil(32 * lg * math.log2(lg)))


@dataclass(frozen=True)
class SearchParams:
    """Tunable constants of the search.

    ``rounds`` defaults to :func:`default_rounds` clamped to ``max_len``.
    ``lam`` only feeds the hypothesis diagnostics. ``extract`` switches the
    log-maximal extraction in :func:`build_tkt` on or off.
    """

    p_c: float = 0.5
    lam: float = 1.0
    rounds: int | None = None
    max_len: int = 64
    retries: int = 3
    seed: int = 0
    extract: bool = True

    def __post_init__(self):
        if not 0 < self.p_c <= 1:
            raise BadProbability(f"p_c = {self.p_c} outside (0, 1]")
        if self.rounds is not None and self.rounds < 1:
            raise ValueError("rounds must be >= 1")
        if self.max_len < 1:
            raise ValueError("max_len must be >= 1")
        if self.retries < 0:
            raise ValueError("retries must be >= 0")
        if self.lam <= 0:
            raise ValueError("lambda must be positive")

    def rounds_for(self, n: int) -> int:
        if self.rounds is not None:
            return self.rounds
        return max(1, min(default_rounds(n), self.max_len))


def q_schedule(p_c: float, l: int) -> list[float]:
    """Per-round inclusion probabilities whose union matches Bernoulli(p_c).

    ``q_1 = p_c / 2`` and every later round uses the same ``q`` chosen so that
    ``(1 - q_1)(1 - q)^(l-1) = 1 - p_c``.
    """
    if not 0 < p_c <= 1:
        raise BadProbability(f"p_c = {p_c} outside (0, 1]")
    if l < 1:
        raise ValueError("need at least one round")
    if l == 1:
        return [p_c]
    q1 = p_c / 2
    if p_c == 1:
        q = 1.0
    else:
        q = -math.expm1((math.log1p(-p_c) - math.log1p(-q1)) / (l - 1))
    return [q1] + [q] * (l - 1)


def _sample_rounds(
    rng: np.random.Generator, palette: np.ndarray, schedule: list[float], condition: bool
) -> list[np.ndarray]:
    """Colors offered per round, each round in a random scan order.

    With ``condition`` every palette color is offered in at least one round,
    i.e. the rounds are drawn conditioned on their union being the palette.
    """
    q = np.asarray(schedule)[:, None]
    hits = rng.random((len(schedule), palette.size)) < q
    if condition and palette.size:
        if not (q > 0).any():
            raise BadProbability("cannot offer a nonempty palette with all-zero round probabilities")
        missing = np.flatnonzero(~hits.any(axis=0))
        while missing.size:
            hits[:, missing] = rng.random((len(schedule), missing.size)) < q
            missing = missing[~hits[:, missing].any(axis=0)]
    return [rng.permutation(palette[row]) for row in hits]


@dataclass
class ReachSet:
    """Vertices reached from ``origin`` with their stored rainbow paths.

    The paths form a tree given by ``parent``/``pcolor``; ``round_of[v]`` is
    the round that reached ``v`` (0 for the origin, -1 when unreached).
    """

    origin: int
    parent: np.ndarray
    pcolor: np.ndarray
    round_of: np.ndarray
    depth: np.ndarray
    rounds_used: int
    colors_sampled: list[np.ndarray] = field(repr=False)

    @property
    def reached(self) -> np.ndarray:
        return self.round_of > 0

    def __len__(self) -> int:
        return int((self.round_of > 0).sum())

    def __contains__(self, v: int) -> bool:
        return bool(self.round_of[v] > 0)

    def path_to(self, v: int) -> RainbowPath:
        if self.round_of[v] < 0:
            raise KeyError(v)
        vs, cs = [v], []
        while v != self.origin:
            cs.append(int(self.pcolor[v]))
            v = int(self.parent[v])
            vs.append(v)
        return RainbowPath(vs[::-1], cs[::-1])

    @property
    def paths(self) -> dict[int, RainbowPath]:
        return {v: self.path_to(v) for v in np.flatnonzero(self.round_of > 0).tolist()}


def _run_reach(
    g: ColoredGraph,
    origin: int,
    forb_v: np.ndarray,
    palette: np.ndarray,
    p: float,
    l: int,
    rng: np.random.Generator,
    condition: bool,
) -> ReachSet:
    rounds = _sample_rounds(rng, palette, q_schedule(p, l), condition) if p > 0 else [palette[:0]] * l
    rptr = np.zeros(l + 1, dtype=np.int64)
    np.cumsum([r.size for r in rounds], out=rptr[1:])
    rcolors = np.concatenate(rounds).astype(np.int64) if rounds else np.zeros(0, np.int64)
    cptr, csrc, cdst = g.color_classes
    parent, pcolor, rnd, depth, used = kernels.reach_rounds(g.n, origin, cptr, csrc, cdst, rptr, rcolors, forb_v)
    return ReachSet(origin, parent, pcolor, rnd, depth, int(used), rounds)


def _check_vertex(g: ColoredGraph, v: int) -> None:
    if not 0 <= v < g.n:
        raise VertexOutOfRange(f"vertex {v} outside [0, {g.n})")


def reach(
    g: ColoredGraph,
    v: int,
    phi0: ForbiddenSet = EMPTY,
    params: SearchParams = SearchParams(),
    rng: np.random.Generator | None = None,
) -> ReachSet:
    """Sprinkled rainbow BFS from ``v`` over colors sampled with ``params.p_c``.

    Forbidden vertices are never entered and forbidden colors never offered.
    """
    _check_vertex(g, v)
    if v in phi0.vertices:
        raise ForbiddenOrigin(f"origin {v} is forbidden")
    rng = rng if rng is not None else np.random.default_rng(params.seed)
    palette = np.flatnonzero(~phi0.color_mask(g.color_count))
    return _run_reach(g, v, phi0.vertex_mask(g.n), palette, params.p_c, params.rounds_for(g.n), rng, False)


def _splice(pu: RainbowPath, pv: RainbowPath) -> RainbowPath:
    # pu runs u -> w, pv runs v -> w; cut at the first vertex of pu lying on pv
    where = {x: k for k, x in enumerate(pv.vertices)}
    a = next(k for k, x in enumerate(pu.vertices) if x in where)
    b = where[pu.vertices[a]]
    vertices = pu.vertices[: a + 1] + pv.vertices[:b][::-1]
    colors = pu.colors[:a] + pv.colors[:b][::-1]
    return RainbowPath(vertices, colors)


def _connect(g, u, v, phi0, params, rng):
    l = params.rounds_for(g.n)
    forb_v = phi0.vertex_mask(g.n)
    free = ~phi0.color_mask(g.color_count)
    sizes = []
    for _ in range(params.retries + 1):
        side = rng.random(g.color_count) < params.p_c
        ru = _run_reach(g, u, forb_v, np.flatnonzero(free & side), params.p_c, l, rng, True)
        rv = _run_reach(g, v, forb_v, np.flatnonzero(free & ~side), 1.0 - params.p_c, l, rng, True)
        sizes.append((len(ru), len(rv)))
        both = np.flatnonzero((ru.round_of >= 0) & (rv.round_of >= 0))
        if both.size == 0:
            continue
        total = ru.depth[both] + rv.depth[both]
        w = int(both[np.argmin(total)])
        pu, pv = ru.path_to(w), rv.path_to(w)
        assert not set(pu.colors) & set(pv.colors), "the two halves share a color"
        path = _splice(pu, pv)
        verdict = verify_path(g, path, phi0)
        assert verdict.ok, verdict.violations
        return path, max(ru.rounds_used, rv.rounds_used)
    raise NoConnection(f"no rainbow path from {u} to {v} after {params.retries + 1} attempts", sizes)


def connect(
    g: ColoredGraph,
    u: int,
    v: int,
    phi0: ForbiddenSet = EMPTY,
    params: SearchParams = SearchParams(),
    rng: np.random.Generator | None = None,
) -> RainbowPath:
    """Rainbow path from ``u`` to ``v`` avoiding ``phi0``.

    Each attempt splits the free colors into ``R_u`` (probability ``p_c``) and
    ``R_v``, grows one reach set from each end inside its own palette, and
    joins them at the meeting vertex with the fewest total path vertices.
    Up to ``params.retries`` further attempts use fresh randomness.
    """
    _check_vertex(g, u)
    _check_vertex(g, v)
    if u == v:
        raise ValueError("endpoints must differ")
    for x in (u, v):
        if x in phi0.vertices:
            raise ForbiddenOrigin(f"endpoint {x} is forbidden")
    rng = rng if rng is not None else np.random.default_rng(params.seed)
    return _connect(g, u, v, phi0, params, rng)[0]


def _phi_budget(g: ColoredGraph) -> float:
    if g.n < 2:
        return 0.0
    return (2.0 * g.m / g.n) / (16 * math.log2(g.n))


def _host(g: ColoredGraph, t: int, params: SearchParams) -> tuple[ColoredGraph, np.ndarray]:
    ids = np.arange(g.n, dtype=np.int64)
    if not params.extract or g.m == 0:
        return g, ids
    res = extract_maximal(g, LOG2)
    if len(res.vertices) < t:
        log.debug("log-maximal subgraph has %d < t vertices; searching the whole graph", len(res.vertices))
        return g, ids
    sub, _ = induced_subgraph(g, res.vertices)
    return sub, np.asarray(res.vertices, dtype=np.int64)


def build_tkt(g: ColoredGraph, t: int, params: SearchParams = SearchParams()) -> SubdivisionCertificate:
    """Greedily assemble a rainbow subdivision of K_t.

    Works inside a log-maximal subgraph (unless ``params.extract`` is off),
    takes the ``t`` highest-degree vertices as branch vertices and connects
    the pairs in a seeded random order.  Each new path must avoid every vertex
    and color of the accepted paths and every other branch vertex.
    """
    if t < 2:
        raise ValueError("t must be at least 2")
    if g.n < t:
        raise TooFewVertices(f"graph has {g.n} vertices, need at least {t}")
    host, back = _host(g, t, params)
    deg = host.degrees()
    order = np.lexsort((np.arange(host.n), -deg))
    branch = [int(x) for x in order[:t]]
    pairs = list(itertools.combinations(range(t), 2))
    rng = np.random.default_rng(params.seed)
    pairs = [pairs[k] for k in rng.permutation(len(pairs))]

    budget = _phi_budget(host)
    accepted: dict[tuple[int, int], RainbowPath] = {}
    used_v: set[int] = set()
    used_c: set[int] = set()
    rounds_used = 0

    def lift(p: RainbowPath) -> RainbowPath:
        return RainbowPath([int(back[x]) for x in p.vertices], p.colors)

    for i, j in pairs:
        bi, bj = branch[i], branch[j]
        phi0 = ForbiddenSet((used_v | set(branch)) - {bi, bj}, used_c)
        if len(phi0) > budget:
            warnings.warn(
                f"|phi0| = {len(phi0)} exceeds d/(16 log2 n) = {budget:.2f}", PhiBudgetWarning, stacklevel=2
            )
        pair_rng = np.random.default_rng([params.seed, i + 1, j + 1])
        try:
            path, used = _connect(host, bi, bj, phi0, params, pair_rng)
        except NoConnection as exc:
            partial = SubdivisionCertificate(
                tuple(int(back[b]) for b in branch), {k: lift(p) for k, p in accepted.items()}, rounds_used
            )
            raise PairFailed(f"could not connect branch pair ({i}, {j}): {exc}", (i, j), partial) from exc
        accepted[(i, j)] = path
        used_v.update(path.vertices)
        used_c.update(path.colors)
        rounds_used = max(rounds_used, used)

    cert = SubdivisionCertificate(
        tuple(int(back[b]) for b in branch), {k: lift(p) for k, p in sorted(accepted.items())}, rounds_used
    )
    verdict = verify_subdivision(g, cert)
    assert verdict.ok, verdict.violations
    return cert


def find_rainbow_cycle(g: ColoredGraph, params: SearchParams = SearchParams()) -> RainbowCycle:
    """A rainbow cycle through three branch vertices (the t = 3 case of :func:`build_tkt`).

    Raises NoCycleFound when the search gives up, which proves nothing.
    """
    if g.n < 3:
        raise TooFewVertices(f"graph has {g.n} vertices, need at least 3")
    if g.m < 3:
        raise NoCycleFound("fewer than 3 edges")
    try:
        cert = build_tkt(g, 3, params)
    except PairFailed as exc:
        raise NoCycleFound(str(exc)) from exc
    cycle = cert.to_cycle()
    verdict = verify_cycle(g, cycle)
    assert verdict.ok, verdict.violations
    return cycle
