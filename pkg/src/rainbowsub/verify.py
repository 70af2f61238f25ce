"""Independent certificate checks and exhaustive oracles for tiny graphs.

Nothing here imports the search code: a certificate is checked against the
host graph alone.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field

from .certificates import RainbowCycle, RainbowPath, SubdivisionCertificate
from .errors import BudgetExceeded
from .graph import ColoredGraph

__all__ = [
    "Verdict",
    "CODES",
    "verify_path",
    "verify_cycle",
    "verify_subdivision",
    "verify_certificate",
    "rainbow_cycle_oracle",
    "rainbow_cycle_by_edge_subsets",
    "CrossCheckReport",
    "cross_check",
]

CODES = (
    "NotAPath",
    "NotAdjacent",
    "ColorMismatch",
    "RepeatVertex",
    "RepeatColor",
    "ForbiddenVertex",
    "ForbiddenColor",
    "EndpointMismatch",
    "PathsIntersect",
    "BranchInsidePath",
    "GlobalColorReuse",
)


@dataclass
class Verdict:
    violations: list[tuple[str, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def codes(self) -> set[str]:
        return {code for code, _ in self.violations}

    def add(self, code: str, detail: str) -> None:
        self.violations.append((code, detail))

    def extend(self, other: "Verdict", prefix: str = "") -> None:
        self.violations.extend((code, prefix + detail) for code, detail in other.violations)

    def __bool__(self) -> bool:
        return self.ok


def _hops(g: ColoredGraph, vertices, colors, out: Verdict) -> None:
    for k, (a, b, c) in enumerate(zip(vertices, vertices[1:], colors)):
        actual = g.edge_color(a, b)
        if actual is None:
            out.add("NotAdjacent", f"hop {k}: {a}-{b} is not an edge")
        elif actual != c:
            out.add("ColorMismatch", f"hop {k}: {a}-{b} has color {actual}, certificate says {c}")


def _repeats(items, code: str, what: str, out: Verdict) -> None:
    for x, k in sorted(Counter(items).items()):
        if k > 1:
            out.add(code, f"{what} {x} occurs {k} times")


def verify_path(
    g: ColoredGraph,
    path: RainbowPath,
    forbidden=None,
    allowed=None,
    *,
    check_endpoints: bool = False,
) -> Verdict:
    """Check that ``path`` is a rainbow path of ``g``.

    ``forbidden`` (a ForbiddenSet) bans interior vertices and all colors; with
    ``check_endpoints`` the endpoints must avoid it too.  ``allowed`` restricts
    the colors to a given set.
    """
    out = Verdict()
    vs, cs = list(path.vertices), list(path.colors)
    if not vs:
        out.add("NotAPath", "empty vertex sequence")
        return out
    if len(cs) != len(vs) - 1:
        out.add("NotAPath", f"{len(vs)} vertices but {len(cs)} colors")
        return out
    bad = [v for v in vs if not 0 <= v < g.n]
    if bad:
        out.add("NotAPath", f"vertices {bad} outside [0, {g.n})")
        return out
    _hops(g, vs, cs, out)
    _repeats(vs, "RepeatVertex", "vertex", out)
    _repeats(cs, "RepeatColor", "color", out)
    if forbidden is not None:
        checked = vs if check_endpoints else vs[1:-1]
        for v in checked:
            if v in forbidden.vertices:
                out.add("ForbiddenVertex", f"vertex {v} is forbidden")
        for c in cs:
            if c in forbidden.colors:
                out.add("ForbiddenColor", f"color {c} is forbidden")
    if allowed is not None:
        allowed = set(allowed)
        for c in cs:
            if c not in allowed:
                out.add("ForbiddenColor", f"color {c} is outside the allowed palette")
    return out


def verify_cycle(g: ColoredGraph, cycle: RainbowCycle) -> Verdict:
    """Closed sequence, length >= 3, distinct vertices and distinct colors."""
    out = Verdict()
    vs, cs = list(cycle.vertices), list(cycle.colors)
    if len(vs) < 4 or vs[0] != vs[-1]:
        out.add("NotAPath", "a cycle needs a closed sequence of at least 3 distinct vertices")
        return out
    if len(cs) != len(vs) - 1:
        out.add("NotAPath", f"{len(vs)} vertices but {len(cs)} colors")
        return out
    bad = [v for v in vs if not 0 <= v < g.n]
    if bad:
        out.add("NotAPath", f"vertices {bad} outside [0, {g.n})")
        return out
    _hops(g, vs, cs, out)
    _repeats(vs[:-1], "RepeatVertex", "vertex", out)
    _repeats(cs, "RepeatColor", "color", out)
    return out


def verify_subdivision(g: ColoredGraph, cert: SubdivisionCertificate) -> Verdict:
    """Check every condition of a rainbow TK_t certificate, collecting all violations."""
    out = Verdict()
    branch = list(cert.branch)
    t = len(branch)
    if t < 2:
        out.add("NotAPath", f"need at least 2 branch vertices, got {t}")
        return out
    bad = [b for b in branch if not 0 <= b < g.n]
    if bad:
        out.add("NotAPath", f"branch vertices {bad} outside [0, {g.n})")
        return out
    _repeats(branch, "RepeatVertex", "branch vertex", out)
    branch_set = set(branch)

    wanted = set(itertools.combinations(range(t), 2))
    for pair in sorted(set(cert.paths) - wanted):
        out.add("NotAPath", f"unexpected pair {pair}")
    for pair in sorted(wanted - set(cert.paths)):
        out.add("NotAPath", f"missing path for pair {pair}")

    owner_of_vertex: dict[int, tuple] = {}
    owner_of_color: dict[int, tuple] = {}
    for pair, path in sorted(cert.paths.items()):
        out.extend(verify_path(g, path), prefix=f"pair {pair}: ")
        if pair not in wanted or not path.vertices:
            continue
        i, j = pair
        if {path.vertices[0], path.vertices[-1]} != {branch[i], branch[j]} or len(path.vertices) < 2:
            out.add(
                "EndpointMismatch",
                f"pair {pair}: path ends are {path.vertices[0]}, {path.vertices[-1]}; "
                f"expected {branch[i]}, {branch[j]}",
            )
        for v in set(path.interior):
            if v in branch_set:
                out.add("BranchInsidePath", f"pair {pair}: branch vertex {v} is an interior vertex")
            elif v in owner_of_vertex:
                out.add("PathsIntersect", f"pairs {owner_of_vertex[v]} and {pair} share interior vertex {v}")
            else:
                owner_of_vertex[v] = pair
        for c in set(path.colors):
            if c in owner_of_color:
                out.add("GlobalColorReuse", f"pairs {owner_of_color[c]} and {pair} both use color {c}")
            else:
                owner_of_color[c] = pair
    return out


def verify_certificate(g: ColoredGraph, cert) -> Verdict:
    if isinstance(cert, SubdivisionCertificate):
        return verify_subdivision(g, cert)
    if isinstance(cert, RainbowCycle):
        return verify_cycle(g, cert)
    if isinstance(cert, RainbowPath):
        return verify_path(g, cert)
    raise TypeError(f"cannot verify {type(cert).__name__}")


# -- exhaustive oracles ---------------------------------------------------------


def rainbow_cycle_oracle(
    g: ColoredGraph,
    max_edges: int = 64,
    max_vertices: int = 20,
    node_budget: int = 10_000_000,
) -> RainbowCycle | None:
    """Find a rainbow cycle by exhaustive DFS, or return None when none exists.

    Each cycle is rooted at its smallest vertex; a branch is abandoned as soon
    as it would repeat a color. ``None`` is a certificate of absence.
    """
    if g.m > max_edges and g.n > max_vertices:
        raise BudgetExceeded(f"graph with {g.n} vertices and {g.m} edges exceeds the oracle budget")
    adj = [g.colored_neighbors(v) for v in range(g.n)]
    expanded = 0

    for s in range(g.n):
        path = [s]
        colors: list[int] = []
        on_path = {s}
        # explicit stack of neighbor iterators keeps deep graphs off the C stack
        stack = [iter(adj[s])]
        used = 0
        while stack:
            step = next(stack[-1], None)
            if step is None:
                stack.pop()
                if len(path) > 1:
                    on_path.discard(path.pop())
                    used &= ~(1 << colors.pop())
                continue
            w, c = step
            if used >> c & 1:
                continue
            if w == s:
                if len(path) >= 3:
                    return RainbowCycle(path + [s], colors + [c])
                continue
            if w < s or w in on_path:
                continue
            expanded += 1
            if expanded > node_budget:
                raise BudgetExceeded(f"oracle expanded more than {node_budget} nodes")
            path.append(w)
            colors.append(c)
            on_path.add(w)
            used |= 1 << c
            stack.append(iter(adj[w]))
    return None


def rainbow_cycle_by_edge_subsets(g: ColoredGraph, max_edges: int = 16) -> bool:
    """Second oracle: does some rainbow edge subset form a single cycle?"""
    if g.m > max_edges:
        raise BudgetExceeded(f"edge-subset oracle limited to {max_edges} edges, got {g.m}")
    edges = g.edges()
    for size in range(3, len(edges) + 1):
        for subset in itertools.combinations(edges, size):
            if len({c for _, _, c in subset}) < size:
                continue
            deg = Counter()
            for u, v, _ in subset:
                deg[u] += 1
                deg[v] += 1
            if any(k != 2 for k in deg.values()) or len(deg) != size:
                continue
            # 2-regular: one cycle iff connected
            nbrs: dict[int, list[int]] = {}
            for u, v, _ in subset:
                nbrs.setdefault(u, []).append(v)
                nbrs.setdefault(v, []).append(u)
            start = subset[0][0]
            seen, todo = {start}, [start]
            while todo:
                x = todo.pop()
                for y in nbrs[x]:
                    if y not in seen:
                        seen.add(y)
                        todo.append(y)
            if len(seen) == size:
                return True
    return False


@dataclass
class CrossCheckReport:
    trials: int
    oracle_cycle: RainbowCycle | None
    search_successes: list[int]
    consistent: bool
    incomplete: bool

    def to_json(self) -> dict:
        return {
            "trials": self.trials,
            "oracle": "none" if self.oracle_cycle is None else self.oracle_cycle.to_json(),
            "search_successes": self.search_successes,
            "consistent": self.consistent,
            "incomplete": self.incomplete,
        }


def cross_check(g: ColoredGraph, params, trials: int, **oracle_kw) -> CrossCheckReport:
    """Run the randomized cycle search against the exhaustive oracle.

    A search success where the oracle proves absence is a soundness bug
    (``consistent`` is False). An oracle witness that every search trial
    missed is only recorded as ``incomplete``.
    """
    from dataclasses import replace

    from .errors import SearchFailure
    from .search import find_rainbow_cycle

    witness = rainbow_cycle_oracle(g, **oracle_kw)
    wins, unverified = [], 0
    for k in range(trials):
        seed = params.seed + k
        try:
            cycle = find_rainbow_cycle(g, replace(params, seed=seed))
        except SearchFailure:
            continue
        wins.append(seed)
        if not verify_cycle(g, cycle).ok:
            unverified += 1
    consistent = unverified == 0 and not (witness is None and wins)
    return CrossCheckReport(trials, witness, wins, consistent, witness is not None and not wins)
