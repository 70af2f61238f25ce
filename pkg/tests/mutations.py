"""Certificate mutators: each breaks exactly one condition of a valid TK_t certificate."""

from __future__ import annotations

import copy

import numpy as np

from rainbowsub.certificates import RainbowPath, SubdivisionCertificate
from rainbowsub.expansion import ForbiddenSet

CLASSES = (
    "GlobalColorReuse",
    "EndpointMismatch",
    "PathsIntersect",
    "BranchInsidePath",
    "ForbiddenVertex",
    "NotAdjacent",
)


def _used(cert):
    vs, cs = set(cert.branch), set()
    for p in cert.paths.values():
        vs.update(p.vertices)
        cs.update(p.colors)
    return vs, cs


def _detour(path: RainbowPath, hop: int, z: int, c1: int, c2: int) -> RainbowPath:
    vs = list(path.vertices)
    cs = list(path.colors)
    return RainbowPath(vs[: hop + 1] + [z] + vs[hop + 1 :], cs[:hop] + [c1, c2] + cs[hop + 1 :])


def _with(cert, key, path):
    out = copy.deepcopy(cert)
    out.paths[key] = path
    return out


def _reroute(g, cert, rng, z_ok, colors_ok):
    """Replace one hop a-b by a-z-b for the first acceptable (key, hop, z, c1, c2)."""
    keys = sorted(cert.paths)
    for k in rng.permutation(len(keys)):
        key = keys[k]
        path = cert.paths[key]
        for hop in rng.permutation(path.length):
            a, b = path.vertices[hop], path.vertices[hop + 1]
            for z in rng.permutation(g.n).tolist():
                if z in path.vertices or not z_ok(key, z):
                    continue
                c1, c2 = g.edge_color(a, z), g.edge_color(z, b)
                if c1 is None or c2 is None or c1 == c2:
                    continue
                if colors_ok(key, path, hop, c1, c2):
                    return key, _detour(path, hop, z, c1, c2)
    return None


def _fresh_pair(cert):
    _, used = _used(cert)
    return lambda key, path, hop, c1, c2: c1 not in used and c2 not in used


def _other_interiors(cert, key):
    return {v for k, p in cert.paths.items() if k != key for v in p.interior}


def color_reuse(g, cert, rng):
    vs, used = _used(cert)

    def colors_ok(key, path, hop, c1, c2):
        mine = set(path.colors) - {path.colors[hop]}
        others = used - set(path.colors)
        return c1 in others and c2 not in used and c1 not in mine

    hit = _reroute(g, cert, rng, lambda key, z: z not in vs, colors_ok)
    return None if hit is None else _with(cert, *hit)


def pair_swap(g, cert, rng):
    keys = sorted(cert.paths)
    a, b = rng.choice(len(keys), 2, replace=False)
    out = copy.deepcopy(cert)
    out.paths[keys[a]], out.paths[keys[b]] = cert.paths[keys[b]], cert.paths[keys[a]]
    return out


def shared_interior(g, cert, rng):
    hit = _reroute(g, cert, rng, lambda key, z: z in _other_interiors(cert, key), _fresh_pair(cert))
    return None if hit is None else _with(cert, *hit)


def branch_inside(g, cert, rng):
    branch = set(cert.branch)
    hit = _reroute(g, cert, rng, lambda key, z: z in branch, _fresh_pair(cert))
    return None if hit is None else _with(cert, *hit)


def forbidden_vertex(g, cert, rng):
    """A single path routed through φ0 (vertices of the other paths); returns (path, φ0)."""
    hit = _reroute(g, cert, rng, lambda key, z: z in _other_interiors(cert, key), _fresh_pair(cert))
    if hit is None:
        return None
    key, path = hit
    i, j = key
    others_v, others_c = set(cert.branch) - {cert.branch[i], cert.branch[j]}, set()
    for k, p in cert.paths.items():
        if k != key:
            others_v.update(p.vertices)
            others_c.update(p.colors)
    others_v -= {cert.branch[i], cert.branch[j]}
    return path, ForbiddenSet(others_v, others_c)


def non_edge(g, cert, rng):
    vs, used = _used(cert)
    palette = [c for c in range(g.color_count) if c not in used]
    keys = sorted(cert.paths)
    for k in rng.permutation(len(keys)):
        key = keys[k]
        path = cert.paths[key]
        for hop in rng.permutation(path.length):
            a, b = path.vertices[hop], path.vertices[hop + 1]
            for z in rng.permutation(g.n).tolist():
                if z in vs or g.has_edge(a, z):
                    continue
                c2 = g.edge_color(z, b)
                if c2 is None or c2 in used:
                    continue
                # label the missing edge with a fresh color distinct from c2
                c1 = next((c for c in palette if c != c2), None)
                if c1 is None:
                    continue
                return _with(cert, key, _detour(path, hop, z, c1, c2))
    return None


MUTATORS = {
    "GlobalColorReuse": color_reuse,
    "EndpointMismatch": pair_swap,
    "PathsIntersect": shared_interior,
    "BranchInsidePath": branch_inside,
    "ForbiddenVertex": forbidden_vertex,
    "NotAdjacent": non_edge,
}


def mutate(kind: str, g, cert: SubdivisionCertificate, seed: int):
    return MUTATORS[kind](g, cert, np.random.default_rng(seed))
