"""Certificate objects and their JSON forms.

Certificates are plain vertex/color listings; nothing in them is trusted until
:mod:`rainbowsub.verify` has checked them against the host graph.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

__all__ = ["RainbowPath", "RainbowCycle", "SubdivisionCertificate", "certificate_from_json", "dumps"]


@dataclass(frozen=True)
class RainbowPath:
    vertices: tuple[int, ...]
    colors: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(int(v) for v in self.vertices))
        object.__setattr__(self, "colors", tuple(int(c) for c in self.colors))

    @property
    def length(self) -> int:
        return len(self.colors)

    @property
    def interior(self) -> tuple[int, ...]:
        return self.vertices[1:-1]

    def reversed(self) -> "RainbowPath":
        return RainbowPath(self.vertices[::-1], self.colors[::-1])

    def to_json(self) -> dict:
        return {"vertices": list(self.vertices), "colors": list(self.colors)}


@dataclass(frozen=True)
class RainbowCycle:
    """Closed vertex sequence (first == last) with one color per edge."""

    vertices: tuple[int, ...]
    colors: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(int(v) for v in self.vertices))
        object.__setattr__(self, "colors", tuple(int(c) for c in self.colors))

    @property
    def length(self) -> int:
        return len(self.colors)

    def to_json(self) -> dict:
        return {"vertices": list(self.vertices), "colors": list(self.colors)}


@dataclass
class SubdivisionCertificate:
    """Branch vertices plus one path per pair ``(i, j)``, ``i < j``.

    The path for ``(i, j)`` runs from ``branch[i]`` to ``branch[j]``.
    ``rounds_used`` is search bookkeeping and is not serialized.
    """

    branch: tuple[int, ...]
    paths: dict[tuple[int, int], RainbowPath] = field(default_factory=dict)
    rounds_used: int = 0

    @property
    def t(self) -> int:
        return len(self.branch)

    def path_lengths(self) -> list[int]:
        return [p.length for _, p in sorted(self.paths.items())]

    def to_cycle(self) -> RainbowCycle:
        """Close the three paths of a TK_3 into one cycle through the branch vertices."""
        if self.t != 3:
            raise ValueError("only a TK_3 certificate is a cycle")
        p01, p12, p02 = self.paths[(0, 1)], self.paths[(1, 2)], self.paths[(0, 2)].reversed()
        vertices = p01.vertices + p12.vertices[1:] + p02.vertices[1:]
        return RainbowCycle(vertices, p01.colors + p12.colors + p02.colors)

    def to_json(self) -> dict:
        return {
            "branch": list(self.branch),
            "paths": [
                {"pair": [i, j], "vertices": list(p.vertices), "colors": list(p.colors)}
                for (i, j), p in sorted(self.paths.items())
            ],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "SubdivisionCertificate":
        paths = {}
        for entry in obj["paths"]:
            i, j = (int(x) for x in entry["pair"])
            paths[(i, j)] = RainbowPath(entry["vertices"], entry["colors"])
        return cls(tuple(obj["branch"]), paths)


def certificate_from_json(obj: dict):
    """Parse either a subdivision certificate or a cycle certificate."""
    if "branch" in obj:
        return SubdivisionCertificate.from_json(obj)
    if "vertices" in obj and "colors" in obj:
        return RainbowCycle(obj["vertices"], obj["colors"])
    raise ValueError("not a certificate: expected 'branch' or 'vertices'/'colors'")


def dumps(cert) -> str:
    return json.dumps(cert.to_json()) + "\n"
