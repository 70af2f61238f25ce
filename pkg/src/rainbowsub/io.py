"""Colored edge-list text format.

One edge per line as ``u v c``. ``c`` may be any whitespace-free token;
tokens are interned to dense color ids in first-seen order.  Lines starting
with ``#`` are comments.  An optional header ``n <count>`` fixes the vertex
count, otherwise it is one more than the largest vertex id.
"""

from __future__ import annotations

import os
from typing import Iterable

import numpy as np

from .errors import ParseError
from .graph import ColoredGraph, build

__all__ = ["load", "save", "loads", "dumps"]


def loads(text: str | Iterable[str]) -> ColoredGraph:
    lines = text.splitlines() if isinstance(text, str) else text
    n = None
    seen_edge = False
    intern: dict[str, int] = {}
    edges = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tok = line.split()
        if tok[0] == "n":
            if len(tok) != 2 or seen_edge or n is not None:
                raise ParseError("header 'n <count>' must appear once, before any edge", lineno)
            try:
                n = int(tok[1])
            except ValueError:
                raise ParseError(f"bad vertex count {tok[1]!r}", lineno) from None
            if n < 0:
                raise ParseError(f"bad vertex count {n}", lineno)
            continue
        if len(tok) != 3:
            raise ParseError(f"expected 'u v c', got {line!r}", lineno)
        try:
            u, v = int(tok[0]), int(tok[1])
        except ValueError:
            raise ParseError(f"vertex ids must be integers: {line!r}", lineno) from None
        if u < 0 or v < 0:
            raise ParseError(f"negative vertex id: {line!r}", lineno)
        c = intern.setdefault(tok[2], len(intern))
        edges.append((u, v, c))
        seen_edge = True
    if n is None:
        n = 1 + max((max(u, v) for u, v, _ in edges), default=-1)
    return build(n, edges)


def dumps(g: ColoredGraph) -> str:
    # color-major order makes first-seen interning reproduce the color ids
    order = np.lexsort((g.ev, g.eu, g.ec))
    out = [f"n {g.n}"]
    out.extend(f"{u} {v} {c}" for u, v, c in zip(g.eu[order].tolist(), g.ev[order].tolist(), g.ec[order].tolist()))
    return "\n".join(out) + "\n"


def load(path: str | os.PathLike) -> ColoredGraph:
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())


def save(g: ColoredGraph, path: str | os.PathLike) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(g))
