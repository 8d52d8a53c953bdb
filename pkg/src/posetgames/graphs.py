"""Finite simple undirected graphs on dense integer vertices."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

ENUMERATION_CAP = 6


class FormatError(ValueError):
    """Raised on malformed graph/poset/set-game text, with a line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; vertices are 0..n-1, edges are (u, v) with u < v."""

    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < v < self.n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={self.n}")

    @classmethod
    def of(cls, n: int, edges: Iterable[tuple[int, int]] = ()) -> "Graph":
        """Build a graph, normalizing each edge to (min, max) order."""
        norm = frozenset((min(u, v), max(u, v)) for u, v in edges)
        return cls(n, norm)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def neighbors(self, v: int) -> set[int]:
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range")
        out = set()
        for u, w in self.edges:
            if u == v:
                out.add(w)
            elif w == v:
                out.add(u)
        return out

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))


def complete_graph(k: int) -> Graph:
    if k < 1:
        raise ValueError("complete graph needs at least one vertex")
    return Graph(k, frozenset(combinations(range(k), 2)))


def disjoint_union(a: Graph, b: Graph) -> Graph:
    """Disjoint union; b's vertices are shifted up by a.n."""
    shifted = ((u + a.n, v + a.n) for u, v in b.edges)
    return Graph(a.n + b.n, a.edges | frozenset(shifted))


def closed_neighborhood(g: Graph, v: int) -> set[int]:
    """The vertex v together with all vertices adjacent to it."""
    out = g.neighbors(v)
    out.add(v)
    return out


def enumerate_labeled_graphs(n: int, cap: int = ENUMERATION_CAP) -> Iterator[Graph]:
    """All 2^(n(n-1)/2) labeled simple graphs on n vertices.

    Deterministic order: the possible edges are sorted lexicographically and
    graphs are yielded by ascending edge-subset bitmask.
    """
    if n > cap:
        raise ValueError(f"n={n} exceeds enumeration cap {cap}")
    pairs = sorted(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, frozenset(p for i, p in enumerate(pairs) if mask >> i & 1))


def connected_components(g: Graph) -> list[set[int]]:
    seen: set[int] = set()
    comps = []
    for start in range(g.n):
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for u in g.neighbors(v):
                if u not in comp:
                    comp.add(u)
                    stack.append(u)
        seen |= comp
        comps.append(comp)
    return comps


def parse_graph(text: str) -> Graph:
    """Parse the graph text format: first line n, then "u v" edge lines.

    '#' lines are comments; duplicate or out-of-range edges are errors.
    """
    n = None
    edges: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if n is None:
            try:
                n = int(line)
            except ValueError:
                raise FormatError(f"expected vertex count, got {line!r}", lineno)
            if n < 0:
                raise FormatError("vertex count must be non-negative", lineno)
            continue
        parts = line.split()
        if len(parts) != 2:
            raise FormatError(f"expected 'u v', got {line!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise FormatError(f"non-integer endpoint in {line!r}", lineno)
        if not 0 <= u < v < n:
            raise FormatError(f"edge ({u}, {v}) violates 0 <= u < v < {n}", lineno)
        if (u, v) in edges:
            raise FormatError(f"duplicate edge ({u}, {v})", lineno)
        edges.add((u, v))
    if n is None:
        raise FormatError("empty graph file")
    return Graph(n, frozenset(edges))


def format_graph(g: Graph) -> str:
    lines = [str(g.n)]
    lines.extend(f"{u} {v}" for u, v in sorted(g.edges))
    return "\n".join(lines) + "\n"
