"""Winner-preserving reductions between the three games.

``psi`` pads a graph with complete graphs so that the edge count is odd and
every vertex has a non-incident edge, without changing the Kayles winner.
``phi`` turns a graph into a three-level poset whose poset game mirrors the
Kayles game on the graph.  ``poset_to_setgame`` replaces a poset by the
collection of its upper cones.
"""

from __future__ import annotations

from dataclasses import dataclass

from .games import SetGame
from .graphs import Graph, complete_graph, disjoint_union
from .posets import Poset

Edge = tuple[int, int]


def psi(g: Graph) -> Graph:
    """Append K2 + K2 (odd edge count) or K2 + K4 (even) as new components.

    New vertices take the highest indices, K2 first.  The result always has
    an odd number of edges, and every vertex has an edge not incident to it.
    """
    out = disjoint_union(g, complete_graph(2))
    if len(g.edges) % 2 == 1:
        return disjoint_union(out, complete_graph(2))
    return disjoint_union(out, complete_graph(4))


@dataclass(frozen=True)
class PhiImage:
    """Three-level poset built from a graph, with its index bookkeeping.

    Levels, lowest to highest: A holds one copy per edge (the image of
    gamma), B holds the vertices, C holds the edges.  Element indices are
    laid out A-block first (in edge order), then B (vertex order), then C
    (edge order), so gamma is a fixed offset between the C and A blocks.
    """

    poset: Poset
    source: Graph
    edge_order: tuple[Edge, ...]

    @property
    def num_edges(self) -> int:
        return len(self.edge_order)

    def a_of_edge(self, e: Edge) -> int:
        return self.edge_order.index(_norm(e))

    def b_of_vertex(self, v: int) -> int:
        if not 0 <= v < self.source.n:
            raise ValueError(f"vertex {v} out of range")
        return self.num_edges + v

    def c_of_edge(self, e: Edge) -> int:
        return self.num_edges + self.source.n + self.edge_order.index(_norm(e))

    def gamma(self, c_index: int) -> int:
        """Map a C-element (an edge) to its A-level copy."""
        offset = self.num_edges + self.source.n
        if not offset <= c_index < self.poset.m:
            raise ValueError(f"index {c_index} is not in level C")
        return c_index - offset

    def a_elements(self) -> range:
        return range(self.num_edges)

    def b_elements(self) -> range:
        return range(self.num_edges, self.num_edges + self.source.n)

    def c_elements(self) -> range:
        return range(self.num_edges + self.source.n, self.poset.m)


def _norm(e: Edge) -> Edge:
    return (min(e), max(e))


def phi(g: Graph) -> PhiImage:
    """Build the three-level poset for a graph.

    Generating relations, for each edge e = (v1, v2) and vertex b:
    b <= e iff b is an endpoint of e, and gamma(e) <= b iff b is not an
    endpoint of e.  The stored order is the reflexive-transitive closure.
    """
    edges = tuple(sorted(g.edges))
    ne, nv = len(edges), g.n
    m = nv + 2 * ne
    pairs: list[tuple[int, int]] = []
    for i, (v1, v2) in enumerate(edges):
        a, c = i, ne + nv + i
        for v in range(nv):
            b = ne + v
            if v == v1 or v == v2:
                pairs.append((b, c))
            else:
                pairs.append((a, b))
    levels = ["A"] * ne + ["B"] * nv + ["C"] * ne
    return PhiImage(Poset.from_pairs(m, pairs, levels), g, edges)


def reduce_kayles_to_poset(g: Graph) -> PhiImage:
    """The full graph-to-poset reduction: phi applied to psi."""
    return phi(psi(g))


def poset_to_setgame(p: Poset) -> SetGame:
    """One set per element: its upper cone.  Picking S_x mirrors picking x."""
    sets = tuple(frozenset(p.upper_cone(x)) for x in range(p.m))
    return SetGame(p.m, sets)


def format_phi_mapping(image: PhiImage) -> str:
    """Sidecar mapping file: which graph feature each poset element encodes."""
    lines = []
    for i, (u, v) in enumerate(image.edge_order):
        lines.append(f"A {u} {v} {i}")
    for v in range(image.source.n):
        lines.append(f"B {v} {image.b_of_vertex(v)}")
    for i, (u, v) in enumerate(image.edge_order):
        lines.append(f"C {u} {v} {image.num_edges + image.source.n + i}")
    return "\n".join(lines) + "\n"
