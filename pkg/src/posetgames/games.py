"""Impartial-game rules for Node Kayles, poset games, and the set game.

All three share the same shape: a fixed universe of element/vertex indices,
a position given as a bitmask of what remains, ``moves(pos)`` listing legal
move indices in ascending order, and ``apply(pos, move)`` producing the next
position.  Every apply strictly shrinks the position, so playouts terminate.
Normal play: the player who cannot move loses.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import FormatError, Graph, closed_neighborhood
from .posets import Poset, mask_to_sorted


class KaylesGame:
    """Node Kayles: a move removes a chosen vertex and its closed neighborhood."""

    def __init__(self, graph: Graph):
        self.graph = graph
        self.size = graph.n
        self._nbhd = []
        for v in range(graph.n):
            mask = 0
            for u in closed_neighborhood(graph, v):
                mask |= 1 << u
            self._nbhd.append(mask)

    def initial(self) -> int:
        return (1 << self.size) - 1

    def moves(self, pos: int) -> list[int]:
        return mask_to_sorted(pos)

    def child(self, pos: int, v: int) -> int:
        return pos & ~self._nbhd[v]

    def apply(self, pos: int, v: int) -> int:
        if not pos >> v & 1:
            raise ValueError(f"vertex {v} is not present")
        return self.child(pos, v)

    def describe_move(self, v: int) -> str:
        return f"vertex {v}"


class PosetGame:
    """Poset game: a move removes a chosen element and everything above it."""

    def __init__(self, poset: Poset):
        self.poset = poset
        self.size = poset.m

    def initial(self) -> int:
        return (1 << self.size) - 1

    def moves(self, pos: int) -> list[int]:
        return mask_to_sorted(pos)

    def child(self, pos: int, x: int) -> int:
        return pos & ~self.poset.up[x]

    def apply(self, pos: int, x: int) -> int:
        return self.poset.remove_cone(pos, x)

    def describe_move(self, x: int) -> str:
        return f"element {x}"


@dataclass(frozen=True)
class SetGame:
    """A collection of subsets S_1..S_k over ground elements 0..universe-1."""

    universe: int
    sets: tuple[frozenset[int], ...]

    def __post_init__(self):
        for i, s in enumerate(self.sets):
            for e in s:
                if not 0 <= e < self.universe:
                    raise ValueError(f"set {i} has element {e} outside universe {self.universe}")

    @property
    def k(self) -> int:
        return len(self.sets)


class SetGameRules:
    """Set game: picking a non-empty set erases its elements from every set.

    The state is just the mask of surviving ground elements; an element
    survives exactly when no chosen set contained it, so each set's remaining
    content is derivable as ``set_mask & state``.
    """

    def __init__(self, game: SetGame):
        self.game = game
        self.size = game.universe
        self._set_masks = []
        for s in game.sets:
            mask = 0
            for e in s:
                mask |= 1 << e
            self._set_masks.append(mask)

    def initial(self) -> int:
        return (1 << self.size) - 1

    def remaining(self, pos: int, i: int) -> int:
        return self._set_masks[i] & pos

    def moves(self, pos: int) -> list[int]:
        return [i for i in range(self.game.k) if self._set_masks[i] & pos]

    def child(self, pos: int, i: int) -> int:
        return pos & ~self._set_masks[i]

    def apply(self, pos: int, i: int) -> int:
        if not self._set_masks[i] & pos:
            raise ValueError(f"set {i} is already empty")
        return self.child(pos, i)

    def describe_move(self, i: int) -> str:
        return f"set {i}"


def parse_setgame(text: str) -> SetGame:
    """Parse the set-game format: "k u" then one line of element ids per set."""
    header = None
    rows: list[frozenset[int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line.startswith("#"):
            continue
        if header is None:
            if not line:
                continue
            parts = line.split()
            if len(parts) != 2:
                raise FormatError(f"expected 'k u' header, got {line!r}", lineno)
            try:
                header = (int(parts[0]), int(parts[1]))
            except ValueError:
                raise FormatError(f"non-integer header in {line!r}", lineno)
            if header[0] < 0 or header[1] < 0:
                raise FormatError("set count and universe must be non-negative", lineno)
            continue
        if len(rows) >= header[0]:
            if line:
                raise FormatError(f"more than {header[0]} set lines", lineno)
            continue
        try:
            elems = frozenset(int(tok) for tok in line.split())
        except ValueError:
            raise FormatError(f"non-integer element in {line!r}", lineno)
        for e in elems:
            if not 0 <= e < header[1]:
                raise FormatError(f"element {e} outside universe {header[1]}", lineno)
        rows.append(elems)
    if header is None:
        raise FormatError("empty set-game file")
    if len(rows) != header[0]:
        raise FormatError(f"expected {header[0]} set lines, found {len(rows)}")
    return SetGame(header[1], tuple(rows))


def format_setgame(s: SetGame) -> str:
    lines = [f"{s.k} {s.universe}"]
    for members in s.sets:
        lines.append(" ".join(str(e) for e in sorted(members)))
    return "\n".join(lines) + "\n"
