"""Finite posets stored as the full <= relation, with bitmask positions.

The canonical in-memory form is the reflexive-transitive closure: ``up[x]``
is the bitmask of every y with x <= y (the upper cone of x).  Positions in
the poset game are plain ints used as bitmasks over element indices, which
keeps arbitrary element counts cheap (Python ints grow as needed).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from .graphs import FormatError


@dataclass(frozen=True)
class Violation:
    """First order-axiom violation found, with witnessing indices."""

    axiom: str  # "reflexive" | "antisymmetric" | "transitive"
    witnesses: tuple[int, ...]

    def __str__(self):
        return f"{self.axiom} violated at {self.witnesses}"


def validate_relation(m: int, rows: Sequence[int]) -> Violation | None:
    """Check a raw m x m relation (row bitmasks) against the order axioms."""
    for x in range(m):
        if not rows[x] >> x & 1:
            return Violation("reflexive", (x,))
    for x in range(m):
        for y in range(m):
            if x != y and rows[x] >> y & 1 and rows[y] >> x & 1:
                return Violation("antisymmetric", (x, y))
    for x in range(m):
        reach = 0
        ys = rows[x]
        y = 0
        while ys:
            if ys & 1:
                reach |= rows[y]
            ys >>= 1
            y += 1
        extra = reach & ~rows[x]
        if extra:
            z = (extra & -extra).bit_length() - 1
            # recover some y with x<=y and y<=z for the witness
            for y in range(m):
                if rows[x] >> y & 1 and rows[y] >> z & 1:
                    return Violation("transitive", (x, y, z))
    return None


class Poset:
    """Immutable finite poset on elements 0..m-1."""

    __slots__ = ("m", "up", "down", "levels")

    def __init__(self, m: int, up: Sequence[int], levels: Sequence[str | None] | None = None):
        bad = validate_relation(m, up)
        if bad is not None:
            raise ValueError(f"not a partial order: {bad}")
        self.m = m
        self.up = tuple(up)
        down = [0] * m
        for x in range(m):
            for y in range(m):
                if up[y] >> x & 1:
                    down[x] |= 1 << y
        self.down = tuple(down)
        self.levels = tuple(levels) if levels is not None else None

    @classmethod
    def from_pairs(
        cls,
        m: int,
        pairs: Iterable[tuple[int, int]],
        levels: Sequence[str | None] | None = None,
    ) -> "Poset":
        """Close an arbitrary sub-relation reflexively and transitively.

        Raises ValueError if the closure has a cycle (antisymmetry failure).
        """
        up = [1 << x for x in range(m)]
        for x, y in pairs:
            if not (0 <= x < m and 0 <= y < m):
                raise ValueError(f"pair ({x}, {y}) out of range for m={m}")
            up[x] |= 1 << y
        for k in range(m):
            upk = up[k]
            bit = 1 << k
            for x in range(m):
                if up[x] & bit:
                    up[x] |= upk
        for x in range(m):
            for y in range(x + 1, m):
                if up[x] >> y & 1 and up[y] >> x & 1:
                    raise ValueError(f"cycle between elements {x} and {y}")
        return cls(m, up, levels)

    def leq(self, x: int, y: int) -> bool:
        return bool(self.up[x] >> y & 1)

    @property
    def full_position(self) -> int:
        return (1 << self.m) - 1

    def upper_cone(self, x: int) -> set[int]:
        """{y : x <= y}; contains x by reflexivity."""
        if not 0 <= x < self.m:
            raise ValueError(f"element {x} out of range")
        return _mask_to_set(self.up[x])

    def remove_cone(self, pos: int, x: int) -> int:
        """Remove x and everything above it from the position."""
        if not pos >> x & 1:
            raise ValueError(f"element {x} is not present in the position")
        return pos & ~self.up[x]

    def is_down_set(self, pos: int) -> bool:
        rest = pos
        while rest:
            x = (rest & -rest).bit_length() - 1
            if self.down[x] & ~pos:
                return False
            rest &= rest - 1
        return True

    def cover_pairs(self) -> list[tuple[int, int]]:
        """Transitive reduction: (x, y) with x < y and nothing strictly between."""
        covers = []
        for x in range(self.m):
            strict = self.up[x] & ~(1 << x)
            rest = strict
            while rest:
                y = (rest & -rest).bit_length() - 1
                between = strict & (self.down[y] & ~(1 << y))
                if between == 0:
                    covers.append((x, y))
                rest &= rest - 1
        return covers

    def disjoint_sum(self, other: "Poset") -> "Poset":
        """Order-disjoint union; other's elements are shifted up by self.m."""
        up = list(self.up) + [row << self.m for row in other.up]
        levels = None
        if self.levels is not None or other.levels is not None:
            left = self.levels or (None,) * self.m
            right = other.levels or (None,) * other.m
            levels = left + right
        return Poset(self.m + other.m, up, levels)

    def __eq__(self, other):
        return (
            isinstance(other, Poset)
            and self.m == other.m
            and self.up == other.up
            and self.levels == other.levels
        )

    def __hash__(self):
        return hash((self.m, self.up, self.levels))

    def __repr__(self):
        return f"Poset(m={self.m})"


def _mask_to_set(mask: int) -> set[int]:
    out = set()
    while mask:
        out.add((mask & -mask).bit_length() - 1)
        mask &= mask - 1
    return out


def mask_to_sorted(mask: int) -> list[int]:
    out = []
    while mask:
        out.append((mask & -mask).bit_length() - 1)
        mask &= mask - 1
    return out


def antichain(m: int) -> Poset:
    return Poset.from_pairs(m, ())


def chain(m: int) -> Poset:
    return Poset.from_pairs(m, ((i, i + 1) for i in range(m - 1)))


def random_poset(m: int, density: float, seed: int) -> Poset:
    """Random poset: each x < y pair related with the given probability,
    then closed.  Deterministic for a fixed (m, density, seed)."""
    if not 0.0 <= density <= 1.0:
        raise ValueError("density must be in [0, 1]")
    rng = random.Random(seed)
    pairs = [
        (x, y)
        for x in range(m)
        for y in range(x + 1, m)
        if rng.random() < density
    ]
    return Poset.from_pairs(m, pairs)


def to_dot(p: Poset) -> str:
    """Hasse diagram as DOT: cover edges only, oriented lower -> upper."""
    lines = ["digraph hasse {", "  rankdir=BT;"]
    for x in range(p.m):
        attrs = ""
        if p.levels is not None and p.levels[x] is not None:
            attrs = f' [level="{p.levels[x]}"]'
        lines.append(f"  {x}{attrs};")
    for x, y in sorted(p.cover_pairs()):
        lines.append(f"  {x} -> {y};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def parse_poset(text: str) -> Poset:
    """Parse the poset text format: first line m, then "x y" meaning x <= y.

    The listed pairs may be any sub-relation; the loader takes the
    reflexive-transitive closure and rejects cycles.
    """
    m = None
    pairs: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if m is None:
            try:
                m = int(line)
            except ValueError:
                raise FormatError(f"expected element count, got {line!r}", lineno)
            if m < 0:
                raise FormatError("element count must be non-negative", lineno)
            continue
        parts = line.split()
        if len(parts) != 2:
            raise FormatError(f"expected 'x y', got {line!r}", lineno)
        try:
            x, y = int(parts[0]), int(parts[1])
        except ValueError:
            raise FormatError(f"non-integer element in {line!r}", lineno)
        if x == y:
            raise FormatError(f"pair ({x}, {y}) must relate distinct elements", lineno)
        if not (0 <= x < m and 0 <= y < m):
            raise FormatError(f"pair ({x}, {y}) out of range for m={m}", lineno)
        pairs.append((x, y))
    if m is None:
        raise FormatError("empty poset file")
    try:
        return Poset.from_pairs(m, pairs)
    except ValueError as exc:
        raise FormatError(str(exc))


def format_poset(p: Poset) -> str:
    """Serialize the strict part of <=; re-parsing restores the relation."""
    lines = [str(p.m)]
    for x in range(p.m):
        for y in mask_to_sorted(p.up[x] & ~(1 << x)):
            lines.append(f"{x} {y}")
    return "\n".join(lines) + "\n"
