"""Memoized exhaustive solver: win/loss search and Grundy numbers.

The win/loss search stops scanning children as soon as one losing child is
found, and tries the moves that remove the most elements first; the cutoff
and the ordering cannot change the (exact) result.  Grundy computation
enumerates every child, since mex needs them all.  Recursion depth is
bounded by the universe size, so memory grows only with the depth and the
transposition table.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field


class GameValue(enum.Enum):
    WIN = "win"  # the player to move wins
    LOSS = "loss"


class BudgetExceeded(RuntimeError):
    """Raised when a solve visits more states than its budget allows."""

    def __init__(self, states: int):
        self.states = states
        super().__init__(f"search budget exhausted after {states} visited states")


def mex(values) -> int:
    """Smallest non-negative integer not in the collection."""
    present = set(values)
    g = 0
    while g in present:
        g += 1
    return g


@dataclass
class TranspositionTable:
    """Position-mask keyed memo for one (rules, universe) context."""

    values: dict = field(default_factory=dict)
    hits: int = 0
    misses: int = 0

    def __len__(self):
        return len(self.values)


@dataclass
class SearchStats:
    states: int = 0
    budget: int | None = None

    def spend(self):
        self.states += 1
        if self.budget is not None and self.states > self.budget:
            raise BudgetExceeded(self.states)


def solve_winner(
    game,
    pos: int | None = None,
    table: TranspositionTable | None = None,
    budget: int | None = None,
    stats: SearchStats | None = None,
) -> GameValue:
    """Decide whether the player to move wins from ``pos`` (default: initial)."""
    if pos is None:
        pos = game.initial()
    if table is None:
        table = TranspositionTable()
    if stats is None:
        stats = SearchStats(budget=budget)
    elif budget is not None:
        stats.budget = budget
    return GameValue.WIN if _win(game, pos, table, stats) else GameValue.LOSS


def _win(game, pos: int, table: TranspositionTable, stats: SearchStats) -> bool:
    cached = table.values.get(pos)
    if cached is not None:
        table.hits += 1
        return cached
    table.misses += 1
    stats.spend()
    children = [game.child(pos, mv) for mv in game.moves(pos)]
    children.sort(key=lambda c: c.bit_count())
    result = False
    for child in children:
        if not _win(game, child, table, stats):
            result = True
            break
    table.values[pos] = result
    return result


def grundy(
    game,
    pos: int | None = None,
    table: TranspositionTable | None = None,
    budget: int | None = None,
    stats: SearchStats | None = None,
) -> int:
    """Grundy number of ``pos``: mex over all children, fully enumerated."""
    if pos is None:
        pos = game.initial()
    if table is None:
        table = TranspositionTable()
    if stats is None:
        stats = SearchStats(budget=budget)
    elif budget is not None:
        stats.budget = budget
    return _grundy(game, pos, table, stats)


def _grundy(game, pos: int, table: TranspositionTable, stats: SearchStats) -> int:
    cached = table.values.get(pos)
    if cached is not None:
        table.hits += 1
        return cached
    table.misses += 1
    stats.spend()
    seen = {_grundy(game, game.child(pos, mv), table, stats) for mv in game.moves(pos)}
    value = mex(seen)
    table.values[pos] = value
    return value


def best_move(
    game,
    pos: int | None = None,
    table: TranspositionTable | None = None,
    budget: int | None = None,
) -> int | None:
    """Lowest-index move to a losing child, or None if the mover is lost."""
    if pos is None:
        pos = game.initial()
    moves = game.moves(pos)
    if not moves:
        raise ValueError("position is terminal")
    if table is None:
        table = TranspositionTable()
    stats = SearchStats(budget=budget)
    for mv in moves:
        if not _win(game, game.child(pos, mv), table, stats):
            return mv
    return None
