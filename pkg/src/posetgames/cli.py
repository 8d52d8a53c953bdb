"""Command-line entry point.

Subcommands: winner, grundy, reduce, verify, play, export-dot.  Verdicts go
to stdout, solver stats to stderr.  Exit codes for winner: 0 first player,
1 second player, 2 error or inconclusive.
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from .games import (
    KaylesGame,
    PosetGame,
    SetGameRules,
    format_setgame,
    parse_setgame,
)
from .graphs import FormatError, parse_graph
from .posets import format_poset, parse_poset, to_dot
from .reductions import format_phi_mapping, poset_to_setgame, reduce_kayles_to_poset
from .solver import (
    BudgetExceeded,
    GameValue,
    SearchStats,
    TranspositionTable,
    best_move,
    grundy,
    solve_winner,
)
from .verify import DEFAULT_BUDGET, DEFAULT_SEED, SUITES, SuiteConfig, run_suite


def _load_game(path: str, game: str):
    text = Path(path).read_text()
    if game == "kayles":
        return KaylesGame(parse_graph(text))
    if game == "poset":
        return PosetGame(parse_poset(text))
    if game == "setgame":
        return SetGameRules(parse_setgame(text))
    raise ValueError(f"unknown game {game!r}")


def _write(path: str | None, text: str):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def cmd_winner(args) -> int:
    rules = _load_game(args.input, args.game)
    stats = SearchStats(budget=args.budget)
    t0 = time.perf_counter()
    table = TranspositionTable()
    try:
        value = solve_winner(rules, table=table, stats=stats)
    except BudgetExceeded:
        print("undecided: budget exhausted", file=sys.stderr)
        return 2
    _stats_line(stats, table, t0)
    print("first" if value is GameValue.WIN else "second")
    return 0 if value is GameValue.WIN else 1


def cmd_grundy(args) -> int:
    rules = _load_game(args.input, args.game)
    stats = SearchStats(budget=args.budget)
    t0 = time.perf_counter()
    table = TranspositionTable()
    try:
        value = grundy(rules, table=table, stats=stats)
    except BudgetExceeded:
        print("undecided: budget exhausted", file=sys.stderr)
        return 2
    _stats_line(stats, table, t0)
    print(value)
    return 0


def _stats_line(stats: SearchStats, table: TranspositionTable, t0: float):
    millis = (time.perf_counter() - t0) * 1000
    print(
        f"states={stats.states} hits={table.hits} millis={millis:.1f}",
        file=sys.stderr,
    )


def cmd_reduce(args) -> int:
    text = Path(args.input).read_text()
    if args.src == "kayles" and args.dst == "poset":
        image = reduce_kayles_to_poset(parse_graph(text))
        _write(args.out, format_poset(image.poset))
        if args.map_out:
            _write(args.map_out, format_phi_mapping(image))
        if args.dot:
            _write(args.dot, to_dot(image.poset))
        return 0
    if args.src == "poset" and args.dst == "setgame":
        poset = parse_poset(text)
        _write(args.out, format_setgame(poset_to_setgame(poset)))
        if args.dot:
            _write(args.dot, to_dot(poset))
        return 0
    print(
        f"unsupported reduction {args.src} -> {args.dst} "
        "(supported: kayles -> poset, poset -> setgame)",
        file=sys.stderr,
    )
    return 2


def cmd_verify(args) -> int:
    config = SuiteConfig(
        suite=args.suite,
        max_n=args.max_n,
        seed=args.seed,
        budget=args.budget,
        jobs=args.jobs,
    )
    report = run_suite(config)
    sys.stdout.write(report.to_text())
    if args.out:
        _write(args.out, report.to_records())
    return 0 if report.passed else 1


def cmd_export_dot(args) -> int:
    poset = parse_poset(Path(args.input).read_text())
    _write(args.out, to_dot(poset))
    return 0


def cmd_play(args) -> int:
    rules = _load_game(args.input, args.game)
    pos = rules.initial()
    table = TranspositionTable()
    human_to_move = not args.engine_first
    print(f"playing {args.game}; moves are indices, last player to move wins")
    while True:
        moves = rules.moves(pos)
        print(f"position: {sorted(moves)} available")
        if not moves:
            print("no moves left:", "engine wins" if human_to_move else "you win")
            return 0
        if human_to_move:
            try:
                line = input("your move> ")
            except EOFError:
                print()
                return 0
            try:
                mv = int(line.strip())
            except ValueError:
                print("enter a move index")
                continue
            if mv not in moves:
                print(f"illegal move {mv}")
                continue
        else:
            mv = best_move(rules, pos, table=table)
            if mv is None:
                mv = moves[0]  # lost position: any move
            print(f"engine plays {rules.describe_move(mv)}")
        pos = rules.apply(pos, mv)
        human_to_move = not human_to_move


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="posetgames",
        description="Solve, reduce, and verify small impartial games.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_solver_cmd(name, fn, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("input", help="instance file")
        p.add_argument("--game", choices=("kayles", "poset", "setgame"), required=True)
        p.add_argument("--budget", type=int, default=None, help="max states to visit")
        p.set_defaults(fn=fn)
        return p

    add_solver_cmd("winner", cmd_winner, "print which player wins (first/second)")
    add_solver_cmd("grundy", cmd_grundy, "print the Grundy number of the full position")

    p = sub.add_parser("reduce", help="rewrite an instance into another game")
    p.add_argument("input")
    p.add_argument("--from", dest="src", choices=("kayles", "poset"), required=True)
    p.add_argument("--to", dest="dst", choices=("poset", "setgame"), required=True)
    p.add_argument("--out", default=None, help="output file (default stdout)")
    p.add_argument("--map-out", default=None, help="element mapping sidecar (kayles->poset)")
    p.add_argument("--dot", default=None, help="also write a Hasse diagram in DOT")
    p.set_defaults(fn=cmd_reduce)

    p = sub.add_parser("verify", help="run a brute-force verification suite")
    p.add_argument("--suite", choices=SUITES, required=True)
    p.add_argument("--max-n", type=int, default=None, help="largest source-graph size")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--jobs", type=int, default=1, help="parallel workers (verify only)")
    p.add_argument("--out", default=None, help="write per-instance JSON records here")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("play", help="interactive play against the solver")
    p.add_argument("input")
    p.add_argument("--game", choices=("kayles", "poset", "setgame"), required=True)
    p.add_argument("--engine-first", action="store_true")
    p.set_defaults(fn=cmd_play)

    p = sub.add_parser("export-dot", help="Hasse diagram of a poset file as DOT")
    p.add_argument("input")
    p.add_argument("--out", default=None)
    p.set_defaults(fn=cmd_export_dot)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
