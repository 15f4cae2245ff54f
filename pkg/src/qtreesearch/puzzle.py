"""The 3x3 sliding-tile puzzle and its heuristic distributions.

Boards are row-major tuples of the nine values ``0..8`` with ``0`` as the
blank. Both heuristics count the blank by default, so misplaced tiles spans
``[0, 9]``; pass ``count_blank=False`` for the usual tiles-only variant,
which is the admissible one.
"""

from __future__ import annotations

import math
import random
from collections import deque
from typing import Callable, Iterator, Sequence

from .classical_search import SearchProblem
from .distributions import DEFAULT_BIN_WIDTH, EmpiricalDistribution, Kind, pmf_from_samples
from .tree_model import SearchTree

Board = tuple[int, ...]

SIDE = 3
GOAL: Board = (1, 2, 3, 4, 5, 6, 7, 8, 0)
REACHABLE_COUNT = 181440  # 9!/2

# blank moves as (name, row delta, col delta)
MOVES = (("up", -1, 0), ("down", 1, 0), ("left", 0, -1), ("right", 0, 1))


def _neighbours_table() -> tuple[tuple[tuple[str, int], ...], ...]:
    table = []
    for cell in range(SIDE * SIDE):
        r, c = divmod(cell, SIDE)
        options = []
        for name, dr, dc in MOVES:
            rr, cc = r + dr, c + dc
            if 0 <= rr < SIDE and 0 <= cc < SIDE:
                options.append((name, rr * SIDE + cc))
        table.append(tuple(options))
    return tuple(table)


_NEIGHBOURS = _neighbours_table()


def as_board(tiles: Sequence[int] | Sequence[Sequence[int]]) -> Board:
    flat = tuple(int(v) for row in tiles for v in (row if isinstance(row, (list, tuple)) else [row]))
    if sorted(flat) != list(range(SIDE * SIDE)):
        raise ValueError(f"not a permutation of 0..8: {flat}")
    return flat


def successors(board: Board) -> Iterator[tuple[str, Board]]:
    """Boards one blank move away, as (move name, board)."""
    blank = board.index(0)
    for name, target in _NEIGHBOURS[blank]:
        cells = list(board)
        cells[blank], cells[target] = cells[target], 0
        yield name, tuple(cells)


def apply_moves(board: Board, moves: Sequence[str]) -> Board:
    for move in moves:
        board = dict(successors(board))[move]
    return board


def h1_misplaced(board: Board, goal: Board = GOAL, count_blank: bool = True) -> int:
    return sum(1 for a, b in zip(board, goal) if a != b and (count_blank or a != 0))


def _goal_positions(goal: Board) -> list[tuple[int, int]]:
    pos = [(0, 0)] * (SIDE * SIDE)
    for cell, value in enumerate(goal):
        pos[value] = divmod(cell, SIDE)
    return pos


def h2_euclidean(board: Board, goal: Board = GOAL, count_blank: bool = True) -> float:
    target = _goal_positions(goal)
    total = 0.0
    for cell, value in enumerate(board):
        if value == 0 and not count_blank:
            continue
        r, c = divmod(cell, SIDE)
        gr, gc = target[value]
        total += math.hypot(r - gr, c - gc)
    return total


def inversion_parity(board: Board) -> int:
    tiles = [v for v in board if v != 0]
    inversions = sum(1 for i in range(len(tiles)) for j in range(i + 1, len(tiles)) if tiles[i] > tiles[j])
    return inversions % 2


def is_solvable(board: Board, goal: Board = GOAL) -> bool:
    # odd board width: blank moves never change tile inversion parity
    return inversion_parity(board) == inversion_parity(goal)


def enumerate_reachable(goal: Board = GOAL) -> Iterator[Board]:
    """Breadth-first enumeration of every board reachable from ``goal``."""
    seen = {goal}
    queue = deque([goal])
    while queue:
        board = queue.popleft()
        yield board
        for _, nxt in successors(board):
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)


def distances_from(goal: Board = GOAL) -> dict[Board, int]:
    """Exact move distance of every reachable board to ``goal``."""
    dist = {goal: 0}
    queue = deque([goal])
    while queue:
        board = queue.popleft()
        for _, nxt in successors(board):
            if nxt not in dist:
                dist[nxt] = dist[board] + 1
                queue.append(nxt)
    return dist


def heuristic_distribution(
    h: Callable[[Board, Board], float],
    goal: Board = GOAL,
    kind: Kind = "discrete",
    bin_width: float = DEFAULT_BIN_WIDTH,
    bins: int | None = None,
    boards: Iterator[Board] | None = None,
) -> EmpiricalDistribution:
    """Distribution of ``h(board, goal)`` over the boards reachable from ``goal``."""
    boards = enumerate_reachable(goal) if boards is None else boards
    return pmf_from_samples((h(b, goal) for b in boards), kind, bin_width, bins)


def scramble(moves: int, rng: random.Random, goal: Board = GOAL) -> Board:
    """Random walk of ``moves`` blank moves from ``goal`` without immediate undo."""
    board, previous = goal, None
    for _ in range(moves):
        options = [b for _, b in successors(board) if b != previous]
        previous, board = board, rng.choice(options)
    return board


def puzzle_problem(
    start: Board,
    goal: Board = GOAL,
    heuristic: Callable[[Board, Board], float] | None = None,
) -> SearchProblem:
    """Unit-cost search problem over blank moves."""
    h = (lambda b: heuristic(b, goal)) if heuristic is not None else (lambda b: 0.0)
    return SearchProblem(
        initial=start,
        successors=lambda b: [(name, nxt, 1.0) for name, nxt in successors(b)],
        is_goal=lambda b: b == goal,
        h=h,
    )


def move_tree(
    start: Board,
    depth: int,
    goal: Board = GOAL,
    heuristic: Callable[[Board, Board], float] = h1_misplaced,
) -> SearchTree:
    """Unfold every legal sequence of ``depth`` blank moves from ``start``.

    Actions are the four blank moves, so paths take 2 bits per level; moves
    that leave the board are undefined codes. Nodes equal to ``goal`` become
    goal nodes and every node carries ``heuristic(board, goal)`` as ``h``.
    """
    action_ids = {name: i for i, (name, _, _) in enumerate(MOVES)}
    boards, levels, children = [start], [0], [{}]
    frontier = [0]
    while frontier:
        node = frontier.pop()
        if levels[node] == depth:
            continue
        for name, nxt in successors(boards[node]):
            child = len(boards)
            boards.append(nxt)
            levels.append(levels[node] + 1)
            children.append({})
            children[node][action_ids[name]] = child
            frontier.append(child)
    names = [f"n{i}" for i in range(len(boards))]
    h = {i: float(heuristic(b, goal)) for i, b in enumerate(boards)}
    goals = {i for i, b in enumerate(boards) if b == goal}
    return SearchTree(
        action_names=tuple(name for name, _, _ in MOVES),
        names=tuple(names),
        children=tuple(children),
        goals=frozenset(goals),
        heuristic=h,
    )
