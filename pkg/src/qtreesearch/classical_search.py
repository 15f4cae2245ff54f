"""Classical tree-search baselines with node-expansion accounting.

Every strategy counts one expansion per call of the successor function and
one generation per child produced (plus the root). Searches run on the tree
unfolding of the problem unless ``closed_set=True``, which drops states
that were already expanded (needed for state graphs with transpositions).

Goal tests happen when a node is generated for breadth-first search and
when a node is entered for the depth-first family; best-first strategies
test on removal from the frontier so A* stays optimal.
"""

from __future__ import annotations

import heapq
import itertools
import math
from collections import deque
from dataclasses import dataclass
from typing import Any, Callable, Hashable, Iterable

from .tree_model import SearchTree

State = Hashable
Successor = tuple[Any, State, float]


@dataclass
class SearchProblem:
    initial: State
    successors: Callable[[State], Iterable[Successor]]
    is_goal: Callable[[State], bool]
    h: Callable[[State], float] = lambda _: 0.0


@dataclass
class SearchResult:
    path: tuple | None
    nodes_expanded: int = 0
    nodes_generated: int = 0
    max_frontier: int = 0
    cost: float = math.inf
    terminal: State | None = None

    @property
    def found(self) -> bool:
        return self.path is not None


@dataclass
class _Counter:
    expanded: int = 0
    generated: int = 1
    max_frontier: int = 0

    def expand(self, problem: SearchProblem, state: State) -> list[Successor]:
        self.expanded += 1
        children = list(problem.successors(state))
        self.generated += len(children)
        return children

    def result(self, path=None, cost=math.inf, terminal=None) -> SearchResult:
        return SearchResult(path, self.expanded, self.generated, self.max_frontier, cost, terminal)


def bfs(problem: SearchProblem, closed_set: bool = False) -> SearchResult:
    count = _Counter(max_frontier=1)
    if problem.is_goal(problem.initial):
        return count.result((), 0.0, problem.initial)
    frontier = deque([(problem.initial, (), 0.0)])
    reached = {problem.initial}
    while frontier:
        state, path, cost = frontier.popleft()
        for action, child, step in count.expand(problem, state):
            if closed_set:
                if child in reached:
                    continue
                reached.add(child)
            if problem.is_goal(child):
                return count.result(path + (action,), cost + step, child)
            frontier.append((child, path + (action,), cost + step))
        count.max_frontier = max(count.max_frontier, len(frontier))
    return count.result()


def _depth_limited(problem: SearchProblem, limit: int, count: _Counter, closed_set: bool) -> tuple[SearchResult | None, bool]:
    """Returns (result or None, whether any node sat at the limit)."""
    # explicit stack of (state, path, cost, pending children)
    stack = [(problem.initial, (), 0.0, iter(()))]
    on_path = {problem.initial}
    cutoff = False
    first = True
    while stack:
        state, path, cost, pending = stack[-1]
        if first:
            first = False
            if problem.is_goal(state):
                return count.result(path, cost, state), cutoff
            if len(path) == limit:
                cutoff = True
                stack.pop()
                on_path.discard(state)
                continue
            pending = iter(count.expand(problem, state))
            stack[-1] = (state, path, cost, pending)
            count.max_frontier = max(count.max_frontier, len(stack))
        nxt = next(pending, None)
        if nxt is None:
            stack.pop()
            on_path.discard(state)
            continue
        action, child, step = nxt
        if closed_set and child in on_path:
            continue
        stack.append((child, path + (action,), cost + step, iter(())))
        on_path.add(child)
        first = True
    return None, cutoff


def dfs_depth_limited(problem: SearchProblem, limit: int, closed_set: bool = False) -> SearchResult:
    """Depth-first search that never descends below ``limit`` actions.

    ``closed_set`` here only prunes cycles along the current path.
    """
    count = _Counter()
    found, _ = _depth_limited(problem, limit, count, closed_set)
    return found if found is not None else count.result()


def iterative_deepening(problem: SearchProblem, max_depth: int = 64, closed_set: bool = False) -> SearchResult:
    count = _Counter()
    for limit in range(max_depth + 1):
        found, cutoff = _depth_limited(problem, limit, count, closed_set)
        if found is not None:
            return found
        if not cutoff:
            break
    return count.result()


def _best_first(problem: SearchProblem, priority: Callable[[float, State], float], closed_set: bool) -> SearchResult:
    count = _Counter(max_frontier=1)
    tie = itertools.count()
    start = problem.initial
    frontier = [(priority(0.0, start), next(tie), start, (), 0.0)]
    best_g = {start: 0.0}
    expanded = set()
    while frontier:
        _, _, state, path, cost = heapq.heappop(frontier)
        if closed_set:
            if state in expanded:
                continue
            expanded.add(state)
        if problem.is_goal(state):
            return count.result(path, cost, state)
        for action, child, step in count.expand(problem, state):
            g = cost + step
            if closed_set:
                if child in expanded or g >= best_g.get(child, math.inf):
                    continue
                best_g[child] = g
            heapq.heappush(frontier, (priority(g, child), next(tie), child, path + (action,), g))
        count.max_frontier = max(count.max_frontier, len(frontier))
    return count.result()


def greedy(problem: SearchProblem, closed_set: bool = False) -> SearchResult:
    """Best-first search on ``h`` alone."""
    return _best_first(problem, lambda g, s: problem.h(s), closed_set)


def a_star(problem: SearchProblem, closed_set: bool = False) -> SearchResult:
    """Best-first search on ``f = g + h``."""
    return _best_first(problem, lambda g, s: g + problem.h(s), closed_set)


def tree_problem(tree: SearchTree, h: Callable[[int], float] | None = None) -> SearchProblem:
    """Search problem over an explicit tree; actions are reported by name, cost 1 each."""
    return SearchProblem(
        initial=tree.root,
        successors=lambda node: [
            (tree.action_names[a], child, 1.0) for a, child in sorted(tree.children[node].items())
        ],
        is_goal=lambda node: node in tree.goals,
        h=h if h is not None else tree.h,
    )


def uniform_tree_problem(b: int, depth: int, goal_path: tuple[int, ...]) -> SearchProblem:
    """Implicit complete ``b``-ary tree of the given depth; states are action tuples."""
    return SearchProblem(
        initial=(),
        successors=lambda s: [(a, s + (a,), 1.0) for a in range(b)] if len(s) < depth else [],
        is_goal=lambda s: s == goal_path,
    )


def greedy_counterexample() -> SearchProblem:
    """Small graph where greedy best-first returns a 4-step path but 2 steps suffice.

    ``S -> X -> X1 -> X2 -> G`` with h = 1 along the detour, and
    ``S -> Y -> G`` with h(Y) = 2.
    """
    edges = {
        "S": [("to_X", "X"), ("to_Y", "Y")],
        "X": [("to_X1", "X1")],
        "X1": [("to_X2", "X2")],
        "X2": [("to_G", "G")],
        "Y": [("to_G", "G")],
        "G": [],
    }
    h = {"S": 2, "X": 1, "X1": 1, "X2": 1, "Y": 2, "G": 0}
    return SearchProblem(
        initial="S",
        successors=lambda s: [(a, t, 1.0) for a, t in edges[s]],
        is_goal=lambda s: s == "G",
        h=lambda s: h[s],
    )
