"""Explicit search trees and the fixed-width binary path codec.

A path of ``d`` actions is stored as the concatenation of ``d`` codes of
``n = ceil(log2 |a|)`` bits each, the first action in the most significant
bits. With ``|a| < 2**n`` some codes name no action at all; such strings
are *inadmissible* and are filtered by :func:`is_admissible`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Iterator, Mapping, Sequence

from .errors import CapacityError, CodecError, TreeSpecError
from .statevector import DEFAULT_MAX_QUBITS

ActionPath = tuple[int, ...]

BUNDLED_TREES = ("fig1", "fig2", "grid_demo")


@dataclass(frozen=True)
class SearchTree:
    """Rooted tree with integer node ids ``0..len(names)-1``.

    ``children[node]`` maps action id to child node id. ``heuristic`` holds
    optional per-node ``h`` values (missing entries read as 0).
    """

    action_names: tuple[str, ...]
    names: tuple[str, ...]
    children: tuple[Mapping[int, int], ...]
    root: int = 0
    goals: frozenset[int] = frozenset()
    heuristic: Mapping[int, float] = field(default_factory=dict)

    def __post_init__(self):
        if len(self.children) != len(self.names):
            raise TreeSpecError("children table and name table differ in length")
        n_nodes = len(self.names)
        if not 0 <= self.root < n_nodes:
            raise TreeSpecError(f"root {self.root} is not a node")
        for node, edges in enumerate(self.children):
            for action, child in edges.items():
                if not 0 <= action < len(self.action_names):
                    raise TreeSpecError(f"node {self.names[node]!r} uses undefined action id {action}")
                if not 0 <= child < n_nodes:
                    raise TreeSpecError(f"node {self.names[node]!r} points at missing node {child}")
        for goal in self.goals:
            if not 0 <= goal < n_nodes:
                raise TreeSpecError(f"goal {goal} is not a node")
        self._check_acyclic()

    def _check_acyclic(self) -> None:
        # iterative three-colour DFS; trees from JSON can be deep
        state = [0] * len(self.names)
        for start in range(len(self.names)):
            if state[start]:
                continue
            stack = [(start, iter(self.children[start].values()))]
            state[start] = 1
            while stack:
                node, it = stack[-1]
                child = next(it, None)
                if child is None:
                    state[node] = 2
                    stack.pop()
                elif state[child] == 1:
                    raise TreeSpecError(f"cycle through node {self.names[child]!r}")
                elif state[child] == 0:
                    state[child] = 1
                    stack.append((child, iter(self.children[child].values())))

    def node_id(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise TreeSpecError(f"unknown node {name!r}") from None

    def with_goals(self, names: Sequence[str]) -> SearchTree:
        return SearchTree(
            self.action_names,
            self.names,
            self.children,
            self.root,
            frozenset(self.node_id(n) for n in names),
            self.heuristic,
        )

    def h(self, node: int) -> float:
        return float(self.heuristic.get(node, 0.0))

    def height(self) -> int:
        best = 0
        stack = [(self.root, 0)]
        while stack:
            node, depth = stack.pop()
            best = max(best, depth)
            stack.extend((c, depth + 1) for c in self.children[node].values())
        return best

    def internal_nodes(self) -> list[int]:
        return [i for i, edges in enumerate(self.children) if edges]


@dataclass(frozen=True)
class BranchingStats:
    b_max: int
    b_max_structural: int
    b_avg: Fraction


@dataclass(frozen=True)
class PathCodec:
    alphabet_size: int
    depth: int
    max_qubits: int = DEFAULT_MAX_QUBITS

    def __post_init__(self):
        if self.alphabet_size < 1:
            raise CodecError("action alphabet must be non-empty")
        if self.depth < 1:
            raise CodecError("depth must be at least 1")
        if self.width > self.max_qubits:
            raise CapacityError(
                f"{self.depth} actions x {self.bits_per_action} bits = {self.width} qubits "
                f"exceeds capacity {self.max_qubits}"
            )

    @classmethod
    def for_tree(cls, tree: SearchTree, depth: int | None = None, max_qubits: int = DEFAULT_MAX_QUBITS) -> PathCodec:
        return cls(len(tree.action_names), tree.height() if depth is None else depth, max_qubits)

    @property
    def bits_per_action(self) -> int:
        return max(1, (self.alphabet_size - 1).bit_length())

    @property
    def width(self) -> int:
        return self.bits_per_action * self.depth

    @property
    def size(self) -> int:
        return 1 << self.width

    def format_bits(self, index: int) -> list[str]:
        """Per-level bit strings of ``index``, most significant level first."""
        n = self.bits_per_action
        return [format(a, f"0{n}b") for a in decode(index, self)]


def encode(path: Sequence[int], codec: PathCodec) -> int:
    if len(path) != codec.depth:
        raise CodecError(f"path has {len(path)} actions, codec expects {codec.depth}")
    n = codec.bits_per_action
    index = 0
    for action in path:
        if not 0 <= action < (1 << n):
            raise CodecError(f"action id {action} does not fit in {n} bits")
        index = (index << n) | action
    return index


def decode(index: int, codec: PathCodec) -> ActionPath:
    if not 0 <= index < codec.size:
        raise CodecError(f"index {index} outside code space [0, {codec.size})")
    n = codec.bits_per_action
    low = (1 << n) - 1
    return tuple((index >> (n * (codec.depth - 1 - level))) & low for level in range(codec.depth))


def walk(tree: SearchTree, path: Sequence[int]) -> int | None:
    """Terminal node reached by following ``path`` from the root, or None."""
    node = tree.root
    for action in path:
        node = tree.children[node].get(action)
        if node is None:
            return None
    return node


def is_admissible(index: int, tree: SearchTree, codec: PathCodec) -> tuple[bool, int | None]:
    terminal = walk(tree, decode(index, codec))
    return terminal is not None, terminal


def admissible_paths(tree: SearchTree, depth: int) -> Iterator[tuple[ActionPath, int]]:
    """All (path, terminal) pairs of exactly ``depth`` actions, in code order."""
    stack: list[tuple[int, ActionPath]] = [(tree.root, ())]
    while stack:
        node, prefix = stack.pop()
        if len(prefix) == depth:
            yield prefix, node
            continue
        for action in sorted(tree.children[node], reverse=True):
            stack.append((tree.children[node][action], prefix + (action,)))


def admissible_count(tree: SearchTree, codec: PathCodec) -> int:
    return sum(is_admissible(x, tree, codec)[0] for x in range(codec.size))


def branching_stats(tree: SearchTree) -> BranchingStats:
    counts = [len(tree.children[i]) for i in tree.internal_nodes()]
    if not counts:
        return BranchingStats(len(tree.action_names), 0, Fraction(0))
    return BranchingStats(len(tree.action_names), max(counts), Fraction(sum(counts), len(counts)))


def tree_from_dict(spec: Mapping) -> SearchTree:
    """Build a tree from the JSON document layout.

    ``{"actions": [...], "root": name, "goals": [...], "nodes": {name: {action: child}},
    "h": {name: value}}``. Nodes that only appear as children are leaves.
    """
    try:
        actions = list(spec["actions"])
        root_name = spec["root"]
        raw_nodes = spec["nodes"]
    except (KeyError, TypeError) as exc:
        raise TreeSpecError(f"tree spec missing field: {exc}") from None
    if len(set(actions)) != len(actions):
        raise TreeSpecError("duplicate action names")
    action_ids = {a: i for i, a in enumerate(actions)}

    names: list[str] = []
    ids: dict[str, int] = {}

    def intern(name) -> int:
        name = str(name)
        if name not in ids:
            ids[name] = len(names)
            names.append(name)
        return ids[name]

    intern(root_name)
    for name in raw_nodes:
        intern(name)
    edges: dict[int, dict[int, int]] = {}
    for name, kids in raw_nodes.items():
        table = {}
        for action, child in (kids or {}).items():
            if action not in action_ids:
                raise TreeSpecError(f"node {name!r} uses undeclared action {action!r}")
            table[action_ids[action]] = intern(child)
        edges[ids[str(name)]] = table
    children = tuple(edges.get(i, {}) for i in range(len(names)))

    unknown = [g for g in spec.get("goals", []) if str(g) not in ids]
    if unknown:
        raise TreeSpecError(f"goals reference unknown nodes: {unknown}")
    heuristic = {}
    for name, value in spec.get("h", {}).items():
        if str(name) not in ids:
            raise TreeSpecError(f"heuristic references unknown node {name!r}")
        heuristic[ids[str(name)]] = float(value)

    return SearchTree(
        action_names=tuple(actions),
        names=tuple(names),
        children=children,
        root=ids[str(root_name)],
        goals=frozenset(ids[str(g)] for g in spec.get("goals", [])),
        heuristic=heuristic,
    )


def load_tree(source: str | Path) -> SearchTree:
    """Load a tree from a JSON file or one of the bundled names."""
    if str(source) in BUNDLED_TREES:
        text = resources.files("qtreesearch").joinpath(f"data/{source}.json").read_text()
    else:
        text = Path(source).read_text()
    try:
        spec = json.loads(text)
    except json.JSONDecodeError as exc:
        raise TreeSpecError(f"{source}: {exc}") from None
    return tree_from_dict(spec)
