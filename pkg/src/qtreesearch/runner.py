"""End-to-end hybrid search: encode paths, amplify, measure, decode."""

from __future__ import annotations

import csv
import io
import time
from dataclasses import dataclass, field

from . import statevector as sv
from .oracles import Oracle
from .tree_model import PathCodec, SearchTree, admissible_paths, decode, encode, walk


@dataclass
class RunConfig:
    tree: str = "fig1"
    depth: int | None = None
    goals: list[str] = field(default_factory=list)
    seed: int = 0
    iterations: int | None = None
    max_qubits: int = sv.DEFAULT_MAX_QUBITS
    threshold: float | None = None
    band: tuple[float, float] = (0.0, 0.25)
    inclusive_lower: bool = False
    step_cost: float = 1.0


@dataclass
class RunReport:
    n_total: int
    k: int
    iterations: int
    success_probability: float
    measured_index: int
    measured_bits: str
    decoded_path: tuple[str, ...]
    terminal: str | None
    marked: bool
    wall_time: float
    warnings: list[str] = field(default_factory=list)
    extra: dict[str, object] = field(default_factory=dict)

    def lines(self) -> list[str]:
        rows = [
            ("N", self.n_total),
            ("k", self.k),
            ("iterations", self.iterations),
            ("success_probability", f"{self.success_probability:.12f}"),
            ("measured_index", self.measured_index),
            ("measured_bits", self.measured_bits),
            ("decoded_path", ",".join(self.decoded_path)),
            ("terminal", self.terminal if self.terminal is not None else "-"),
            ("marked", str(self.marked).lower()),
        ]
        rows.extend(self.extra.items())
        rows.append(("wall_time", f"{self.wall_time:.6f}"))
        return [f"{key}: {value}" for key, value in rows]


def action_label(tree: SearchTree, action: int, codec: PathCodec) -> str:
    if action < len(tree.action_names):
        return tree.action_names[action]
    return f"undefined({action:0{codec.bits_per_action}b})"


def run_grover(
    tree: SearchTree,
    codec: PathCodec,
    oracle: Oracle,
    seed: int | None = 0,
    iterations: int | None = None,
) -> RunReport:
    start = time.perf_counter()
    warnings = []
    mask = oracle.mask(codec.size)
    k = int(mask.sum())
    if iterations is None:
        if k == 0:
            warnings.append("no marked states: measuring the uniform superposition")
            iterations = 0
        else:
            iterations = sv.optimal_iteration_count(codec.size, k)
    state = sv.run_iterations(sv.uniform_superposition(codec.width, codec.max_qubits), mask, iterations)
    probability = sv.marked_probability(state, mask)
    index = sv.measure(state, seed)
    path = decode(index, codec)
    terminal = walk(tree, path)
    return RunReport(
        n_total=codec.size,
        k=k,
        iterations=iterations,
        success_probability=probability,
        measured_index=index,
        measured_bits=" ".join(codec.format_bits(index)),
        decoded_path=tuple(action_label(tree, a, codec) for a in path),
        terminal=tree.names[terminal] if terminal is not None else None,
        marked=bool(mask[index]),
        wall_time=time.perf_counter() - start,
        warnings=warnings,
    )


def encoding_table(tree: SearchTree, codec: PathCodec) -> str:
    """CSV of every admissible path's per-level codes, sorted by terminal node name."""
    rows = []
    for path, terminal in admissible_paths(tree, codec.depth):
        rows.append([tree.names[terminal], *codec.format_bits(encode(path, codec))])
    rows.sort(key=lambda r: r[0])
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["path_to_node", *(f"action_level_{i + 1}" for i in range(codec.depth))])
    writer.writerows(rows)
    return out.getvalue()
