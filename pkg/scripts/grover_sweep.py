"""Marked probability against iteration count for a goal on a bundled or
user tree, simulated and closed form side by side.
"""

import argparse
from dataclasses import dataclass

from qtreesearch import statevector as sv
from qtreesearch.oracles import goal_oracle
from qtreesearch.tree_model import PathCodec, load_tree


@dataclass
class Config:
    tree: str = "fig2"
    goals: tuple[str, ...] = ("J",)
    depth: int | None = None
    max_iterations: int | None = None


def main(cfg: Config) -> None:
    tree = load_tree(cfg.tree).with_goals(cfg.goals)
    codec = PathCodec.for_tree(tree, cfg.depth)
    mask = goal_oracle(tree, codec).mask()
    k = int(mask.sum())
    best = sv.optimal_iteration_count(codec.size, k)
    last = cfg.max_iterations if cfg.max_iterations is not None else 2 * best + 1
    print(f"# N={codec.size} k={k} optimal={best}")
    print("iterations,simulated,closed_form")
    state = sv.uniform_superposition(codec.width)
    for j in range(last + 1):
        if j:
            state = sv.grover_iterate(state, mask)
        print(f"{j},{sv.marked_probability(state, mask):.12f},{sv.closed_form_success(codec.size, k, j):.12f}")


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--tree", default=Config.tree)
    parser.add_argument("--goal", nargs="+", default=list(Config.goals))
    parser.add_argument("--depth", type=int)
    parser.add_argument("--max-iterations", type=int)
    args = parser.parse_args()
    main(Config(args.tree, tuple(args.goal), args.depth, args.max_iterations))
