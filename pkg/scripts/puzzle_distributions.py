"""Exhaustive h1 / h2 distributions over the 181440 boards reachable from
the 8-puzzle goal, with quartile summaries.
"""

import argparse
import csv
from dataclasses import dataclass
from pathlib import Path

from qtreesearch import puzzle


@dataclass
class Config:
    out: Path = Path("results/puzzle")
    bin_width: float = 0.25
    count_blank: bool = True


def write(path: Path, dist) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        if dist.kind == "discrete":
            writer.writerow(["value", "count", "mass"])
            writer.writerows(zip(dist.support.tolist(), dist.counts.tolist(), dist.mass.tolist()))
        else:
            edges = dist.edges
            writer.writerow(["bin_left", "bin_right", "count", "mass"])
            writer.writerows(zip(edges[:-1].tolist(), edges[1:].tolist(), dist.counts.tolist(), dist.mass.tolist()))


def main(cfg: Config) -> None:
    cfg.out.mkdir(parents=True, exist_ok=True)
    boards = list(puzzle.enumerate_reachable())
    blank = cfg.count_blank
    h1 = puzzle.heuristic_distribution(lambda b, g: puzzle.h1_misplaced(b, g, blank), boards=iter(boards))
    h2 = puzzle.heuristic_distribution(
        lambda b, g: puzzle.h2_euclidean(b, g, blank), kind="binned", bin_width=cfg.bin_width, boards=iter(boards)
    )
    write(cfg.out / "h1.csv", h1)
    write(cfg.out / "h2.csv", h2)
    for name, dist in (("h1", h1), ("h2", h2)):
        q = [dist.quantile(p) for p in (0.25, 0.5, 0.75)]
        print(f"{name}: mean {dist.mean():.4f}, quartiles " + ", ".join(f"{v:.4f}" for v in q))


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", type=Path, default=Config.out)
    parser.add_argument("--bin-width", type=float, default=Config.bin_width)
    parser.add_argument("--exclude-blank", action="store_true")
    args = parser.parse_args()
    main(Config(args.out, args.bin_width, not args.exclude_blank))
