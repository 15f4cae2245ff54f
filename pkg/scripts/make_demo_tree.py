"""Write the bundled grid-walk demo tree used by ``quantile-demo``.

Three moves on an open grid from (0, 0); every node carries the Manhattan
distance of its cell to the target (0, 3) as ``h``. Nodes are named by
their move letters, the root is ``root``.
"""

import argparse
import json
from pathlib import Path

MOVES = {"U": (0, 1), "D": (0, -1), "L": (-1, 0), "R": (1, 0)}
TARGET = (0, 3)
DEPTH = 3


def build(depth: int = DEPTH, target=TARGET) -> dict:
    nodes, h, goals = {}, {}, []
    frontier = [("", (0, 0))]
    while frontier:
        name, (x, y) = frontier.pop()
        label = name or "root"
        h[label] = abs(x - target[0]) + abs(y - target[1])
        if len(name) == depth:
            nodes[label] = {}
            if (x, y) == target:
                goals.append(label)
            continue
        nodes[label] = {m: name + m for m in MOVES}
        frontier.extend((name + m, (x + dx, y + dy)) for m, (dx, dy) in MOVES.items())
    order = sorted(nodes, key=lambda n: (n != "root", len(n), n))
    return {
        "actions": list(MOVES),
        "root": "root",
        "goals": sorted(goals),
        "nodes": {n: nodes[n] for n in order},
        "h": {n: h[n] for n in order},
    }


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default=Path(__file__).resolve().parents[1] / "src/qtreesearch/data/grid_demo.json")
    args = parser.parse_args()
    Path(args.out).write_text(json.dumps(build(), indent=1) + "\n")
    print(f"wrote {args.out}")
