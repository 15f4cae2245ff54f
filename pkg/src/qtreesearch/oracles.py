"""Phase-oracle predicates over encoded tree paths.

Three kinds are provided: goal, heuristic threshold (``f <= T``) and
quantile band. Each is an :class:`Oracle`, callable on a basis index and
able to produce the full boolean mask for a register. Inadmissible bit
strings are never marked.

The evaluation function ``f`` takes ``(terminal_node, action_path)``.
Intermediate nodes are not passed because walking the path from the root
recovers them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Literal

import numpy as np

from .distributions import EmpiricalDistribution, pmf_from_samples
from .errors import ConfigurationError
from .tree_model import ActionPath, PathCodec, SearchTree, admissible_paths, decode, encode, walk

Evaluation = Callable[[int, ActionPath], float]
OracleKind = Literal["goal", "threshold", "quantile_band"]

BAND_WIDTH = 0.25


@dataclass(frozen=True)
class Oracle:
    kind: OracleKind
    tree: SearchTree
    codec: PathCodec
    accept: Callable[[int, ActionPath], bool] = field(repr=False)
    threshold: float | None = None
    band: tuple[float, float] | None = None
    bounds: tuple[float, float] | None = None
    distribution: EmpiricalDistribution | None = field(default=None, repr=False)

    def __call__(self, index: int) -> bool:
        path = decode(index, self.codec)
        terminal = walk(self.tree, path)
        return terminal is not None and bool(self.accept(terminal, path))

    @cached_property
    def _mask(self) -> np.ndarray:
        mask = np.zeros(self.codec.size, dtype=bool)
        for path, terminal in admissible_paths(self.tree, self.codec.depth):
            if self.accept(terminal, path):
                mask[encode(path, self.codec)] = True
        mask.setflags(write=False)
        return mask

    def mask(self, dimension: int | None = None) -> np.ndarray:
        if dimension is not None and dimension != self.codec.size:
            raise ValueError(f"oracle covers {self.codec.size} states, register has {dimension}")
        return self._mask

    def marked_indices(self) -> list[int]:
        return np.flatnonzero(self._mask).tolist()

    @property
    def k(self) -> int:
        return int(self._mask.sum())

    @cached_property
    def admissible(self) -> int:
        return sum(1 for _ in admissible_paths(self.tree, self.codec.depth))

    @property
    def fraction_of_admissible(self) -> float:
        return self.k / self.admissible if self.admissible else 0.0

    @property
    def fraction_of_space(self) -> float:
        return self.k / self.codec.size


def path_evaluation(tree: SearchTree, h: Callable[[int], float] | None = None, step_cost: float = 1.0) -> Evaluation:
    """``f = g + h`` with ``g`` the summed (uniform) action cost."""
    h = tree.h if h is None else h
    return lambda terminal, path: step_cost * len(path) + h(terminal)


def goal_oracle(tree: SearchTree, codec: PathCodec) -> Oracle:
    return Oracle("goal", tree, codec, lambda terminal, _: terminal in tree.goals)


def threshold_oracle(tree: SearchTree, codec: PathCodec, f: Evaluation, threshold: float) -> Oracle:
    return Oracle(
        "threshold", tree, codec, lambda terminal, path: f(terminal, path) <= threshold, threshold=threshold
    )


def check_band(band: tuple[float, float]) -> tuple[float, float]:
    try:
        a, b = (float(v) for v in band)
    except (TypeError, ValueError):
        raise ConfigurationError(f"band must be a pair of probabilities, got {band!r}") from None
    if not 0.0 <= a < b <= 1.0:
        raise ConfigurationError(f"band needs 0 <= a < b <= 1, got ({a}, {b})")
    if abs((b - a) - BAND_WIDTH) > 1e-12:
        raise ConfigurationError(f"band width must be {BAND_WIDTH}, got {b - a:g}")
    return a, b


def path_value_distribution(tree: SearchTree, codec: PathCodec, f: Evaluation) -> EmpiricalDistribution:
    """Discrete distribution of ``f`` over the admissible paths."""
    values = [f(terminal, path) for path, terminal in admissible_paths(tree, codec.depth)]
    if not values:
        raise ConfigurationError("tree has no admissible paths at this depth")
    return pmf_from_samples(values, "discrete")


def band_bounds(dist: EmpiricalDistribution, band: tuple[float, float]) -> tuple[float, float]:
    a, b = check_band(band)
    lower = -math.inf if a == 0.0 else dist.quantile(a)
    return lower, dist.quantile(b)


def quantile_band_oracle(
    tree: SearchTree,
    codec: PathCodec,
    f: Evaluation,
    band: tuple[float, float],
    dist: EmpiricalDistribution | None = None,
    inclusive_lower: bool = False,
) -> Oracle:
    """Mark paths whose value lies in the band between two quantiles.

    The selected interval is ``(F^-1(a), F^-1(b)]`` so that the four
    quartile bands partition the admissible paths; ``inclusive_lower=True``
    closes the interval on the left as well. With ``a = 0`` the lower bound
    is ``-inf``. ``dist`` defaults to the distribution of ``f`` over the
    admissible paths.
    """
    a, b = check_band(band)
    if dist is None:
        dist = path_value_distribution(tree, codec, f)
    lower, upper = band_bounds(dist, (a, b))

    def accept(terminal: int, path: ActionPath) -> bool:
        value = f(terminal, path)
        above = value >= lower if inclusive_lower else value > lower
        return above and value <= upper

    return Oracle("quantile_band", tree, codec, accept, band=(a, b), bounds=(lower, upper), distribution=dist)


def marked_count(predicate: Callable[[int], bool], n_total: int) -> int:
    """Number of basis indices in ``[0, n_total)`` the predicate marks."""
    return sum(1 for x in range(n_total) if predicate(x))
