"""Grover iteration counts versus classical node counts for non-constant
branching factors, and the good/bad angle geometry across search depths.

Encoding ``b_max`` actions costs ``n = ceil(log2 b_max)`` bits per level, so
a depth-``d`` register has ``2**(n*d)`` states and needs ``2**(n*d/2)``
iterates, whereas a classical search visits about ``b_avg**d`` nodes. The
two are equal exactly when ``b_avg = 2**(n/2)``, independent of ``d``.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from typing import Iterable, Sequence


def bits_for(b_max: int) -> int:
    """``ceil(log2 b_max)`` computed exactly, at least 1."""
    if b_max < 1:
        raise ValueError("b_max must be positive")
    return max(1, (b_max - 1).bit_length())


@dataclass(frozen=True)
class BranchingScenario:
    b_max: int
    b_avg: float
    d: int

    def __post_init__(self):
        if self.b_max < 2:
            raise ValueError("b_max must be at least 2")
        if not 1 <= self.b_avg <= self.b_max:
            raise ValueError(f"need 1 <= b_avg <= b_max, got {self.b_avg}")
        if self.d < 1:
            raise ValueError("depth must be at least 1")

    @property
    def bits(self) -> int:
        return bits_for(self.b_max) * self.d


@dataclass(frozen=True)
class SpeedupReport:
    classical_max: int | float
    classical_avg: int | float
    grover: int | float
    ratio_max_avg: float
    ratio_avg_grover: float
    crossover: float

    @property
    def hybrid_wins(self) -> bool:
        return self.ratio_avg_grover > 1.0


@dataclass(frozen=True)
class LadderRow:
    b_max: int
    threshold: float
    smooth: float
    smooth_upper: float


@dataclass(frozen=True)
class DepthSolutionProfile:
    """Marked-state counts ``k_d`` for successive depths on an ``n_bits`` register."""

    n_bits: int
    k_by_depth: dict[int, int]

    @property
    def is_nondecreasing(self) -> bool:
        ks = [self.k_by_depth[d] for d in sorted(self.k_by_depth)]
        return all(a <= b for a, b in zip(ks, ks[1:]))


@dataclass(frozen=True)
class LimitCheck:
    distances: tuple[float, ...]
    nondecreasing_input: bool
    distances_monotone: bool
    converged: bool


def grover_iterations_real(scenario: BranchingScenario) -> float | int:
    """``sqrt(2**(n*d))``; an exact int when the exponent is even."""
    bits = scenario.bits
    if bits % 2 == 0:
        return 1 << (bits // 2)
    return math.sqrt(2.0) * float(1 << (bits // 2))


def grover_iterations(scenario: BranchingScenario) -> int:
    """Integer iteration count ``floor(2**(n*d/2))`` in exact arithmetic."""
    return math.isqrt(1 << scenario.bits)


def classical_node_count(b: float, d: int) -> int | float:
    if d < 0:
        raise ValueError("depth must be non-negative")
    if float(b).is_integer():
        return int(b) ** d
    try:
        return math.exp(d * math.log(b))
    except OverflowError:
        return math.inf


def crossover_b_avg(b_max: int) -> float:
    return 2.0 ** (bits_for(b_max) / 2)


def ladder_table(b_max_values: Iterable[int]) -> list[LadderRow]:
    """Crossover threshold with its ceiling-free variants ``sqrt(b)`` and ``sqrt(2b)``."""
    return [
        LadderRow(b, crossover_b_avg(b), math.sqrt(b), math.sqrt(2 * b))
        for b in sorted(set(b_max_values))
    ]


def ladder_csv(rows: Sequence[LadderRow]) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["b_max", "threshold", "smooth", "smooth_upper"])
    for r in rows:
        writer.writerow([r.b_max, repr(r.threshold), repr(r.smooth), repr(r.smooth_upper)])
    return out.getvalue()


def speedup_report(scenario: BranchingScenario) -> SpeedupReport:
    cmax = classical_node_count(scenario.b_max, scenario.d)
    cavg = classical_node_count(scenario.b_avg, scenario.d)
    grover = grover_iterations_real(scenario)
    return SpeedupReport(
        classical_max=cmax,
        classical_avg=cavg,
        grover=grover,
        ratio_max_avg=cmax / cavg,
        ratio_avg_grover=cavg / grover,
        crossover=crossover_b_avg(scenario.b_max),
    )


def theta_of_depth(n_bits: int, k_d: int) -> float:
    """Angle of the depth-``d`` state from the bad axis, ``arctan sqrt(k/(2^n - k))``."""
    total = 1 << n_bits
    if not 0 <= k_d <= total:
        raise ValueError(f"k_d={k_d} outside [0, {total}]")
    return math.atan2(math.sqrt(k_d), math.sqrt(total - k_d))


def delta_theta(n_bits: int, k_d1: int, k_d2: int) -> float:
    return theta_of_depth(n_bits, k_d2) - theta_of_depth(n_bits, k_d1)


def depth_state(n_bits: int, k_d: int) -> tuple[float, float]:
    """(good, bad) coordinates of the depth-``d`` state; unit length."""
    total = 1 << n_bits
    return math.sqrt(k_d / total), math.sqrt((total - k_d) / total)


def psi_kd_limit_check(n_bits: int, k: int, k_sequence: Sequence[int]) -> LimitCheck:
    """Distance of each depth state to the full-depth state as ``k_d`` grows to ``k``.

    Decreasing input sequences are flagged in the result, not rejected.
    """
    target = depth_state(n_bits, k)
    distances = tuple(math.dist(depth_state(n_bits, kd), target) for kd in k_sequence)
    nondecreasing = all(a <= b for a, b in zip(k_sequence, k_sequence[1:]))
    monotone = all(a >= b for a, b in zip(distances, distances[1:]))
    converged = bool(distances) and distances[-1] == 0.0
    return LimitCheck(distances, nondecreasing, monotone, converged)
