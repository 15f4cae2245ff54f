"""Dense state-vector simulation of Grover amplitude amplification.

The register holds ``2**m`` complex amplitudes. Oracles are applied as a
phase flip on the marked basis indices, which is equivalent to the
``|x>|c> -> |x>|c xor g(x)>`` construction with the control qubit prepared
in ``|->``; the ancilla is never materialised.

All operations return a new :class:`StateVector`; inputs are not mutated.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable, Union

import numpy as np

from .errors import CapacityError, NoSolutionError

DEFAULT_MAX_QUBITS = 26

Marked = Union[Callable[[int], bool], Iterable[int], np.ndarray]


@dataclass(frozen=True)
class StateVector:
    num_qubits: int
    amplitudes: np.ndarray

    def __post_init__(self):
        amps = np.asarray(self.amplitudes, dtype=np.complex128)
        if amps.ndim != 1 or amps.shape[0] != 1 << self.num_qubits:
            raise ValueError(
                f"expected {1 << self.num_qubits} amplitudes, got shape {amps.shape}"
            )
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)

    @property
    def dimension(self) -> int:
        return self.amplitudes.shape[0]

    def probabilities(self) -> np.ndarray:
        return np.abs(self.amplitudes) ** 2

    def norm_squared(self) -> float:
        return float(np.sum(self.probabilities()))

    def __len__(self) -> int:
        return self.dimension


@dataclass(frozen=True)
class GoodBadDecomposition:
    """Two-dimensional picture of a uniform register split into marked and
    unmarked subspaces."""

    k: int
    n_total: int
    amp_good: float
    amp_bad: float
    theta: float

    @property
    def success_probability(self) -> float:
        return self.amp_good**2


def check_capacity(m: int, max_qubits: int = DEFAULT_MAX_QUBITS) -> None:
    if not 1 <= m <= max_qubits:
        raise CapacityError(
            f"register of {m} qubits outside supported range [1, {max_qubits}]"
        )


def uniform_superposition(m: int, max_qubits: int = DEFAULT_MAX_QUBITS) -> StateVector:
    check_capacity(m, max_qubits)
    dim = 1 << m
    return StateVector(m, np.full(dim, math.sqrt(1.0 / dim), dtype=np.complex128))


def marked_mask(marked: Marked, dimension: int) -> np.ndarray:
    """Boolean mask over basis indices for any accepted ``marked`` form.

    Accepts a boolean array, an iterable of indices, an object with a
    ``mask(dimension)`` method (see :class:`qtreesearch.oracles.Oracle`), or
    a plain predicate over ``int``.
    """
    if isinstance(marked, np.ndarray) and marked.dtype == np.bool_:
        if marked.shape != (dimension,):
            raise ValueError(f"mask shape {marked.shape} != ({dimension},)")
        return marked
    if hasattr(marked, "mask"):
        return marked.mask(dimension)
    if callable(marked):
        return np.fromiter((bool(marked(x)) for x in range(dimension)), dtype=bool, count=dimension)
    mask = np.zeros(dimension, dtype=bool)
    idx = np.fromiter(marked, dtype=np.int64)
    if idx.size:
        if idx.min() < 0 or idx.max() >= dimension:
            raise IndexError("marked index outside register")
        mask[idx] = True
    return mask


def apply_phase_oracle(state: StateVector, marked: Marked) -> StateVector:
    mask = marked_mask(marked, state.dimension)
    amps = np.where(mask, -state.amplitudes, state.amplitudes)
    return StateVector(state.num_qubits, amps)


def invert_about_mean(state: StateVector) -> StateVector:
    mean = state.amplitudes.mean()
    return StateVector(state.num_qubits, 2.0 * mean - state.amplitudes)


def grover_iterate(state: StateVector, marked: Marked) -> StateVector:
    return invert_about_mean(apply_phase_oracle(state, marked))


def run_iterations(state: StateVector, marked: Marked, iterations: int) -> StateVector:
    """Apply ``iterations`` Grover iterates, evaluating the oracle only once."""
    mask = marked_mask(marked, state.dimension)
    for _ in range(iterations):
        state = grover_iterate(state, mask)
    return state


def optimal_iteration_count(n_total: int, k: int) -> int:
    """``floor(pi/4 * sqrt(N/k))``, at least one unless every state is marked."""
    if k == 0:
        raise NoSolutionError("no marked states; amplification is undefined")
    if not 1 <= k <= n_total:
        raise ValueError(f"need 1 <= k <= N, got k={k}, N={n_total}")
    if k == n_total:
        return 0
    return max(1, math.floor(math.pi / 4 * math.sqrt(n_total / k)))


def marked_probability(state: StateVector, marked: Marked) -> float:
    mask = marked_mask(marked, state.dimension)
    return float(np.sum(state.probabilities()[mask]))


def measure(state: StateVector, seed: int | np.random.Generator | None = None) -> int:
    """Sample one basis index with Born-rule probabilities."""
    return int(sample(state, 1, seed)[0])


def sample(state: StateVector, shots: int, seed: int | np.random.Generator | None = None) -> np.ndarray:
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    cumulative = np.cumsum(state.probabilities())
    cumulative /= cumulative[-1]
    draws = rng.random(shots)
    # side="right" keeps zero-probability indices unreachable
    return np.minimum(np.searchsorted(cumulative, draws, side="right"), state.dimension - 1)


def decompose(m: int, k: int) -> GoodBadDecomposition:
    n_total = 1 << m
    if not 0 <= k <= n_total:
        raise ValueError(f"k={k} outside [0, {n_total}]")
    amp_good = math.sqrt(k / n_total)
    amp_bad = math.sqrt((n_total - k) / n_total)
    theta = math.pi / 2 if k == n_total else math.atan(amp_good / amp_bad)
    return GoodBadDecomposition(k, n_total, amp_good, amp_bad, theta)


def closed_form_success(n_total: int, k: int, iterations: int) -> float:
    """Marked-state probability after ``iterations`` iterates from uniform."""
    theta = math.asin(math.sqrt(k / n_total))
    return math.sin((2 * iterations + 1) * theta) ** 2
