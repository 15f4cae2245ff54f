"""Simulated hybrid quantum tree search.

Tree paths are encoded as fixed-width bit strings, marked by goal,
heuristic-threshold or quantile-band oracles, and amplified with Grover
iterates on a dense state vector.
"""

from .errors import (
    CapacityError,
    CodecError,
    ConfigurationError,
    DomainError,
    NoSolutionError,
    SearchSimError,
    TreeSpecError,
)
from .statevector import StateVector, grover_iterate, optimal_iteration_count, uniform_superposition
from .tree_model import PathCodec, SearchTree, decode, encode, load_tree

__all__ = [
    "CapacityError",
    "CodecError",
    "ConfigurationError",
    "DomainError",
    "NoSolutionError",
    "PathCodec",
    "SearchSimError",
    "SearchTree",
    "StateVector",
    "TreeSpecError",
    "decode",
    "encode",
    "grover_iterate",
    "load_tree",
    "optimal_iteration_count",
    "uniform_superposition",
]
