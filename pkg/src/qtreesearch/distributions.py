"""Empirical distributions of heuristic values: PMF, CDF and quantiles.

Discrete distributions are step functions; the quantile is the infimum
``inf{x : p <= F(x)}``, i.e. the smallest support value whose cumulative
mass reaches ``p``. Continuous quantities are represented by normalised
histograms whose CDF is piecewise linear inside each bin.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Literal

import numpy as np

from .errors import DomainError

Kind = Literal["discrete", "binned"]

DEFAULT_BIN_WIDTH = 0.25
_SQRT2 = math.sqrt(2.0)


@dataclass(frozen=True)
class EmpiricalDistribution:
    """``support`` holds the atoms (discrete) or the bin edges (binned)."""

    kind: Kind
    support: np.ndarray
    mass: np.ndarray
    counts: np.ndarray | None = None
    cumulative: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        support = np.asarray(self.support, dtype=float)
        mass = np.asarray(self.mass, dtype=float)
        if self.kind not in ("discrete", "binned"):
            raise ValueError(f"unknown distribution kind {self.kind!r}")
        expected = mass.size + (1 if self.kind == "binned" else 0)
        if mass.size == 0 or support.size != expected:
            raise ValueError("support/mass length mismatch")
        if np.any(mass < 0):
            raise ValueError("negative probability mass")
        if np.any(np.diff(support) <= 0):
            raise ValueError("support must be strictly increasing")
        if abs(mass.sum() - 1.0) > 1e-12:
            raise ValueError(f"masses sum to {mass.sum()!r}, not 1")
        if self.counts is not None:
            # integer cumsum keeps cut points like 3/4 exact
            counts = np.asarray(self.counts, dtype=np.int64)
            cumulative = np.cumsum(counts) / counts.sum()
        else:
            cumulative = np.cumsum(mass)
        cumulative[-1] = 1.0
        object.__setattr__(self, "support", support)
        object.__setattr__(self, "mass", mass)
        object.__setattr__(self, "cumulative", cumulative)

    @classmethod
    def from_masses(cls, support, mass, kind: Kind = "discrete") -> EmpiricalDistribution:
        mass = np.asarray(mass, dtype=float)
        return cls(kind, support, mass / mass.sum())

    @property
    def edges(self) -> np.ndarray:
        if self.kind != "binned":
            raise AttributeError("discrete distributions have no bin edges")
        return self.support

    def density(self) -> np.ndarray:
        """Per-bin density; integrates to one over the edges."""
        return self.mass / np.diff(self.edges)

    def atom(self, x: float) -> float:
        """Point mass at ``x`` (zero for binned distributions)."""
        if self.kind != "discrete":
            return 0.0
        i = np.searchsorted(self.support, x)
        if i < self.support.size and self.support[i] == x:
            return float(self.mass[i])
        return 0.0

    def cdf(self, x: float) -> float:
        if self.kind == "discrete":
            i = int(np.searchsorted(self.support, x, side="right"))
            return 0.0 if i == 0 else float(self.cumulative[i - 1])
        edges = self.support
        if x < edges[0]:
            return 0.0
        if x >= edges[-1]:
            return 1.0
        i = int(np.searchsorted(edges, x, side="right")) - 1
        below = 0.0 if i == 0 else float(self.cumulative[i - 1])
        return below + float(self.mass[i]) * (x - edges[i]) / (edges[i + 1] - edges[i])

    def quantile(self, p: float) -> float:
        if not 0.0 < p <= 1.0:
            raise DomainError(f"quantile probability must lie in (0, 1], got {p}")
        i = int(np.searchsorted(self.cumulative, p, side="left"))
        if self.kind == "discrete":
            return float(self.support[i])
        below = 0.0 if i == 0 else float(self.cumulative[i - 1])
        left, right = self.support[i], self.support[i + 1]
        return float(left + (p - below) / self.mass[i] * (right - left))

    def mean(self) -> float:
        points = self.support if self.kind == "discrete" else 0.5 * (self.support[1:] + self.support[:-1])
        return float(np.dot(points, self.mass))


def pmf_from_samples(
    values: Iterable[float],
    kind: Kind = "discrete",
    bin_width: float = DEFAULT_BIN_WIDTH,
    bins: int | None = None,
) -> EmpiricalDistribution:
    """Normalised distribution of ``values``.

    For ``kind="binned"`` either a fixed ``bin_width`` (edges aligned to
    multiples of the width) or a number of equal ``bins`` spanning the data.
    """
    data = np.asarray(list(values) if not isinstance(values, np.ndarray) else values, dtype=float)
    if data.size == 0:
        raise ValueError("cannot build a distribution from no samples")
    if not np.all(np.isfinite(data)):
        raise ValueError("samples must be finite")
    if kind == "discrete":
        support, counts = np.unique(data, return_counts=True)
        return EmpiricalDistribution("discrete", support, counts / data.size, counts)
    if kind != "binned":
        raise ValueError(f"unknown distribution kind {kind!r}")
    lo, hi = float(data.min()), float(data.max())
    if bins is not None:
        if bins < 1:
            raise ValueError("bins must be positive")
        if hi == lo:
            hi = lo + 1.0
        edges = np.linspace(lo, hi, bins + 1)
    else:
        if bin_width <= 0:
            raise ValueError("bin width must be positive")
        start = math.floor(lo / bin_width) * bin_width
        n_bins = max(1, math.floor((hi - start) / bin_width) + 1)
        edges = start + bin_width * np.arange(n_bins + 1)
    counts, edges = np.histogram(data, bins=edges)
    return EmpiricalDistribution("binned", edges, counts / data.size, counts)


def cdf(dist: EmpiricalDistribution, x: float) -> float:
    return dist.cdf(x)


def quantile(dist: EmpiricalDistribution, p: float) -> float:
    return dist.quantile(p)


def _erfinv_initial(x: float) -> float:
    # M. Giles, "Approximating the erfinv function", GPU Computing Gems (2011),
    # single-precision branch; refined by Newton below.
    w = -math.log((1.0 - x) * (1.0 + x))
    if w < 5.0:
        w -= 2.5
        p = 2.81022636e-08
        for c in (3.43273939e-07, -3.5233877e-06, -4.39150654e-06, 0.00021858087,
                  -0.00125372503, -0.00417768164, 0.246640727, 1.50140941):
            p = c + p * w
    else:
        w = math.sqrt(w) - 3.0
        p = -0.000200214257
        for c in (0.000100950558, 0.00134934322, -0.00367342844, 0.00573950773,
                  -0.0076224613, 0.00943887047, 1.00167406, 2.83297682):
            p = c + p * w
    return p * x


def erfinv(x: float) -> float:
    if not -1.0 < x < 1.0:
        if x == 1.0:
            return math.inf
        if x == -1.0:
            return -math.inf
        raise DomainError(f"erfinv argument must lie in [-1, 1], got {x}")
    y = _erfinv_initial(x)
    for _ in range(2):
        y -= (math.erf(y) - x) / (2.0 / math.sqrt(math.pi) * math.exp(-y * y))
    return y


def normal_cdf(x: float, mu: float = 0.0, sigma: float = 1.0) -> float:
    return 0.5 * math.erfc(-(x - mu) / (sigma * _SQRT2))


def normal_quantile(p: float, mu: float = 0.0, sigma: float = 1.0) -> float:
    """``mu + sqrt(2) * sigma * erfinv(2p - 1)``."""
    if not 0.0 < p < 1.0:
        raise DomainError(f"normal quantile needs 0 < p < 1, got {p}")
    if sigma <= 0:
        raise DomainError("sigma must be positive")
    if p == 0.5:
        return float(mu)
    # solve in the lower tail, where Phi is evaluated through erfc without cancellation
    q = min(p, 1.0 - p)
    if q < 0.02:
        # rational tail approximation (Abramowitz and Stegun 26.2.23), error < 4.5e-4
        t = math.sqrt(-2.0 * math.log(q))
        z = -(t - (2.515517 + 0.802853 * t + 0.010328 * t * t) / (1.0 + 1.432788 * t + 0.189269 * t * t + 0.001308 * t**3))
    else:
        z = _SQRT2 * erfinv(2.0 * q - 1.0)
    for _ in range(20):
        # Halley step on Phi(z) - q; Phi'' = -z * phi
        step = (normal_cdf(z) - q) / (math.exp(-0.5 * z * z) / math.sqrt(2.0 * math.pi))
        step /= 1.0 + 0.5 * z * step
        z -= step
        if abs(step) <= 1e-15 * max(1.0, abs(z)):
            break
    z = z if p < 0.5 else -z
    return mu + sigma * z
