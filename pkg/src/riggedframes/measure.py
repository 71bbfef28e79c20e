"""Discretized measure spaces: nodes, quadrature weights, weighted inner product.

Three quadrature kinds cover the package's needs: counting measure for
discrete sequence systems, periodic trapezoid for Fourier-type systems
on a circle (spectrally exact for trigonometric polynomials), and
composite Simpson for generic intervals. Unbounded domains are handled
by caller-chosen truncation.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import BadInterval, DimMismatch
from .linalg import as_complex_vector

KIND_COUNTING = "counting"
KIND_PERIODIC = "trapezoid-periodic"
KIND_SIMPSON = "simpson"
KINDS = (KIND_COUNTING, KIND_PERIODIC, KIND_SIMPSON)


@dataclass(frozen=True)
class MeasureSpace:
    """Finite node set with positive weights.

    ``nodes`` must be strictly increasing and ``weights`` strictly
    positive; counting measure additionally has unit weights.
    """

    nodes: np.ndarray
    weights: np.ndarray
    kind: str = field(default=KIND_COUNTING)

    def __post_init__(self):
        nodes = np.asarray(self.nodes, dtype=float)
        weights = np.asarray(self.weights, dtype=float)
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "weights", weights)
        if nodes.ndim != 1 or weights.ndim != 1 or nodes.size != weights.size:
            raise DimMismatch("nodes and weights must be 1-d arrays of equal length")
        if nodes.size == 0:
            raise BadInterval("a measure space needs at least one node")
        if not (np.all(np.isfinite(nodes)) and np.all(np.isfinite(weights))):
            raise BadInterval("nodes and weights must be finite")
        if np.any(np.diff(nodes) <= 0):
            raise BadInterval("nodes must be strictly increasing")
        if np.any(weights <= 0):
            raise BadInterval("all weights must be positive")
        if self.kind not in KINDS:
            raise BadInterval(f"unknown measure kind {self.kind!r}")
        if self.kind == KIND_COUNTING and not np.allclose(weights, 1.0):
            raise BadInterval("counting measure requires unit weights")

    @property
    def size(self) -> int:
        return int(self.nodes.size)


def make_counting(n: int) -> MeasureSpace:
    """Counting measure on nodes 0..n-1 (discrete sequence setting)."""
    if n < 1:
        raise BadInterval("counting measure needs at least one node")
    return MeasureSpace(np.arange(n, dtype=float), np.ones(n), KIND_COUNTING)


def _simpson_weights(a: float, b: float, n: int) -> np.ndarray:
    # Composite 1/3 rule; a 3/8 tail patches even node counts so every
    # n >= 3 is admissible at full fourth order.
    h = (b - a) / (n - 1)
    w = np.zeros(n)
    if (n - 1) % 2 == 0:
        w[0] = w[-1] = 1.0
        w[1:-1:2] = 4.0
        w[2:-1:2] = 2.0
        w *= h / 3.0
    else:
        m = n - 4  # nodes 0..m carry the 1/3 rule (even interval count)
        w[0] = w[m] = 1.0
        w[1:m:2] = 4.0
        w[2:m:2] = 2.0
        w *= h / 3.0
        w[m:] += np.array([1.0, 3.0, 3.0, 1.0]) * (3.0 * h / 8.0)
    return w


def make_uniform(a: float, b: float, n: int, periodic: bool = False) -> MeasureSpace:
    """Uniform grid on [a, b]: periodic trapezoid or composite Simpson.

    Periodic grids place ``n`` nodes on [a, b) with equal weights
    (b - a)/n, exact for trigonometric polynomials of circle degree
    below ``n``. Non-periodic grids use composite Simpson weights and
    require ``n >= 3`` nodes.
    """
    if not (np.isfinite(a) and np.isfinite(b)) or a >= b:
        raise BadInterval(f"need a < b, got [{a}, {b}]")
    if periodic:
        if n < 2:
            raise BadInterval("periodic grid needs at least two nodes")
        nodes = a + (b - a) * np.arange(n) / n
        weights = np.full(n, (b - a) / n)
        return MeasureSpace(nodes, weights, KIND_PERIODIC)
    if n < 3:
        raise BadInterval("Simpson rule needs at least three nodes")
    nodes = np.linspace(a, b, n)
    return MeasureSpace(nodes, _simpson_weights(a, b, n), KIND_SIMPSON)


def integrate(ms: MeasureSpace, values) -> complex:
    """Quadrature integral ``sum_i values_i * mu_i``."""
    values = as_complex_vector(values, "values")
    if values.size != ms.size:
        raise DimMismatch(f"got {values.size} values for {ms.size} nodes")
    return complex(np.dot(values, ms.weights))


def l2_inner(ms: MeasureSpace, xi, eta) -> complex:
    """Weighted inner product ``sum_i xi_i conj(eta_i) mu_i``."""
    xi = as_complex_vector(xi, "xi")
    eta = as_complex_vector(eta, "eta")
    if xi.size != ms.size or eta.size != ms.size:
        raise DimMismatch(
            f"lengths {xi.size}, {eta.size} do not match {ms.size} nodes"
        )
    return complex(np.dot(xi * ms.weights, eta.conj()))


def l2_norm(ms: MeasureSpace, xi) -> float:
    """Weighted norm ``sqrt(<xi, xi>)``."""
    return float(np.sqrt(l2_inner(ms, xi, xi).real))
