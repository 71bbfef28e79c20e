"""Weighted-coordinate model of a test space / Hilbert space / dual chain.

Coordinates are indexed 0..dim-1 and weighted by the polynomial family
``w_k(n) = (1 + n)^k``. Order 0 is the plain Hilbert norm; increasing
orders model the finer topology of the test space (this is the
Hermite-coefficient picture of rapidly decreasing functions inside
square-integrable ones). Dual vectors share the same coordinates and
are paired sesquilinearly: linear in the test slot, conjugate-linear
in the dual slot.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimMismatch, OrderOutOfRange
from .linalg import as_complex_vector


@dataclass(frozen=True)
class TripleSpec:
    """Coordinate count and seminorm ladder of the weighted model.

    ``max_order`` is the largest seminorm index K; the weight family
    ``w_k(n) = (1 + n)^k`` is monotone in k, so order-k balls shrink
    as k grows and the order-0 seminorm is the Hilbert norm.
    """

    dim: int
    max_order: int

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dim must be a positive integer")
        if self.max_order < 0:
            raise ValueError("max_order must be nonnegative")

    def weights(self, k: int) -> np.ndarray:
        """Weight vector ``w_k(n)`` for n = 0..dim-1."""
        if not 0 <= k <= self.max_order:
            raise OrderOutOfRange(
                f"seminorm order {k} outside [0, {self.max_order}]"
            )
        return (1.0 + np.arange(self.dim)) ** k


@dataclass(frozen=True)
class BoundedSet:
    """Seminorm ball ``{ f : p_order(f) <= radius }``.

    Canonical form of a bounded subset of the test space: every sup
    this package takes over a bounded set is taken over such a ball,
    where it is available in closed form.
    """

    order: int
    radius: float

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("order must be nonnegative")
        if not self.radius > 0:
            raise ValueError("radius must be positive")


def pairing(f, big_f) -> complex:
    """Duality pairing ``<f, F> = sum_n f_n conj(F_n)``.

    Linear in ``f``, conjugate-linear in ``big_f``; coincides with the
    Hilbert inner product when both arguments are ordinary vectors.
    The reversed pairing is defined by conjugation:
    ``<F, f> = conj(<f, F>)``.
    """
    f = as_complex_vector(f, "f")
    big_f = as_complex_vector(big_f, "F")
    if f.shape != big_f.shape:
        raise DimMismatch(f"pairing needs equal lengths, got {f.size} and {big_f.size}")
    return complex(np.dot(f, big_f.conj()))


def seminorm(spec: TripleSpec, k: int, f) -> float:
    """Order-k seminorm ``p_k(f) = (sum_n w_k(n)^2 |f_n|^2)^(1/2)``."""
    f = as_complex_vector(f, "f")
    if f.size != spec.dim:
        raise DimMismatch(f"vector length {f.size} does not match dim {spec.dim}")
    return float(np.linalg.norm(spec.weights(k) * f))


def dual_seminorm(spec: TripleSpec, m: BoundedSet, big_f) -> float:
    """Dual seminorm ``sup_{g in M} |<g, F>|`` over the ball ``m``.

    The sup over the weighted ball is attained in closed form:
    ``radius * (sum_n |F_n|^2 / w_k(n)^2)^(1/2)``. With the order-0
    unit ball this is exactly the Hilbert norm of ``big_f``.
    """
    big_f = as_complex_vector(big_f, "F")
    if big_f.size != spec.dim:
        raise DimMismatch(f"vector length {big_f.size} does not match dim {spec.dim}")
    w = spec.weights(m.order)
    return float(m.radius * np.linalg.norm(big_f / w))


def decay_profile(spec: TripleSpec, f) -> np.ndarray:
    """All seminorm values ``(p_0(f), ..., p_K(f))``, nondecreasing in k.

    Diagnoses how comfortably ``f`` sits in the model test space: a
    slowly growing profile means the coordinates decay fast enough
    that the vector would survive a dimension increase.
    """
    return np.array([seminorm(spec, k, f) for k in range(spec.max_order + 1)])
