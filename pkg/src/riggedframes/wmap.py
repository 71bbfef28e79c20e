"""Sampled distribution-valued maps and their operators.

A :class:`SampledMap` tabulates a map ``x -> omega_x`` (one
distribution per node) against the coordinate units of the test
space: ``table[i, n]`` is the pairing of unit ``e_n`` with
``omega_{x_i}``. From the table and the node weights come the four
operators of frame theory:

* analysis ``C``: vector -> node function, ``(C f)(x_i) = <f, omega_{x_i}>``
* synthesis ``D``: node function -> dual vector, the weighted adjoint of C
* frame operator ``S = D C`` on coordinates (Hermitian PSD)
* Gram operator ``C D`` on node space, carried as a symmetrically
  sqrt-weighted matrix so its eigenvalues are the squared singular
  values of the weighted synthesis map.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .errors import DimMismatch
from .gelfand import TripleSpec
from .linalg import as_complex_matrix, as_complex_vector
from .measure import MeasureSpace


@dataclass(frozen=True)
class SampledMap:
    """Evaluation table of a distribution-valued map over a node set.

    Row i holds the coordinates of ``omega_{x_i}`` in the functional
    sense: entry (i, n) equals ``<e_n, omega_{x_i}>``.
    """

    table: np.ndarray
    ms: MeasureSpace
    triple: TripleSpec

    def __post_init__(self):
        table = as_complex_matrix(self.table, "table")
        object.__setattr__(self, "table", table)
        if table.shape != (self.ms.size, self.triple.dim):
            raise DimMismatch(
                f"table shape {table.shape} does not match "
                f"{self.ms.size} nodes x {self.triple.dim} coordinates"
            )

    @property
    def n_nodes(self) -> int:
        return self.ms.size

    @property
    def dim(self) -> int:
        return self.triple.dim


def analysis_matrix(m: SampledMap) -> np.ndarray:
    """Matrix of the analysis operator: it is the table itself."""
    return m.table.copy()


def synthesis_matrix(m: SampledMap) -> np.ndarray:
    """Matrix of the synthesis operator: ``dagger(table)`` times the weight diagonal."""
    return m.table.conj().T * m.ms.weights[None, :]


def weighted_analysis_matrix(m: SampledMap) -> np.ndarray:
    """``sqrt(mu)``-scaled analysis matrix, so plain column norms are mu-norms."""
    return np.sqrt(m.ms.weights)[:, None] * m.table


def analysis(m: SampledMap, f) -> np.ndarray:
    """Node samples ``<f, omega_{x_i}>`` of the analysis image of ``f``."""
    f = as_complex_vector(f, "f")
    if f.size != m.dim:
        raise DimMismatch(f"vector length {f.size} does not match dim {m.dim}")
    return m.table @ f


def synthesis(m: SampledMap, xi) -> np.ndarray:
    """Dual-vector coordinates of the weighted superposition of the rows.

    Satisfies the adjoint identity
    ``pairing(f, synthesis(xi)) = l2_inner(analysis(f), xi)`` for all
    ``f``; for real node functions this is the plain weighted sum
    ``sum_i xi_i omega_{x_i} mu_i`` in coordinates.
    """
    xi = as_complex_vector(xi, "xi")
    if xi.size != m.n_nodes:
        raise DimMismatch(f"length {xi.size} does not match {m.n_nodes} nodes")
    return synthesis_matrix(m) @ xi


def frame_matrix(m: SampledMap) -> np.ndarray:
    """Frame operator ``synthesis o analysis`` on coordinates; Hermitian PSD."""
    return synthesis_matrix(m) @ m.table


def gram_matrix(m: SampledMap) -> np.ndarray:
    """Sqrt-weighted Gram matrix of the rows; Hermitian PSD.

    Entry (i, j) is the Hilbert pairing of row j against row i scaled
    by ``sqrt(mu_i mu_j)``; the nonzero spectrum coincides with that of
    the frame operator.
    """
    root = np.sqrt(m.ms.weights)
    return root[:, None] * (m.table.conj() @ m.table.T) * root[None, :]


def is_total(m: SampledMap, tol: float = linalg.DEFAULT_RANK_TOL) -> bool:
    """Whether only the zero vector has vanishing analysis image.

    A rank decision: true iff the table has full column rank at
    relative singular-value threshold ``tol``.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    if m.n_nodes < m.dim:
        return False
    sigma = linalg.singular_values(m.table)
    return bool(sigma[0] > 0.0 and sigma[m.dim - 1] > tol * sigma[0])


def is_mu_independent(m: SampledMap, tol: float = linalg.DEFAULT_RANK_TOL) -> bool:
    """Whether the synthesis operator has trivial kernel on node space.

    True iff no nonzero node function combines the rows to the zero
    functional, i.e. the synthesis matrix has full column rank at
    relative threshold ``tol``. Impossible when there are more nodes
    than coordinates.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    if m.dim < m.n_nodes:
        return False
    sigma = linalg.singular_values(synthesis_matrix(m))
    return bool(sigma[0] > 0.0 and sigma[m.n_nodes - 1] > tol * sigma[0])


def rotate_coordinates(m: SampledMap, u) -> SampledMap:
    """Re-express the map in rotated test-space coordinates ``f -> u f``.

    Analysis in the new coordinates composes with ``u``, so the table
    maps to ``table @ u``. Frame bounds and Gram spectra are invariant
    when ``u`` is unitary.
    """
    u = as_complex_matrix(u, "u")
    if u.shape != (m.dim, m.dim):
        raise DimMismatch(f"rotation shape {u.shape} does not match dim {m.dim}")
    return SampledMap(m.table @ u, m.ms, m.triple)


def scale(m: SampledMap, c: float) -> SampledMap:
    """Multiply every table entry by a real factor ``c``."""
    return SampledMap(m.table * c, m.ms, m.triple)
