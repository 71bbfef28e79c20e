"""Moment problems, lower-bound certificates, and frame reconstruction.

Given target node values h, the moment problem asks for a coordinate
vector f whose analysis image matches h. Solvability of every
square-summable target is equivalent to a lower bound on the
synthesis operator, i.e. to its invertibility from node space with
continuous inverse; :func:`rf_certificate` computes that bound, the
minimal-radius witness ball realizing the characterizing inequality,
and a probe-based verification, while :func:`rf_equivalence_check`
confirms the equivalence against direct least-squares solving.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg, wmap
from .errors import DimMismatch, NotAFrame, NotTotal
from .gelfand import BoundedSet, TripleSpec, decay_profile
from .linalg import as_complex_vector
from .measure import l2_norm
from .wmap import SampledMap


@dataclass(frozen=True)
class MomentSolution:
    """Minimum-norm least-squares solution of a moment problem.

    ``residual`` is measured in the mu-weighted node norm; ``unique``
    holds exactly when the map is total (trivial kernel);
    ``decay`` carries the seminorm profile of the solution as a
    diagnostic of how well it sits in the model test space.
    """

    f: np.ndarray
    residual: float
    unique: bool
    kernel_dim: int
    solvable: bool
    decay: np.ndarray


@dataclass(frozen=True)
class RFCertificate:
    """Lower-bound certificate for the synthesis operator.

    ``holds`` iff the smallest singular value of the weighted
    synthesis map over node space clears the relative rank threshold;
    in that case ``witness_radius`` is its reciprocal, ``witness_set``
    the Hilbert ball of that radius (the minimal ball for which the
    characterizing sup-inequality holds), and ``max_violation`` the
    worst signed gap observed over random probe functions.
    """

    holds: bool
    sigma_min_synthesis: float
    witness_radius: float | None
    witness_set: BoundedSet | None
    max_violation: float
    probes: int


def solve_moment(
    m: SampledMap,
    h,
    rank_tol: float = linalg.DEFAULT_RANK_TOL,
    residual_tol: float = 1e-8,
) -> MomentSolution:
    """Solve ``analysis(f) = h`` by minimum-norm least squares.

    ``f`` is the pseudo-inverse image of ``h``; among all residual
    minimizers it has the smallest Hilbert norm, and any two exact
    solutions differ by a kernel element annihilating every row.
    A positive residual is a finding, not an error.
    """
    h = as_complex_vector(h, "h")
    if h.size != m.n_nodes:
        raise DimMismatch(f"got {h.size} moments for {m.n_nodes} nodes")
    table = m.table
    f = linalg.pseudo_inverse(table, rank_tol) @ h
    residual = l2_norm(m.ms, table @ f - h)
    kernel_dim = m.dim - linalg.numerical_rank(table, rank_tol)
    return MomentSolution(
        f=f,
        residual=residual,
        unique=kernel_dim == 0,
        kernel_dim=kernel_dim,
        solvable=residual < residual_tol,
        decay=decay_profile(m.triple, f),
    )


def weighted_synthesis_matrix(m: SampledMap) -> np.ndarray:
    """Adjoint of the sqrt-weighted analysis matrix.

    Its singular values over node space are the square roots of the
    Gram eigenvalues; the smallest one is the lower bound certified by
    :func:`rf_certificate`.
    """
    return wmap.weighted_analysis_matrix(m).conj().T


def rf_certificate(
    m: SampledMap,
    rank_tol: float = linalg.DEFAULT_RANK_TOL,
    probes: int = 100,
    seed: int = 0,
) -> RFCertificate:
    """Certify the lower bound of the synthesis operator over node space.

    When the bound holds, the witness set is the Hilbert ball of
    radius ``1/sigma_min``: for every node function the weighted norm
    is dominated by the sup of the synthesis pairing over that ball,
    and the probe loop verifies the inequality on seeded random
    functions (worst signed gap reported as ``max_violation``).
    """
    if probes < 1:
        raise ValueError("probes must be at least 1")
    sigma = linalg.singular_values(weighted_synthesis_matrix(m))
    sigma_max = float(sigma[0])
    sigma_min = float(sigma[m.n_nodes - 1]) if m.dim >= m.n_nodes else 0.0
    holds = bool(sigma_max > 0.0 and sigma_min > rank_tol * sigma_max)
    if not holds:
        return RFCertificate(False, sigma_min, None, None, 0.0, probes)

    radius = 1.0 / sigma_min
    ball = BoundedSet(order=0, radius=radius)
    rng = np.random.default_rng(seed)
    worst = -np.inf
    for _ in range(probes):
        xi = rng.standard_normal(m.n_nodes) + 1j * rng.standard_normal(m.n_nodes)
        lhs = l2_norm(m.ms, xi)
        rhs = radius * float(np.linalg.norm(wmap.synthesis(m, xi)))
        worst = max(worst, lhs - rhs)
    return RFCertificate(True, sigma_min, radius, ball, float(worst), probes)


def rf_equivalence_check(
    m: SampledMap,
    trials: int = 20,
    tol: float = 1e-8,
    seed: int = 0,
    rank_tol: float = linalg.DEFAULT_RANK_TOL,
) -> bool:
    """Certificate verdict vs direct moment solvability on random targets.

    Returns true when the two sides agree: the lower-bound certificate
    holds if and only if every random target is matched below the
    residual threshold. This is the theorem-level equivalence, exposed
    as a self-test.
    """
    if trials < 1:
        raise ValueError("trials must be at least 1")
    cert = rf_certificate(m, rank_tol=rank_tol, probes=1, seed=seed)
    rng = np.random.default_rng(seed)
    all_solvable = True
    for _ in range(trials):
        h = rng.standard_normal(m.n_nodes) + 1j * rng.standard_normal(m.n_nodes)
        sol = solve_moment(m, h, rank_tol=rank_tol, residual_tol=tol)
        if sol.residual >= tol:
            all_solvable = False
            break
    return cert.holds == all_solvable


def stability_constant(
    m: SampledMap,
    spec: TripleSpec | None = None,
    k: int = 0,
    rank_tol: float = linalg.DEFAULT_RANK_TOL,
) -> float:
    """Minimal C with ``p_k(f) <= C ||analysis(f)||_mu`` for all f.

    Requires a total map; the constant is the top singular value of
    the order-k weight diagonal composed with the pseudo-inverse of
    the weighted analysis matrix. At k = 0 it is exactly the
    reciprocal of the smallest weighted-analysis singular value.
    """
    spec = spec or m.triple
    if spec != m.triple:
        raise DimMismatch("triple spec is not the one bound to the map")
    if not wmap.is_total(m, rank_tol):
        raise NotTotal("stability constant requires a total map")
    pinv = linalg.pseudo_inverse(wmap.weighted_analysis_matrix(m), rank_tol)
    sigma = linalg.singular_values(spec.weights(k)[:, None] * pinv)
    return float(sigma[0])


def _frame_inverse(m: SampledMap, tol: float) -> np.ndarray:
    s = wmap.frame_matrix(m)
    eig = linalg.hermitian_eig(s)
    lam = eig.eigenvalues
    if not (lam[-1] > 0.0 and lam[0] > tol * lam[-1]):
        raise NotAFrame("frame operator is not invertible at this tolerance")
    v = eig.eigenvectors
    return v @ ((1.0 / lam)[:, None] * v.conj().T)


def dual_reconstruct(m: SampledMap, f, tol: float = 1e-10) -> np.ndarray:
    """Round-trip ``f`` through the frame operator and its explicit inverse."""
    f = as_complex_vector(f, "f")
    if f.size != m.dim:
        raise DimMismatch(f"vector length {f.size} does not match dim {m.dim}")
    s_inv = _frame_inverse(m, tol)
    return s_inv @ (wmap.frame_matrix(m) @ f)


def canonical_dual(m: SampledMap, tol: float = 1e-10) -> SampledMap:
    """Dual system: every row pushed through the inverse frame operator.

    Analysis against the dual table gives the canonical coefficients:
    synthesizing them with the original map reproduces the input, so
    the composition ``synthesis o dual-analysis`` is the identity.
    """
    s_inv = _frame_inverse(m, tol)
    return SampledMap(m.table @ s_inv, m.ms, m.triple)
