"""Dense complex linear algebra kernel.

Self-contained implementations of the conjugate-transpose involution,
Hermitian eigendecomposition (cyclic Jacobi), singular value
decomposition (normal-matrix route), and the Moore-Penrose
pseudo-inverse. Everything operates on plain ``numpy`` complex arrays
and is pure: inputs are never mutated.

The Jacobi route is unconditionally stable for Hermitian input and
keeps the package free of LAPACK bindings; the normal-matrix SVD is
adequate for the desk-scale conditioning this package targets
(condition numbers well below 1e7, dimensions below ~500).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimMismatch, NoConvergence, NotHermitian

#: Relative off-diagonal Frobenius mass at which the Jacobi sweep stops.
JACOBI_OFF_TOL = 1e-13
#: Hard cap on Jacobi sweeps before declaring failure.
JACOBI_MAX_SWEEPS = 60
#: Default relative cutoff below which singular values count as zero.
DEFAULT_RANK_TOL = 1e-10


@dataclass(frozen=True)
class HermitianEigenResult:
    """Full spectrum of a Hermitian matrix.

    ``eigenvalues`` is real and ascending; the columns of
    ``eigenvectors`` form the matching unitary eigenbasis.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


@dataclass(frozen=True)
class SvdResult:
    """Full singular value decomposition ``A = U diag(s) V^dagger``.

    ``singular_values`` is nonnegative and descending with length
    ``min(rows, cols)``; ``left_vectors`` and ``right_vectors`` are
    square unitary matrices.
    """

    singular_values: np.ndarray
    left_vectors: np.ndarray
    right_vectors: np.ndarray


def as_complex_matrix(a, name: str = "matrix") -> np.ndarray:
    """Coerce to a 2-d complex array, rejecting NaN/Inf entries."""
    out = np.asarray(a, dtype=complex)
    if out.ndim != 2:
        raise DimMismatch(f"{name} must be 2-dimensional, got shape {out.shape}")
    if out.size and not np.all(np.isfinite(out.real) & np.isfinite(out.imag)):
        raise ValueError(f"{name} contains non-finite entries")
    return out


def as_complex_vector(a, name: str = "vector") -> np.ndarray:
    """Coerce to a 1-d complex array, rejecting NaN/Inf entries."""
    out = np.asarray(a, dtype=complex).reshape(-1)
    if out.size and not np.all(np.isfinite(out.real) & np.isfinite(out.imag)):
        raise ValueError(f"{name} contains non-finite entries")
    return out


def max_abs(a) -> float:
    """Largest entry magnitude; 0 for empty input."""
    a = np.asarray(a)
    return float(np.abs(a).max()) if a.size else 0.0


def dagger(a) -> np.ndarray:
    """Conjugate transpose, the involution pairing operators with their adjoints."""
    return as_complex_matrix(a, "dagger input").conj().T.copy()


def _off_diagonal_norm(a: np.ndarray) -> float:
    off = a - np.diag(np.diag(a))
    return float(np.linalg.norm(off))


def hermitian_eig(a) -> HermitianEigenResult:
    """Eigendecompose a Hermitian matrix by cyclic Jacobi rotations.

    Sweeps row-cyclically over all off-diagonal pivots, annihilating
    each with a unitary plane rotation, until the off-diagonal
    Frobenius mass drops below ``JACOBI_OFF_TOL`` times the Frobenius
    norm of the input (or the input is diagonal). Raises
    :class:`NoConvergence` after ``JACOBI_MAX_SWEEPS`` sweeps.

    Returns eigenvalues ascending with a matching unitary eigenbasis
    in the columns of ``eigenvectors``.
    """
    a = as_complex_matrix(a, "hermitian_eig input")
    n, m = a.shape
    if n != m:
        raise DimMismatch(f"hermitian_eig needs a square matrix, got {a.shape}")
    scale = max_abs(a)
    if max_abs(a - a.conj().T) > 1e-12 * (1.0 + scale):
        raise NotHermitian("matrix is not Hermitian within 1e-12 relative tolerance")

    # Exact symmetrization removes representation roundoff up front.
    work = (a + a.conj().T) / 2.0
    q = np.eye(n, dtype=complex)
    norm_f = float(np.linalg.norm(work))
    if norm_f == 0.0 or n == 1:
        lam = np.diag(work).real.copy()
        order = np.argsort(lam, kind="stable")
        return HermitianEigenResult(lam[order], q[:, order])

    off_target = JACOBI_OFF_TOL * norm_f
    # Pivots below this cannot collectively push the off-mass over target,
    # so they are skipped instead of rotated.
    skip = off_target / (np.sqrt(2.0) * n)

    converged = False
    for _ in range(JACOBI_MAX_SWEEPS):
        if _off_diagonal_norm(work) < off_target:
            converged = True
            break
        for p in range(n - 1):
            for q_idx in range(p + 1, n):
                apq = work[p, q_idx]
                r = abs(apq)
                if r <= skip:
                    continue
                phase = apq / r
                app = work[p, p].real
                aqq = work[q_idx, q_idx].real
                tau = (aqq - app) / (2.0 * r)
                if tau >= 0.0:
                    t = 1.0 / (tau + np.sqrt(1.0 + tau * tau))
                else:
                    t = 1.0 / (tau - np.sqrt(1.0 + tau * tau))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                # Plane rotation diag(1, conj(phase)) * [[c, s], [-s, c]]:
                # the phase factor makes the pivot real, the real rotation
                # annihilates it.
                v = np.array(
                    [[c, s], [-s * phase.conjugate(), c * phase.conjugate()]],
                    dtype=complex,
                )
                work[:, [p, q_idx]] = work[:, [p, q_idx]] @ v
                work[[p, q_idx], :] = v.conj().T @ work[[p, q_idx], :]
                work[p, q_idx] = 0.0
                work[q_idx, p] = 0.0
                q[:, [p, q_idx]] = q[:, [p, q_idx]] @ v
    else:
        converged = _off_diagonal_norm(work) < off_target
    if not converged:
        raise NoConvergence(
            f"Jacobi sweep limit ({JACOBI_MAX_SWEEPS}) reached before convergence"
        )

    lam = np.diag(work).real.copy()
    order = np.argsort(lam, kind="stable")
    return HermitianEigenResult(lam[order], q[:, order])


def _orthonormalize_columns(u: np.ndarray) -> np.ndarray:
    """Modified Gram-Schmidt with re-orthogonalization, column order kept."""
    out = u.copy()
    n_cols = out.shape[1]
    for j in range(n_cols):
        for _ in range(2):
            for i in range(j):
                out[:, j] -= (out[:, i].conj() @ out[:, j]) * out[:, i]
        nrm = np.linalg.norm(out[:, j])
        if nrm > 0:
            out[:, j] /= nrm
    return out


def _thin_svd_tall(a: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Thin SVD of a matrix with at least as many rows as columns.

    Eigendecomposes the cols-by-cols normal matrix and lifts the right
    vectors through the matrix. Each singular value is taken as the
    norm of the lifted image rather than the eigenvalue square root:
    forming the normal matrix floors eigenvalue accuracy at machine
    epsilon times its norm, which the square root would inflate to
    ~1e-8 relative, while the image norm resolves genuinely null
    directions down to roundoff. Left columns whose singular value is
    negligible stay zero (callers truncate or complete them).
    """
    n, d = a.shape
    eig = hermitian_eig(a.conj().T @ a)
    order = np.argsort(eig.eigenvalues, kind="stable")[::-1]
    v = eig.eigenvectors[:, order]
    images = a @ v
    sigma = np.linalg.norm(images, axis=0)
    # Image norms may locally disagree with eigenvalue order; re-sort.
    order = np.argsort(-sigma, kind="stable")
    sigma = sigma[order]
    v = v[:, order]
    images = images[:, order]
    u = np.zeros((n, d), dtype=complex)
    cut = sigma[0] * 1e-13 if d else 0.0
    for i in range(d):
        if sigma[i] > cut:
            u[:, i] = images[:, i] / sigma[i]
    return sigma, u, v


def _complete_square(thin: np.ndarray, normal: np.ndarray) -> np.ndarray:
    """Grow image-lifted columns to a square unitary factor.

    The nonzero columns of ``thin`` form an orthonormal-to-roundoff
    prefix; eigenvectors of the complementary normal matrix (null-ish
    directions first, ascending eigenvalue order) fill the remaining
    slots, canonical units as a fallback, and a Gram-Schmidt polish
    certifies unitarity.
    """
    size = thin.shape[0]
    basis = []
    for i in range(thin.shape[1]):
        if np.linalg.norm(thin[:, i]) > 0.5:
            basis.append(thin[:, i].copy())
        else:
            break
    if len(basis) < size:
        eig = hermitian_eig(normal)
        candidates = [eig.eigenvectors[:, j] for j in range(size)]
        candidates.extend(np.eye(size, dtype=complex)[:, j] for j in range(size))
        for cand in candidates:
            if len(basis) == size:
                break
            w = cand.astype(complex).copy()
            for _ in range(2):
                for b in basis:
                    w -= (b.conj() @ w) * b
            nrm = np.linalg.norm(w)
            if nrm > 0.1:
                basis.append(w / nrm)
        if len(basis) != size:  # pragma: no cover - candidates always span
            raise NoConvergence("could not complete a singular basis")
    return _orthonormalize_columns(np.column_stack(basis))


def svd(a) -> SvdResult:
    """Singular value decomposition via the Hermitian normal matrices.

    The smaller of ``A^dagger A`` and ``A A^dagger`` supplies one
    square factor directly from its eigenbasis; the other side starts
    from the normalized images of those eigenvectors and is completed
    to a unitary basis with null-space eigenvectors of the
    complementary normal matrix.
    """
    a = as_complex_matrix(a, "svd input")
    n, d = a.shape
    k = min(n, d)
    if d <= n:
        sigma, u_thin, v = _thin_svd_tall(a)
        u = _complete_square(u_thin, a @ a.conj().T)
        return SvdResult(sigma[:k], u, v)
    sigma, v_thin, u = _thin_svd_tall(a.conj().T)
    v = _complete_square(v_thin, a.conj().T @ a)
    return SvdResult(sigma[:k], u, v)


def singular_values(a) -> np.ndarray:
    """Descending singular values, from the smaller normal matrix only.

    Values are image norms of the normal-matrix eigenvectors (see
    :func:`_thin_svd_tall` for why that beats the eigenvalue square
    root near zero).
    """
    a = as_complex_matrix(a, "singular_values input")
    n, d = a.shape
    if d <= n:
        vectors = hermitian_eig(a.conj().T @ a).eigenvectors
        sigma = np.linalg.norm(a @ vectors, axis=0)
    else:
        vectors = hermitian_eig(a @ a.conj().T).eigenvectors
        sigma = np.linalg.norm(a.conj().T @ vectors, axis=0)
    return np.sort(sigma)[::-1].copy()


def pseudo_inverse(a, rank_tol: float = DEFAULT_RANK_TOL) -> np.ndarray:
    """Moore-Penrose inverse, truncating singular values at ``rank_tol``.

    Directions with singular value at most ``rank_tol`` times the
    largest one are treated as null; every downstream invertibility
    decision inherits this threshold.
    """
    if rank_tol <= 0:
        raise ValueError("rank_tol must be positive")
    a = as_complex_matrix(a, "pseudo_inverse input")
    n, d = a.shape
    if d > n:
        # (A^dagger)^+ = (A^+)^dagger, so work on the tall side.
        return pseudo_inverse(a.conj().T, rank_tol).conj().T.copy()
    sigma, u_thin, v = _thin_svd_tall(a)
    if sigma.size == 0 or sigma[0] == 0.0:
        return np.zeros((d, n), dtype=complex)
    keep = sigma > rank_tol * sigma[0]
    inv = np.zeros_like(sigma)
    inv[keep] = 1.0 / sigma[keep]
    return v @ (inv[:, None] * u_thin.conj().T)


def numerical_rank(a, rank_tol: float = DEFAULT_RANK_TOL) -> int:
    """Number of singular values above ``rank_tol`` times the largest."""
    sigma = singular_values(a)
    if sigma.size == 0 or sigma[0] == 0.0:
        return 0
    return int(np.sum(sigma > rank_tol * sigma[0]))
