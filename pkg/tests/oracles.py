"""Independent brute-force oracles, kept free of the package's own solvers.

Everything here goes through numpy.linalg (LAPACK) or direct
enumeration, so agreement with the package is a genuine cross-check of
two unrelated code paths.
"""

import numpy as np


def oracle_eigvalsh(a):
    return np.linalg.eigvalsh(a)


def oracle_svdvals(a):
    return np.linalg.svd(a, compute_uv=False)


def oracle_rank(a, rank_tol=1e-10):
    sigma = oracle_svdvals(a)
    if sigma.size == 0 or sigma[0] == 0.0:
        return 0
    return int(np.sum(sigma > rank_tol * sigma[0]))


def char_poly_roots(a):
    """Eigenvalues of a 2x2 or 3x3 matrix from its characteristic polynomial.

    Coefficients come from traces and minors, roots from numpy's
    companion-matrix root finder; no eigensolver involved on the
    package side of the comparison.
    """
    a = np.asarray(a, dtype=complex)
    n = a.shape[0]
    if n == 2:
        coeffs = [1.0, -np.trace(a), np.linalg.det(a)]
    elif n == 3:
        minors = sum(
            a[i, i] * a[j, j] - a[i, j] * a[j, i]
            for i in range(3)
            for j in range(i + 1, 3)
        )
        coeffs = [1.0, -np.trace(a), minors, -np.linalg.det(a)]
    else:
        raise ValueError("only dims 2 and 3 supported")
    return np.sort(np.roots(coeffs).real)


def truncated_solve(table, h, rank_tol=1e-10):
    """Minimum-norm least-squares solution with the same truncation rule."""
    u, sigma, vh = np.linalg.svd(table, full_matrices=False)
    if sigma.size == 0 or sigma[0] == 0.0:
        return np.zeros(table.shape[1], dtype=complex)
    keep = sigma > rank_tol * sigma[0]
    inv = np.zeros_like(sigma)
    inv[keep] = 1.0 / sigma[keep]
    return vh.conj().T @ (inv * (u.conj().T @ h))


def weighted_residual(table, weights, f, h):
    r = table @ f - h
    return float(np.sqrt(np.sum(np.abs(r) ** 2 * weights).real))


def oracle_moment_solvable(table, weights, h, rank_tol=1e-10, tol=1e-8):
    f = truncated_solve(table, h, rank_tol)
    return weighted_residual(table, weights, f, h) < tol


def oracle_rf_holds(table, weights, rank_tol=1e-10):
    """Lower-bound certificate decided by LAPACK singular values.

    The weighted synthesis map over node space has trivial kernel iff
    the sqrt-weighted analysis matrix has full row rank.
    """
    weighted = np.sqrt(weights)[:, None] * table
    sigma = oracle_svdvals(weighted.conj().T)
    n_nodes = table.shape[0]
    if table.shape[1] < n_nodes:
        return False
    sigma_min = sigma[n_nodes - 1]
    return bool(sigma[0] > 0.0 and sigma_min > rank_tol * sigma[0])


def random_complex(rng, *shape):
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


def random_unitary(rng, n):
    q, r = np.linalg.qr(random_complex(rng, n, n))
    return q * (np.diag(r) / np.abs(np.diag(r)))


def sampled_sup_analysis(table, weights, rng, trials=1000):
    """Sampled sup over unit vectors of the weighted analysis norm squared."""
    d = table.shape[1]
    best = 0.0
    for _ in range(trials):
        f = random_complex(rng, d)
        f /= np.linalg.norm(f)
        val = float(np.sum(np.abs(table @ f) ** 2 * weights).real)
        best = max(best, val)
    return best
