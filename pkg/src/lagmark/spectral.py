"""Eigenvalue routines: certified power iteration and a cyclic Jacobi solver.

Power iteration is enough for the dominant eigenvalue because the matrices
here have strictly positive entries and a comfortable spectral gap; the
Jacobi solver supplies full spectra for small sizes (test oracles) and the
eigenvectors needed by the quadrature construction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .gamma_kernel import as_alpha
from .matrix_builder import MarkovMatrix, build_a

__all__ = [
    "ConvergenceError",
    "SpectralResult",
    "full_spectrum",
    "jacobi_eigh",
    "markov_constant",
    "mu_max_power",
]


class ConvergenceError(RuntimeError):
    """An iterative solve did not reach its residual target."""

    def __init__(self, message: str, residual: float = math.nan, iterations: int = 0):
        super().__init__(message)
        self.residual = residual
        self.iterations = iterations


@dataclass(frozen=True)
class SpectralResult:
    """Dominant eigenpair with its certificate.

    The eigenvector has unit Euclidean norm and residual = ||A v - mu v||.
    """

    mu_max: float
    eigenvector: np.ndarray
    residual: float
    iterations: int


def mu_max_power(matrix: MarkovMatrix, tol: float = 1e-12, max_iter: int | None = None) -> SpectralResult:
    """Largest eigenvalue of the positive matrix by power iteration.

    Starts from the normalized all-ones vector: the dominant eigenvector of
    a matrix with positive entries is itself positive, so the overlap is
    nonzero and the run is deterministic.  Converged means
    ||A v - mu v|| <= tol * mu with mu the Rayleigh quotient.
    """
    if tol < 1e-14:
        raise ValueError(f"tol must be >= 1e-14, got {tol}")
    m = matrix.entries
    n = matrix.n
    if max_iter is None:
        max_iter = 200 * n
    if max_iter < 1:
        raise ValueError(f"max_iter must be >= 1, got {max_iter}")
    v = np.full(n, 1.0 / math.sqrt(n))
    mu = 0.0
    residual = math.inf
    for iteration in range(max_iter + 1):
        w = m @ v
        mu = float(v @ w)
        residual = float(np.linalg.norm(w - mu * v))
        if residual <= tol * mu:
            return SpectralResult(mu_max=mu, eigenvector=v, residual=residual, iterations=iteration)
        v = w / np.linalg.norm(w)
    raise ConvergenceError(
        f"power iteration stalled at residual {residual:.3e} after {max_iter} iterations "
        f"(target {tol:.1e} * {mu:.6e})",
        residual=residual,
        iterations=max_iter,
    )


def jacobi_eigh(matrix: np.ndarray, tol: float = 1e-14, max_sweeps: int = 60):
    """Full symmetric eigendecomposition by cyclic Jacobi rotations.

    Returns (eigenvalues ascending, eigenvectors as matching columns).
    Cost is a few O(n^3) sweeps, fine for the moderate sizes used by the
    spectrum checks and the quadrature construction.
    """
    a = np.array(matrix, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("matrix must be square")
    n = a.shape[0]
    vec = np.eye(n)
    if n == 1:
        return a.diagonal().copy(), vec
    fro = float(np.linalg.norm(a))
    if fro == 0.0:
        return np.zeros(n), vec
    off = math.inf
    for sweep in range(max_sweeps + 1):
        # strict upper triangle only: a difference of totals would cancel
        # catastrophically and floor out near sqrt(eps) * fro
        off = math.sqrt(2.0) * float(np.linalg.norm(np.triu(a, 1)))
        if off <= tol * fro:
            order = np.argsort(np.diag(a), kind="stable")
            return np.diag(a)[order].copy(), vec[:, order]
        if sweep == max_sweeps:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                app = a[p, p]
                aqq = a[q, q]
                diff = aqq - app
                if abs(apq) * 1e100 < abs(diff):
                    t = apq / diff  # first-order angle; squaring theta would overflow
                else:
                    theta = 0.5 * diff / apq
                    t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
                    if theta < 0.0:
                        t = -t
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                # closed forms for the rotated 2x2 block kill the roundoff
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                a[p, q] = 0.0
                a[q, p] = 0.0
                vec_p = vec[:, p].copy()
                vec_q = vec[:, q].copy()
                vec[:, p] = c * vec_p - s * vec_q
                vec[:, q] = s * vec_p + c * vec_q
    raise ConvergenceError(f"jacobi rotations stalled at off-diagonal norm {off:.3e}", residual=off)


def full_spectrum(matrix: MarkovMatrix) -> np.ndarray:
    """All eigenvalues in increasing order (guarded to n <= 500 for cost)."""
    if matrix.n > 500:
        raise ValueError(f"full spectrum is limited to n <= 500, got n={matrix.n}")
    values, _ = jacobi_eigh(matrix.entries)
    return values


def markov_constant(n: int, alpha, tol: float = 1e-12) -> float:
    """Best constant c_n(alpha): square root of the dominant eigenvalue."""
    a = as_alpha(alpha)
    result = mu_max_power(build_a(n, a), tol=tol)
    return math.sqrt(result.mu_max)
