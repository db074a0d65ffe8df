"""Dense matrices whose largest eigenvalue is the squared Markov constant.

The n x n upper triangular factor C has entries beta_i/beta_{k+1} for
i <= k.  In the symmetric positive definite product A = C^T C the diagonal
collapses to k/(alpha+1) and every off-diagonal entry is a diagonal value
scaled by a ratio of norm constants, so A is assembled directly in O(n^2);
the explicit matrix product is kept only as a test oracle.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass

import numpy as np

from .gamma_kernel import as_alpha

__all__ = [
    "MarkovMatrix",
    "TriangularFactor",
    "build_a",
    "build_c_factor",
    "dump_matrix_csv",
    "frobenius_sq",
    "inf_norm",
    "trace",
]


@dataclass(frozen=True)
class TriangularFactor:
    """Upper triangular factor; entries are zero below the diagonal."""

    n: int
    alpha: float
    entries: np.ndarray


@dataclass(frozen=True)
class MarkovMatrix:
    """Symmetric positive definite matrix with strictly positive entries."""

    n: int
    alpha: float
    entries: np.ndarray


def _log_beta(count: int, alpha: float) -> np.ndarray:
    # ln(beta_m/beta_1) for m = 1..count at index m-1; cumulative form of the
    # telescoping steps beta_{m+1}/beta_m = sqrt((m+alpha)/m)
    nu = np.arange(1, count, dtype=float)
    return np.concatenate(([0.0], 0.5 * np.cumsum(np.log((nu + alpha) / nu))))


def build_c_factor(n: int, alpha) -> TriangularFactor:
    """Factor with entry (i, k) = beta_i/beta_{k+1} for 1 <= i <= k <= n."""
    a = as_alpha(alpha)
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    lb = _log_beta(n + 1, a)
    c = np.exp(lb[:n, None] - lb[None, 1:])
    return TriangularFactor(n=n, alpha=a, entries=np.triu(c))


def build_a(n: int, alpha) -> MarkovMatrix:
    """Assemble the symmetric matrix from its simplified entry formulas.

    Diagonal entry k equals k/(alpha+1); entry (i, k) with i < k is the i-th
    diagonal value times beta_{i+1}/beta_{k+1}, mirrored below the diagonal.
    """
    a = as_alpha(alpha)
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    lb = _log_beta(n + 1, a)[1:]  # ln beta_{m+1} (relative), m = 1..n
    mat = np.exp(lb[:, None] - lb[None, :])
    mat *= (np.arange(1, n + 1, dtype=float) / (a + 1.0))[:, None]
    for r in range(1, n):  # mirror the upper triangle; keeps symmetry exact
        mat[r, :r] = mat[:r, r]
    return MarkovMatrix(n=n, alpha=a, entries=mat)


def trace(matrix: MarkovMatrix) -> float:
    """Sum of the diagonal; equals n(n+1)/(2(alpha+1)) up to roundoff."""
    return float(np.trace(matrix.entries))


def inf_norm(matrix: MarkovMatrix) -> float:
    """Maximum row sum; all entries are positive, so no absolute values."""
    return float(matrix.entries.sum(axis=1).max())


def frobenius_sq(matrix: MarkovMatrix) -> float:
    """Sum of squared entries (the squared Frobenius norm)."""
    e = matrix.entries
    return float((e * e).sum())


def dump_matrix_csv(matrix: MarkovMatrix, stream) -> None:
    """Write ``row,col,value`` records, 1-based and row-major, 17 significant digits."""
    writer = csv.writer(stream)
    writer.writerow(["row", "col", "value"])
    for r, row in enumerate(matrix.entries, start=1):
        for c, value in enumerate(row, start=1):
            writer.writerow([r, c, f"{value:.17g}"])
