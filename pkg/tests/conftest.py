"""Shared independent oracles for the test suite.

These recompute target quantities by routes disjoint from the library
implementation (characteristic-polynomial bisection instead of power
iteration, brute-force partial sums instead of the extended-precision
series), so agreement is evidence rather than tautology.
"""

import math

import numpy as np


def charpoly_mu_max(entries: np.ndarray) -> float:
    """Largest eigenvalue as the largest root of det(mu I - A).

    Scans downward from above the row-sum bound until the determinant sign
    flips, then bisects.  Only intended for small matrices (n <= 8), where
    the top spectral gap is far wider than the scan step.
    """
    n = entries.shape[0]
    eye = np.eye(n)

    def charpoly(mu: float) -> float:
        return float(np.linalg.det(mu * eye - entries))

    hi = float(entries.sum(axis=1).max()) + 1.0
    floor = float(entries.diagonal().max())
    assert charpoly(hi) > 0.0
    step = (hi - floor) / 4096.0
    mu = hi
    while charpoly(mu - step) > 0.0:
        mu -= step
        assert mu > floor - step, "scan passed the diagonal floor without a sign change"
    lo, hi = mu - step, mu
    while hi - lo > 1e-13 * hi:
        mid = 0.5 * (lo + hi)
        if charpoly(mid) > 0.0:
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)


def bessel_series_f64(nu: float, x: float, terms: int = 80) -> float:
    """Plain float64 partial sums of the ascending series; accurate for small x."""
    half = x / 2.0
    term = half**nu / math.gamma(nu + 1.0)
    total = 0.0
    for m in range(terms):
        total += term
        term *= -(half * half) / ((m + 1.0) * (nu + m + 1.0))
    return total
