"""Gauss-Laguerre quadrature and Laguerre-series evaluation.

This is the independent verification channel: a polynomial reconstructed
from a dominant eigenvector is integrated directly against the weight, so
the Rayleigh quotient obtained here never touches the matrix the
eigenvector came from.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass

import numpy as np
from scipy.special import gammaln

from .gamma_kernel import as_alpha
from .spectral import SpectralResult, jacobi_eigh

__all__ = [
    "LaguerreExpansion",
    "QuadratureRule",
    "dump_expansion_csv",
    "expansion_eval",
    "expansion_norm_sq",
    "expansion_weighted_values",
    "extremal_from_eigenvector",
    "gauss_laguerre",
    "laguerre_eval",
    "rayleigh_quotient",
]


@dataclass(frozen=True)
class QuadratureRule:
    """Nodes and weights exact on polynomials of degree <= 2m-1."""

    alpha: float
    m: int
    nodes: np.ndarray
    weights: np.ndarray


def _ortho_weighted_orders(a: float, x: np.ndarray, count: int) -> np.ndarray:
    """Weighted orthonormal values u_k(x) for orders k = 0..count-1.

    u_k is sqrt(w_a(x)) times the orthonormal polynomial of degree k (which
    carries a (-1)^k sign relative to the conventional Laguerre family, as
    its leading coefficient is kept positive).  The values stay O(1) across
    the whole node range and the upward recurrence tracks the dominant
    solution, so plain float64 keeps full relative accuracy even where the
    unweighted polynomials reach e^(x/2) scale.
    """
    x = np.asarray(x, dtype=float)
    out = np.empty((count, x.size))
    u_prev = np.exp(0.5 * (a * np.log(x) - x - gammaln(a + 1.0)))
    out[0] = u_prev
    if count > 1:
        u_cur = (x - (a + 1.0)) * u_prev / math.sqrt(a + 1.0)
        out[1] = u_cur
        for k in range(1, count - 1):
            b_k = math.sqrt(k * (k + a))
            b_next = math.sqrt((k + 1.0) * (k + 1.0 + a))
            u_prev, u_cur = u_cur, ((x - (2.0 * k + a + 1.0)) * u_cur - b_k * u_prev) / b_next
            out[k + 1] = u_cur
    return out


def gauss_laguerre(m: int, alpha) -> QuadratureRule:
    """Quadrature rule from the symmetric tridiagonal recurrence matrix.

    The matrix has diagonal 2j+alpha+1 (j = 0..m-1) and off-diagonal
    sqrt(j(j+alpha)) (j = 1..m-1); its eigenvalues, polished by two Newton
    steps on the weighted orthonormal recurrence, are the nodes.  Weights
    come from the classical derivative identity
    w(x) x / ((m+1)(m+alpha+1) u_{m+1}(x)^2): it is algebraically the
    squared-first-eigenvector-component value, but keeps relative accuracy
    at the extreme nodes where eigenvector components sink below the
    absolute accuracy of any float64 eigensolver.
    """
    a = as_alpha(alpha)
    if not 1 <= m <= 300:
        raise ValueError(f"node count must be in [1, 300], got {m}")
    j = np.arange(m, dtype=float)
    mat = np.diag(2.0 * j + a + 1.0)
    if m > 1:
        sub = np.arange(1, m, dtype=float)
        off = np.sqrt(sub * (sub + a))
        mat += np.diag(off, 1) + np.diag(off, -1)
    nodes, _ = jacobi_eigh(mat)
    b_m = math.sqrt(m * (m + a))
    for _ in range(2):  # Newton polish: nodes become zeros of u_m to machine accuracy
        orders = _ortho_weighted_orders(a, nodes, m + 1)
        u_m = orders[m]
        u_prev = orders[m - 1]
        denominator = m * u_m + b_m * u_prev
        with np.errstate(divide="ignore", invalid="ignore"):
            delta = np.where(denominator != 0.0, nodes * u_m / denominator, 0.0)
        nodes = nodes - delta
    u_top = _ortho_weighted_orders(a, nodes, m + 2)[m + 1]
    with np.errstate(divide="ignore"):
        log_weights = (
            (a + 1.0) * np.log(nodes)
            - nodes
            - math.log((m + 1.0) * (m + 1.0 + a))
            - 2.0 * np.log(np.abs(u_top))
        )
    weights = np.exp(log_weights)
    return QuadratureRule(alpha=a, m=m, nodes=nodes, weights=weights)


def laguerre_eval(m: int, alpha, x):
    """Laguerre polynomial of order m by the forward three-term recurrence.

    Accepts a scalar or an array of evaluation points.
    """
    a = as_alpha(alpha)
    if m < 0:
        raise ValueError(f"order must be >= 0, got {m}")
    x = np.asarray(x, dtype=float)
    prev = np.ones_like(x)
    if m == 0:
        return float(prev) if prev.ndim == 0 else prev
    cur = 1.0 + a - x
    for k in range(1, m):
        prev, cur = cur, ((2.0 * k + 1.0 + a - x) * cur - (k + a) * prev) / (k + 1.0)
    return float(cur) if cur.ndim == 0 else cur


@dataclass(frozen=True)
class LaguerreExpansion:
    """Polynomial sum(coeffs[nu-1] * L_nu, nu = 1..n) with no constant term.

    Dropping the constant loses nothing for extremal polynomials: a constant
    leaves the derivative norm unchanged while enlarging the function norm.
    """

    alpha: float
    coeffs: np.ndarray


def _laguerre_orders(a: float, x: np.ndarray):
    # yields L_0, L_1, L_2, ... at the points x
    prev = np.ones_like(x)
    yield prev
    cur = 1.0 + a - x
    k = 1
    while True:
        yield cur
        prev, cur = cur, ((2.0 * k + 1.0 + a - x) * cur - (k + a) * prev) / (k + 1.0)
        k += 1


def expansion_eval(expansion: LaguerreExpansion, x, derivative: bool = False):
    """Value of the expansion, or of its derivative.

    Differentiation maps order nu at exponent alpha to minus order nu-1 at
    exponent alpha+1, so the derivative is a plain series in the shifted
    basis.
    """
    coeffs = np.asarray(expansion.coeffs, dtype=float)
    x = np.asarray(x, dtype=float)
    acc = np.zeros_like(x)
    if len(coeffs) > 0:
        if derivative:
            orders = _laguerre_orders(expansion.alpha + 1.0, x)
            for nu in range(1, len(coeffs) + 1):
                acc = acc - coeffs[nu - 1] * next(orders)
        else:
            orders = _laguerre_orders(expansion.alpha, x)
            next(orders)  # the expansion starts at order 1
            for nu in range(1, len(coeffs) + 1):
                acc = acc + coeffs[nu - 1] * next(orders)
    return float(acc) if acc.ndim == 0 else acc


def expansion_weighted_values(expansion: LaguerreExpansion, rule: QuadratureRule, derivative: bool = False):
    """sqrt(weight_j) * p(node_j) (or the same for p') at every node.

    The raw basis values near the largest nodes reach e^(x/2) scale while
    the weighted results stay O(1), which is far beyond float64 headroom
    past degree 25 or so.  Everything here is therefore assembled from the
    weighted orthonormal values: the series coefficients become the O(1)
    quantities a_nu * beta_{nu+1}, and the node weights enter through the
    same closed form that produced them, so no oversized intermediate ever
    appears.
    """
    a = expansion.alpha
    coeffs = np.asarray(expansion.coeffs, dtype=float)
    n = len(coeffs)
    x = rule.nodes
    m = rule.m
    if n == 0:
        return np.zeros_like(x)
    order = np.arange(1, n + 1, dtype=float)
    signs = np.where(np.arange(1, n + 1) % 2 == 0, 1.0, -1.0)
    scaled = signs * coeffs * np.exp(0.5 * (gammaln(order + 1.0 + a) - gammaln(order + 1.0)))
    u_top = _ortho_weighted_orders(a, x, m + 2)[m + 1]
    node_scale = np.sqrt(x / ((m + 1.0) * (m + 1.0 + a))) / np.abs(u_top)
    if derivative:
        shifted = _ortho_weighted_orders(a + 1.0, x, n)
        series = (scaled * np.sqrt(order)) @ shifted
        return node_scale / np.sqrt(x) * series
    plain = _ortho_weighted_orders(a, x, n + 1)
    series = scaled @ plain[1:]
    return node_scale * series


def expansion_norm_sq(expansion: LaguerreExpansion) -> float:
    """Squared weighted norm from the coefficients: sum a_nu^2 beta_{nu+1}^2."""
    a = expansion.alpha
    coeffs = np.asarray(expansion.coeffs, dtype=float)
    mplus = np.arange(2, len(coeffs) + 2, dtype=float)
    return float((coeffs**2 * np.exp(gammaln(mplus + a) - gammaln(mplus))).sum())


def rayleigh_quotient(expansion: LaguerreExpansion, rule_size: int | None = None) -> float:
    """Quadrature value of ||p'||^2 / ||p||^2 in the weighted norm.

    The squared polynomial has degree 2n, so the rule must have at least
    n+1 nodes; the default n+2 leaves roundoff headroom.
    """
    n = len(expansion.coeffs)
    if n < 1:
        raise ValueError("expansion has no coefficients")
    if rule_size is None:
        rule_size = n + 2
    if rule_size < n + 1:
        raise ValueError(f"rule_size must be >= {n + 1} for degree-{2 * n} exactness, got {rule_size}")
    rule = gauss_laguerre(rule_size, expansion.alpha)
    values = expansion_weighted_values(expansion, rule)
    derivatives = expansion_weighted_values(expansion, rule, derivative=True)
    denominator = float(values @ values)
    if denominator == 0.0:
        raise ValueError("zero polynomial has no Rayleigh quotient")
    numerator = float(derivatives @ derivatives)
    return numerator / denominator


def extremal_from_eigenvector(result: SpectralResult, alpha) -> LaguerreExpansion:
    """Laguerre coefficients of the extremal polynomial.

    The unit eigenvector entries are divided by the norm constants
    (log-scale division, so large degrees stay finite); the resulting
    expansion has unit weighted norm by construction.
    """
    a = as_alpha(alpha)
    t = np.asarray(result.eigenvector, dtype=float)
    mplus = np.arange(2, len(t) + 2, dtype=float)
    coeffs = t * np.exp(-0.5 * (gammaln(mplus + a) - gammaln(mplus)))
    return LaguerreExpansion(alpha=a, coeffs=coeffs)


def dump_expansion_csv(expansion: LaguerreExpansion, stream) -> None:
    """Write ``nu,coefficient`` records with 17 significant digits."""
    writer = csv.writer(stream)
    writer.writerow(["nu", "coefficient"])
    for nu, coefficient in enumerate(expansion.coeffs, start=1):
        writer.writerow([nu, f"{coefficient:.17g}"])
