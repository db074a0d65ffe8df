"""Normalization constants and Gamma-ratio estimates for the Laguerre weight.

The weight t**alpha * exp(-t) on (0, inf) is integrable for alpha > -1.  Its
orthogonal polynomials have squared norms Gamma(m+alpha)/Gamma(m), indexed
from m = 1.  Everything here is kept in log scale or in telescoping-product
form so that large indices and large alpha stay far away from overflow.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import gammaln

__all__ = [
    "AlphaParam",
    "BetaTable",
    "as_alpha",
    "beta_ratio",
    "lemma31_margin",
    "log_beta_sq",
    "prop32_margin",
]


@dataclass(frozen=True)
class AlphaParam:
    """Exponent of the Laguerre weight; must satisfy value > -1."""

    value: float

    def __post_init__(self):
        v = float(self.value)
        if not math.isfinite(v) or not v > -1.0:
            raise ValueError(f"alpha must be a finite real > -1, got {self.value!r}")
        object.__setattr__(self, "value", v)


def as_alpha(alpha) -> float:
    """Accept an AlphaParam or a bare number; validate and return the float."""
    if isinstance(alpha, AlphaParam):
        return alpha.value
    return AlphaParam(float(alpha)).value


def log_beta_sq(m: int, alpha) -> float:
    """ln of the m-th squared norm constant: lgamma(m+alpha) - lgamma(m).

    With this indexing the polynomial of degree m has squared norm
    exp(log_beta_sq(m+1)).
    """
    a = as_alpha(alpha)
    if m < 1:
        raise ValueError(f"index m must be >= 1, got {m}")
    return float(gammaln(m + a) - gammaln(m))


def beta_ratio(i: int, k: int, alpha) -> float:
    """Ratio of norm constants beta_i/beta_k in (0, 1], for 1 <= i <= k.

    Evaluated as the telescoping product prod(sqrt(nu/(nu+alpha))) over
    nu = i..k-1, which never forms a large Gamma value; equals exactly 1
    for i = k (empty product).
    """
    a = as_alpha(alpha)
    if i < 1 or k < i:
        raise ValueError(f"need 1 <= i <= k, got i={i}, k={k}")
    if i == k:
        return 1.0
    nu = np.arange(i, k, dtype=float)
    return float(np.prod(np.sqrt(nu / (nu + a))))


def _pair_indices(i, k):
    # validated 1-based index pairs with i < k, broadcast to a common shape;
    # also reports whether the inputs were scalars
    i_in = np.asarray(i)
    k_in = np.asarray(k)
    scalar = i_in.ndim == 0 and k_in.ndim == 0
    ii, kk = np.broadcast_arrays(np.atleast_1d(i_in).astype(np.int64), np.atleast_1d(k_in).astype(np.int64))
    if ii.size == 0 or ii.min() < 1 or np.any(ii >= kk):
        raise ValueError("need 1 <= i < k")
    return ii, kk, scalar


def _gap_cumsum(gap_terms: np.ndarray) -> np.ndarray:
    # cum[j] = sum of the first j per-step gaps, with cum[0] = 0
    return np.concatenate(([0.0], np.cumsum(gap_terms)))


def lemma31_margin(i, k, alpha):
    """Signed margin RHS - LHS of the one-sided Gamma-ratio bound

        (Gamma(i+a)/Gamma(i)) / (Gamma(k+a)/Gamma(k))
            <= ((i + (a-1)/2) / (k + (a-1)/2))**a

    valid for alpha >= 1 and i < k.  Nonnegative return means the bound
    holds.  Both sides telescope over single index steps, so the margin is
    computed from the accumulated per-step log gap; at alpha = 1 the gap
    vanishes identically and the margin is an exact zero.  Accepts scalars
    or broadcastable integer arrays for i and k.
    """
    a = as_alpha(alpha)
    if a < 1.0:
        raise ValueError(f"bound requires alpha >= 1 (got {a}); use prop32_margin for other ranges")
    ii, kk, scalar = _pair_indices(i, k)
    h = (a - 1.0) / 2.0
    nu = np.arange(1, int(kk.max()), dtype=float)
    cum = _gap_cumsum(np.log(nu / (nu + a)) - a * np.log((nu + h) / (nu + 1.0 + h)))
    log_lhs_over_rhs = cum[kk - 1] - cum[ii - 1]
    rhs = ((ii + h) / (kk + h)) ** a
    out = -rhs * np.expm1(log_lhs_over_rhs)
    return float(out[0]) if scalar else out


def prop32_margin(i, k, alpha):
    """Two signed margins (outer bound - ratio, ratio - inner bound) for the
    two-sided estimate of the Gamma ratio by (i/k)**a and
    ((i + (a-1)/2)/(k + (a-1)/2))**a.

    For alpha in [0, 1] the ordering of the two power expressions reverses,
    so the roles of outer and inner bound swap accordingly.  Both margins
    nonnegative means the estimate holds.  Same accumulated log-gap scheme
    as lemma31_margin, so the degenerate cases alpha = 0 and alpha = 1 give
    exact zeros.  Accepts scalars or arrays.
    """
    a = as_alpha(alpha)
    ii, kk, scalar = _pair_indices(i, k)
    h = (a - 1.0) / 2.0
    nu = np.arange(1, int(kk.max()), dtype=float)
    log_ratio_step = np.log(nu / (nu + a))
    cum_plain = _gap_cumsum(log_ratio_step - a * np.log(nu / (nu + 1.0)))
    cum_shift = _gap_cumsum(log_ratio_step - a * np.log((nu + h) / (nu + 1.0 + h)))
    s_plain = cum_plain[kk - 1] - cum_plain[ii - 1]  # ln(ratio) - ln(plain power)
    s_shift = cum_shift[kk - 1] - cum_shift[ii - 1]  # ln(ratio) - ln(shifted power)
    plain = (ii / kk.astype(float)) ** a
    shifted = ((ii + h) / (kk + h)) ** a
    if 0.0 <= a <= 1.0:
        outer = -plain * np.expm1(s_plain)
        inner = shifted * np.expm1(s_shift)
    else:
        outer = -shifted * np.expm1(s_shift)
        inner = plain * np.expm1(s_plain)
    if scalar:
        return float(outer[0]), float(inner[0])
    return outer, inner


@dataclass(frozen=True)
class BetaTable:
    """Log-scale table of squared norm constants.

    Entry m-1 of ``log_beta_sq`` holds ln(beta_m**2) for 1 <= m <= size,
    where size = n+1 covers all constants needed at degree n.
    """

    alpha: float
    size: int
    log_beta_sq: np.ndarray

    @classmethod
    def build(cls, n: int, alpha) -> "BetaTable":
        a = as_alpha(alpha)
        if n < 1:
            raise ValueError(f"n must be >= 1, got {n}")
        m = np.arange(1, n + 2, dtype=float)
        return cls(alpha=a, size=n + 1, log_beta_sq=gammaln(m + a) - gammaln(m))
