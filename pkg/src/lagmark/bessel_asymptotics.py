"""Bessel J evaluation, first zeros, and the large-degree constant limit.

The Markov constant grows linearly in the degree; the limit of c_n/n is the
reciprocal of the first positive zero of J_nu with nu = (alpha-1)/2.  The
ascending series is the only evaluation path, but its terms reach e^x-scale
magnitude while the value stays O(1), so the summation is carried in
extended precision with working digits proportional to x (plain float64
cannot deliver the promised tolerances beyond x around 20).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

import mpmath as mp

from .gamma_kernel import as_alpha
from .spectral import markov_constant

__all__ = [
    "AsymptoticBounds",
    "BesselZero",
    "alpha_star",
    "asymptotic_constant",
    "bessel_j",
    "cor14_report",
    "estimate_c_numeric",
    "first_positive_zero",
]


@dataclass(frozen=True)
class BesselZero:
    """First positive zero of J_nu, with |J_nu(value)| as the residual."""

    nu: float
    value: float
    residual: float


def bessel_j(nu: float, x: float) -> float:
    """J_nu(x) by the ascending series, truncated at 1e-18 relative terms.

    Domain guards: nu > -1 and 0 < x <= 100.  The alternating terms are
    generated by the exact ratio recurrence and summed with enough extra
    digits to absorb the cancellation, so the float64 result is accurate to
    a few ulps throughout the guarded domain.
    """
    nu = float(nu)
    x = float(x)
    if not nu > -1.0:
        raise ValueError(f"series requires nu > -1, got {nu}")
    if not 0.0 < x <= 100.0:
        raise ValueError(f"series guarded to 0 < x <= 100, got {x}")
    dps = 30 + int(0.5 * x)
    with mp.workdps(dps):
        half = mp.mpf(x) / 2
        term = mp.power(half, nu) / mp.gamma(nu + 1)
        total = mp.mpf(0)
        biggest = abs(term)
        cutoff = mp.mpf("1e-18")
        for m in range(1, 700):
            total += term
            term *= -(half * half) / (m * (nu + m))
            magnitude = abs(term)
            if magnitude > biggest:
                biggest = magnitude
            if magnitude <= cutoff * abs(total) and magnitude <= cutoff * biggest:
                return float(total)
    raise RuntimeError(f"series failed to converge for nu={nu}, x={x}")  # pragma: no cover


def first_positive_zero(nu: float) -> BesselZero:
    """Locate the smallest positive zero by an upward 0.1-step scan plus bisection.

    Certified for nu >= -1/2: there J_nu is positive on (0, max(0.1, nu)],
    so the scan start cannot skip the zero.  The bracket is bisected down to
    a width of 1e-13.
    """
    nu = float(nu)
    if nu < -0.5:
        raise ValueError(f"zero finder certified for nu >= -1/2 only, got {nu}")
    step = 0.1
    x0 = max(0.1, nu)
    f0 = bessel_j(nu, x0)
    while True:
        x1 = x0 + step
        if x1 > 100.0:
            raise RuntimeError(f"no sign change of J_{nu} located below x = 100")
        f1 = bessel_j(nu, x1)
        if (f0 > 0.0) != (f1 > 0.0) or f1 == 0.0:
            break
        x0, f0 = x1, f1
    lo, flo, hi = x0, f0, x1
    while hi - lo > 1e-13:
        mid = 0.5 * (lo + hi)
        fmid = bessel_j(nu, mid)
        if fmid == 0.0:
            lo = hi = mid
            break
        if (fmid > 0.0) == (flo > 0.0):
            lo, flo = mid, fmid
        else:
            hi = mid
    zero = 0.5 * (lo + hi)
    return BesselZero(nu=nu, value=zero, residual=abs(bessel_j(nu, zero)))


def asymptotic_constant(alpha) -> float:
    """Limit of c_n(alpha)/n as n grows: 1 / (first zero of J_((alpha-1)/2)).

    Restricted to alpha >= 0 so that nu >= -1/2 stays inside the zero
    finder's certified domain.
    """
    a = as_alpha(alpha)
    if a < 0.0:
        raise ValueError(f"asymptotic constant restricted to alpha >= 0, got {a}")
    return 1.0 / first_positive_zero((a - 1.0) / 2.0).value


@lru_cache(maxsize=1)
def alpha_star() -> float:
    """Crossover exponent where the two closed-form upper branches meet.

    Bisection of (a+1)*((a+3)(a+5))^(1/3) = (a^2+10a+8)/4 on [10, 100],
    resolved to 1e-8; lands near 43.4.
    """

    def gap(a: float) -> float:
        return (a + 1.0) * ((a + 3.0) * (a + 5.0)) ** (1.0 / 3.0) - (a * a + 10.0 * a + 8.0) / 4.0

    lo, hi = 10.0, 100.0
    if not (gap(lo) > 0.0 > gap(hi)):
        raise RuntimeError("crossover bracket [10, 100] does not straddle a root")
    while hi - lo > 1e-8:
        mid = 0.5 * (lo + hi)
        if gap(mid) > 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


class AsymptoticBounds(NamedTuple):
    lower: float
    upper: float
    ratio: float


def cor14_report(alpha) -> AsymptoticBounds:
    """Closed-form bracket for the squared asymptotic constant.

    lower = 2/((a+1)(a+5)); the upper branch switches at alpha_star from
    1/((a+1)*cbrt((a+3)(a+5))) to 4/(a^2+10a+8).  The ratio field is
    sqrt(upper/lower), i.e. the ratio of the implied bounds on c itself,
    and stays below sqrt(2) for every admissible alpha.
    """
    a = as_alpha(alpha)
    lower = 2.0 / ((a + 1.0) * (a + 5.0))
    if a <= alpha_star():
        upper = 1.0 / ((a + 1.0) * ((a + 3.0) * (a + 5.0)) ** (1.0 / 3.0))
    else:
        upper = 4.0 / (a * a + 10.0 * a + 8.0)
    return AsymptoticBounds(lower=lower, upper=upper, ratio=math.sqrt(upper / lower))


def estimate_c_numeric(alpha, n_list, tol: float = 1e-12) -> float:
    """Extrapolate c_n/n to its limit from eigenvalue solves.

    Assumes c_n/n = c + a/n + O(1/n^2) and removes the 1/n term with one
    Richardson step per consecutive pair of degrees; the estimate from the
    two largest degrees is returned.
    """
    a = as_alpha(alpha)
    degrees = [int(v) for v in n_list]
    if len(degrees) < 3:
        raise ValueError("need at least 3 degrees to extrapolate")
    if any(m >= k for m, k in zip(degrees, degrees[1:])):
        raise ValueError("degrees must be strictly increasing")
    if degrees[0] < 1 or degrees[-1] > 4000:
        raise ValueError("degrees must lie in [1, 4000]")
    ratios = [markov_constant(n, a, tol=tol) / n for n in degrees]
    estimate = math.nan
    for (n1, r1), (n2, r2) in zip(zip(degrees, ratios), zip(degrees[1:], ratios[1:])):
        estimate = (n2 * r2 - n1 * r1) / (n2 - n1)
    return float(estimate)
