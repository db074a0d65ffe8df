"""Grid sweeps that re-check every inequality and identity numerically.

Each suite walks an (n, alpha) grid, skips points outside the statement's
hypotheses (counting them), and records one signed margin per applicable
point.  Margins are normalized by max(1, |bound|) before thresholding so
large-alpha cases cannot hide violations; a margin of at least -1e-12
counts as a pass.  Reports are assembled in (n, alpha) order, so a run is
deterministic given the suite, the grid, and the seed.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass

import numpy as np

from .bounds_catalog import BoundId, charpoly_coeffs, evaluate_bound
from .gamma_kernel import as_alpha, lemma31_margin, prop32_margin
from .matrix_builder import build_a, frobenius_sq, inf_norm, trace
from .spectral import mu_max_power

__all__ = [
    "DEFAULT_ALPHA_VALUES",
    "DEFAULT_N_VALUES",
    "GridSpec",
    "SUITE_NAMES",
    "SweepCase",
    "SweepReport",
    "integral_bracket",
    "run_suite",
    "sweep_to_csv",
    "verify_cor13",
    "verify_integral_lemma",
]

PASS_TOL = 1e-12
DEFAULT_N_VALUES = tuple(range(3, 31))
DEFAULT_ALPHA_VALUES = (-0.9, -0.5, 0.0, 0.5, 1.0, 2.0, 3.0, 5.0, 10.0, 25.0, 50.0, 100.0)


@dataclass(frozen=True)
class GridSpec:
    """Grid of degrees and weight exponents for one check suite."""

    n_values: tuple
    alpha_values: tuple
    suite: str

    def __post_init__(self):
        if not self.n_values or not self.alpha_values:
            raise ValueError("grid must have at least one n and one alpha")
        if any(int(n) < 1 for n in self.n_values):
            raise ValueError("all n values must be >= 1")
        for a in self.alpha_values:
            as_alpha(a)
        object.__setattr__(self, "n_values", tuple(int(n) for n in self.n_values))
        object.__setattr__(self, "alpha_values", tuple(float(a) for a in self.alpha_values))


@dataclass(frozen=True)
class SweepCase:
    n: int
    alpha: float
    margin: float
    passed: bool
    detail: str


@dataclass(frozen=True)
class SweepReport:
    suite: str
    cases: tuple
    worst_margin: float
    all_pass: bool
    skipped: int


def _assemble(suite: str, cases: list, skipped: int) -> SweepReport:
    ordered = tuple(sorted(cases, key=lambda c: (c.n, c.alpha)))
    worst = min((c.margin for c in ordered), default=math.inf)
    return SweepReport(
        suite=suite,
        cases=ordered,
        worst_margin=worst,
        all_pass=all(c.passed for c in ordered),
        skipped=skipped,
    )


def _ineq(margin: float, detail: str):
    return margin, margin >= -PASS_TOL, detail


def _c_sq(n: int, a: float, cache: dict) -> float:
    key = (n, a)
    if key not in cache:
        cache[key] = mu_max_power(build_a(n, a)).mu_max
    return cache[key]


def _pairs(n: int):
    i0, k0 = np.triu_indices(n, k=1)
    return i0 + 1.0, k0 + 1.0


def _suite_lemma31(n, a, cache):
    if a < 1.0 or n < 2:
        return None
    i, k = _pairs(n)
    margins = lemma31_margin(i, k, a)
    # the bound expression is below 1 for i < k, so the natural scale is 1
    j = int(np.argmin(margins))
    return _ineq(float(margins[j]), f"worst pair i={int(i[j])} k={int(k[j])} of {len(i)} pairs")


def _suite_prop32(n, a, cache):
    if n < 2:
        return None
    i, k = _pairs(n)
    outer, inner = prop32_margin(i, k, a)
    scale = np.maximum(1.0, np.maximum((i / k) ** a, ((i + (a - 1.0) / 2.0) / (k + (a - 1.0) / 2.0)) ** a))
    margins = np.minimum(outer, inner) / scale
    j = int(np.argmin(margins))
    branch = "0<=alpha<=1" if 0.0 <= a <= 1.0 else "alpha<=0 or alpha>=1"
    return _ineq(float(margins[j]), f"worst pair i={int(i[j])} k={int(k[j])} branch {branch}")


def _suite_prop41(n, a, cache):
    if a < 2.0:
        return None
    bound = 4.0 * (n + 1) * (n + 3.0 + 3.0 * (a + 1.0) / 4.0) / (a * a + 10.0 * a + 8.0)
    row_max = inf_norm(build_a(n, a))
    margin = (bound - row_max) / max(1.0, bound)
    return _ineq(margin, f"inf_norm={row_max:.12g} bound={bound:.12g}")


def _suite_theoremA(n, a, cache):
    if n < 3:
        return None
    c_sq = _c_sq(n, a, cache)
    upper, _ = evaluate_bound(BoundId.THEOREM_A_UPPER, n, a)
    sides = [((upper - c_sq) / max(1.0, upper), "upper")]
    lower, lower_ok = evaluate_bound(BoundId.THEOREM_A_LOWER, n, a)
    if lower_ok:
        sides.append((((c_sq - lower) / max(1.0, lower)), "lower"))
    margin, side = min(sides)
    note = "" if lower_ok else "; lower skipped (n <= (alpha+1)/6)"
    return _ineq(margin, f"c_sq={c_sq:.12g} worst side={side}{note}")


def _suite_theorem11(n, a, cache):
    if a < 2.0 or n < 3:
        return None
    c_sq = _c_sq(n, a, cache)
    upper, _ = evaluate_bound(BoundId.THEOREM11_UPPER, n, a)
    margin = (upper - c_sq) / max(1.0, upper)
    return _ineq(margin, f"c_sq={c_sq:.12g} bound={upper:.12g}")


def _suite_cor12(n, a, cache):
    if a < 2.0 or n < 3:
        return None
    c_sq = _c_sq(n, a, cache)
    lower, _ = evaluate_bound(BoundId.COR12_LOWER, n, a)
    upper, _ = evaluate_bound(BoundId.COR12_UPPER, n, a)
    margin = min((c_sq - lower) / max(1.0, lower), (upper - c_sq) / max(1.0, upper))
    return _ineq(margin, f"c_sq={c_sq:.12g} bracket=[{lower:.12g}, {upper:.12g}] ratio={upper / lower:.12g}")


def _suite_trace_frobenius(n, a, cache):
    matrix = build_a(n, a)
    b1, b2, _ = charpoly_coeffs(n, a)
    trace_ref = n * (n + 1) / (2.0 * (a + 1.0))
    trace_rel = abs(trace(matrix) - trace_ref) / trace_ref
    frob_ref = b1 * b1 - 2.0 * b2
    frob_rel = abs(frobenius_sq(matrix) - frob_ref) / frob_ref
    margin = min(1e-12 - trace_rel, 1e-10 - frob_rel)
    return _ineq(margin, f"trace_rel_err={trace_rel:.3e} frob_rel_err={frob_rel:.3e}")


def _suite_bound_ordering(n, a, cache):
    # observational: record which upper bound is tighter, never assert
    if n < 3:
        return None
    theorem_a, _ = evaluate_bound(BoundId.THEOREM_A_UPPER, n, a)
    simple, _ = evaluate_bound(BoundId.SIMPLE_UPPER, n, a)
    margin = (simple - theorem_a) / max(1.0, simple)
    tighter = "theoremA_upper" if theorem_a <= simple else "simple_upper"
    return margin, True, f"theoremA_upper={theorem_a:.12g} simple_upper={simple:.12g} tighter={tighter}"


SUITES = {
    "lemma31": _suite_lemma31,
    "prop32": _suite_prop32,
    "prop41": _suite_prop41,
    "theoremA": _suite_theoremA,
    "theorem11": _suite_theorem11,
    "cor12": _suite_cor12,
    "trace_frobenius": _suite_trace_frobenius,
    "bound_ordering": _suite_bound_ordering,
}

SUITE_NAMES = tuple(SUITES)


def run_suite(suite: str, grid: GridSpec | None = None) -> SweepReport:
    """Run one named suite over a grid (defaults: n in 3..30, the alpha list above).

    Grid points outside the suite's hypotheses are skipped and counted, not
    passed.  Raises ValueError for an unknown suite name.
    """
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; known: {', '.join(SUITE_NAMES)}")
    if grid is None:
        grid = GridSpec(n_values=DEFAULT_N_VALUES, alpha_values=DEFAULT_ALPHA_VALUES, suite=suite)
    check = SUITES[suite]
    cache: dict = {}
    cases = []
    skipped = 0
    for n in sorted(set(grid.n_values)):
        for a in sorted(set(grid.alpha_values)):
            outcome = check(n, a, cache)
            if outcome is None:
                skipped += 1
                continue
            margin, passed, detail = outcome
            cases.append(SweepCase(n=n, alpha=a, margin=margin, passed=passed, detail=detail))
    return _assemble(suite, cases, skipped)


def verify_cor13(
    n_values=tuple(range(1, 11)),
    eps_list=(1e-3, 1e-4, 1e-5, 1e-6),
    alpha_big=(1e4,),
    tol: float = 1e-12,
) -> SweepReport:
    """Limit behavior at both ends of the weight-exponent range.

    Near alpha = -1 the scaled square (alpha+1) c_n^2 approaches n(n+1)/2:
    the recorded relative deviation must shrink as eps does and stay within
    1e-3 at the smallest eps.  For large alpha, alpha * c_n^2 must land in
    [2n/3, 3(n+1)] with 1e-6 relative slack.
    """
    n_values = tuple(int(n) for n in n_values)
    eps_list = tuple(float(e) for e in eps_list)
    alpha_big = tuple(float(a) for a in alpha_big)
    if not n_values or any(n < 1 or n > 10 for n in n_values):
        raise ValueError("n values must be in 1..10")
    if not eps_list or any(e < 1e-8 for e in eps_list):
        raise ValueError("eps entries must be >= 1e-8")
    if any(e2 >= e1 for e1, e2 in zip(eps_list, eps_list[1:])):
        raise ValueError("eps entries must decrease strictly")
    if not alpha_big or any(a < 100.0 for a in alpha_big):
        raise ValueError("alpha_big entries must be >= 100")

    cases = []
    for n in sorted(set(n_values)):
        target = n * (n + 1) / 2.0
        previous_rel = None
        for eps in eps_list:
            a = -1.0 + eps
            c_sq = mu_max_power(build_a(n, a), tol=tol).mu_max
            rel = abs((a + 1.0) * c_sq - target) / target
            constraints = []
            if previous_rel is not None:
                constraints.append(previous_rel - rel)
            if eps == eps_list[-1]:
                constraints.append(1e-3 - rel)
            margin = min(constraints) if constraints else 1.0
            detail = f"(alpha+1)*c_sq deviation rel={rel:.6e} target={target:.12g} eps={eps:.1e}"
            cases.append(SweepCase(n=n, alpha=a, margin=margin, passed=margin >= -PASS_TOL, detail=detail))
            previous_rel = rel
        for a in sorted(set(alpha_big)):
            c_sq = mu_max_power(build_a(n, a), tol=tol).mu_max
            scaled = a * c_sq
            low = 2.0 * n / 3.0
            high = 3.0 * (n + 1)
            slack = 1e-6 * max(1.0, high)
            margin = min(scaled - (low - slack), (high + slack) - scaled) / max(1.0, high)
            detail = f"alpha*c_sq={scaled:.12g} bracket=[{low:.12g}, {high:.12g}]"
            cases.append(SweepCase(n=n, alpha=a, margin=margin, passed=margin >= -PASS_TOL, detail=detail))
    return _assemble("cor13", cases, 0)


def _adaptive_simpson(f, a: float, b: float, tol: float, max_depth: int = 48) -> float:
    fa, fm, fb = f(a), f(0.5 * (a + b)), f(b)
    whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb)

    def recurse(lo, hi, flo, fmid, fhi, section, budget, depth):
        mid = 0.5 * (lo + hi)
        lmid = 0.5 * (lo + mid)
        rmid = 0.5 * (mid + hi)
        flm, frm = f(lmid), f(rmid)
        left = (mid - lo) / 6.0 * (flo + 4.0 * flm + fmid)
        right = (hi - mid) / 6.0 * (fmid + 4.0 * frm + fhi)
        delta = left + right - section
        if abs(delta) <= 15.0 * budget:
            return left + right + delta / 15.0
        if depth <= 0:
            raise RuntimeError(f"integrator failed to reach tolerance on [{lo}, {hi}]")
        return recurse(lo, mid, flo, flm, fmid, left, budget / 2.0, depth - 1) + recurse(
            mid, hi, fmid, frm, fhi, right, budget / 2.0, depth - 1
        )

    if a == b:
        return 0.0
    return recurse(a, b, fa, fm, fb, whole, tol, max_depth)


def integral_bracket(exponents, shifts, x: float, x0: float = 0.0, tol: float = 1e-10):
    """Numeric integral of prod((t+shift_i)^exponent_i) over [x0, x] plus the
    closed two-sided expressions that must bracket it.

    With s the exponent sum and gmin/gmax the extreme shifts, the bracket is
    [(t+gmin)f(t)] taken between the endpoints over s+1 from below and
    (x+gmax)f(x)/(s+1) from above; both collapse to the integral when all
    shifts coincide.
    """
    exponents = np.asarray(exponents, dtype=float)
    shifts = np.asarray(shifts, dtype=float)
    if exponents.size == 0 or exponents.size != shifts.size:
        raise ValueError("need matching, non-empty exponent and shift lists")
    if np.any(exponents <= 0.0):
        raise ValueError("exponents must be positive")
    if x0 + shifts.min() < 0.0 or x <= x0:
        raise ValueError("need x > x0 and x0 + min(shift) >= 0")

    def f(t: float) -> float:
        return float(np.prod((t + shifts) ** exponents))

    s = float(exponents.sum())
    gmin = float(shifts.min())
    gmax = float(shifts.max())
    integral = _adaptive_simpson(f, x0, x, tol)
    lower = ((x + gmin) * f(x) - (x0 + gmin) * f(x0)) / (s + 1.0)
    upper = (x + gmax) * f(x) / (s + 1.0)
    return integral, lower, upper


def verify_integral_lemma(trials: int = 100, seed: int = 42, tol: float = 1e-10) -> SweepReport:
    """Randomized bracket checks of the product-power integral bound.

    Each trial draws up to three factors (t+gamma)^a with a in (0, 3] and
    gamma in [0, 2], integrates over [0, x] for x in (0, 5], and requires
    the integral to sit between the closed expressions.  The alpha column
    of a case records the exponent sum; n is the trial number.
    """
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    rng = np.random.default_rng(seed)
    cases = []
    for trial in range(1, trials + 1):
        r = int(rng.integers(1, 4))
        exponents = 3.0 - rng.uniform(0.0, 3.0, size=r)  # open at 0, closed at 3
        shifts = rng.uniform(0.0, 2.0, size=r)
        x = 5.0 - float(rng.uniform(0.0, 5.0))
        integral, lower, upper = integral_bracket(exponents, shifts, x, tol=tol)
        scale = max(1.0, abs(integral))
        margin = min(integral - lower, upper - integral) / scale
        detail = (
            f"exponents={np.round(exponents, 6).tolist()} shifts={np.round(shifts, 6).tolist()} "
            f"x={x:.6f} integral={integral:.12g}"
        )
        cases.append(
            SweepCase(n=trial, alpha=float(exponents.sum()), margin=margin, passed=margin >= -PASS_TOL, detail=detail)
        )
    return _assemble("integral_lemma", cases, 0)


def sweep_to_csv(report: SweepReport, stream) -> None:
    """Write ``suite,n,alpha,margin,pass,detail`` rows, margins at 17 digits."""
    writer = csv.writer(stream)
    writer.writerow(["suite", "n", "alpha", "margin", "pass", "detail"])
    for case in report.cases:
        writer.writerow(
            [
                report.suite,
                case.n,
                f"{case.alpha:.17g}",
                f"{case.margin:.17g}",
                "true" if case.passed else "false",
                case.detail,
            ]
        )
