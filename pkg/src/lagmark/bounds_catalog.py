"""Closed-form bounds on the squared Markov constant, keyed by stable ids.

Every bound is normalized to bound c_n(alpha)**2, so all values live on one
comparison scale.  Bounds are evaluated even when their hypotheses fail
(useful for crossover studies); the applicability flag records whether the
guarantee actually applies at the given (n, alpha).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .gamma_kernel import as_alpha
from .matrix_builder import build_a
from .spectral import mu_max_power

__all__ = [
    "BoundEntry",
    "BoundId",
    "BoundsReport",
    "EXACT_IDS",
    "LOWER_IDS",
    "UPPER_IDS",
    "bounds_report",
    "charpoly_coeffs",
    "evaluate_bound",
]


class BoundId(str, Enum):
    TURAN_EXACT = "turan_exact"
    DORFLER_LOWER = "dorfler_lower"
    DORFLER_UPPER = "dorfler_upper"
    THEOREM_A_LOWER = "theoremA_lower"
    THEOREM_A_UPPER = "theoremA_upper"
    THEOREM11_UPPER = "theorem11_upper"
    COR12_LOWER = "cor12_lower"
    COR12_UPPER = "cor12_upper"
    FROB_UPPER = "frob_upper"
    NEWTON_LOWER = "newton_lower"
    SIMPLE_UPPER = "simple_upper"
    SIMPLE_LOWER = "simple_lower"


LOWER_IDS = frozenset(
    {BoundId.DORFLER_LOWER, BoundId.THEOREM_A_LOWER, BoundId.COR12_LOWER, BoundId.NEWTON_LOWER, BoundId.SIMPLE_LOWER}
)
UPPER_IDS = frozenset(
    {
        BoundId.DORFLER_UPPER,
        BoundId.THEOREM_A_UPPER,
        BoundId.THEOREM11_UPPER,
        BoundId.COR12_UPPER,
        BoundId.FROB_UPPER,
        BoundId.SIMPLE_UPPER,
    }
)
EXACT_IDS = frozenset({BoundId.TURAN_EXACT})

HYPOTHESES = {
    BoundId.TURAN_EXACT: "alpha = 0",
    BoundId.DORFLER_LOWER: "alpha > -1",
    BoundId.DORFLER_UPPER: "alpha > -1",
    BoundId.THEOREM_A_LOWER: "n >= 3 and n > (alpha+1)/6",
    BoundId.THEOREM_A_UPPER: "n >= 3",
    BoundId.THEOREM11_UPPER: "alpha >= 2 and n >= 3",
    BoundId.COR12_LOWER: "alpha >= 2 and n >= 3",
    BoundId.COR12_UPPER: "alpha >= 2 and n >= 3",
    BoundId.FROB_UPPER: "alpha > -1",
    BoundId.NEWTON_LOWER: "alpha > -1",
    BoundId.SIMPLE_UPPER: "n >= 3",
    BoundId.SIMPLE_LOWER: "n >= 3",
}


def charpoly_coeffs(n: int, alpha) -> tuple[float, float, float]:
    """First three characteristic-polynomial coefficients, in closed form.

    b1 is the trace, b2 the sum of pairwise eigenvalue products, b3 the sum
    over triples; the (n-1) and (n-2) factors make b2 and b3 vanish exactly
    below n = 2 and n = 3.
    """
    a = as_alpha(alpha)
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    b1 = n * (n + 1) / (2.0 * (a + 1.0))
    b2 = (n - 1) * n * (n + 1) * (3.0 * (a + 2.0) * n + 2.0 * (a + 6.0)) / (24.0 * (a + 1.0) * (a + 2.0) * (a + 3.0))
    b3 = (
        (n - 2)
        * (n - 1)
        * n
        * (n + 1)
        * (5.0 * (a + 2.0) * (a + 4.0) * n * (n + 1) + 8.0 * (7.0 * a + 20.0) * n + 12.0 * (a + 20.0))
        / (240.0 * (a + 1.0) * (a + 2.0) * (a + 3.0) * (a + 4.0) * (a + 5.0))
    )
    return float(b1), float(b2), float(b3)


def evaluate_bound(bound_id, n: int, alpha) -> tuple[float, bool]:
    """Value of one bound on c_n(alpha)**2 plus its applicability flag.

    The value is computed even when the hypotheses fail; only the flag
    changes.  Raises ValueError for an unknown id.
    """
    bid = BoundId(bound_id)
    a = as_alpha(alpha)
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")

    if bid is BoundId.TURAN_EXACT:
        s = 2.0 * math.sin(math.pi / (4.0 * n + 2.0))
        return 1.0 / (s * s), a == 0.0
    if bid is BoundId.DORFLER_LOWER:
        value = (
            n * n / ((a + 1.0) * (a + 3.0))
            + (2.0 * a * a + 5.0 * a + 6.0) * n / (3.0 * (a + 1.0) * (a + 2.0) * (a + 3.0))
            + (a + 6.0) / (3.0 * (a + 2.0) * (a + 3.0))
        )
        return value, True
    if bid is BoundId.DORFLER_UPPER:
        return n * (n + 1) / (2.0 * (a + 1.0)), True
    if bid is BoundId.THEOREM_A_LOWER:
        value = 2.0 * (n + 2.0 * a / 3.0) * (n - (a + 1.0) / 6.0) / ((a + 1.0) * (a + 5.0))
        return value, n >= 3 and n > (a + 1.0) / 6.0
    if bid is BoundId.THEOREM_A_UPPER:
        value = (n + 1) * (n + 2.0 * (a + 1.0) / 5.0) / ((a + 1.0) * ((a + 3.0) * (a + 5.0)) ** (1.0 / 3.0))
        return value, n >= 3
    if bid is BoundId.THEOREM11_UPPER:
        den = a * a + 10.0 * a + 8.0
        value = math.inf if den == 0.0 else 4.0 * (n + 1) * (n + 3.0 + 3.0 * (a + 1.0) / 4.0) / den
        return value, a >= 2.0 and n >= 3
    if bid is BoundId.COR12_LOWER:
        return (n + 1) * (n + a + 4.0) / (2.0 * (a + 1.0) * (a + 8.0)), a >= 2.0 and n >= 3
    if bid is BoundId.COR12_UPPER:
        return 4.0 * (n + 1) * (n + a + 4.0) / ((a + 1.0) * (a + 8.0)), a >= 2.0 and n >= 3
    if bid is BoundId.FROB_UPPER:
        b1, b2, _ = charpoly_coeffs(n, a)
        return math.sqrt(b1 * b1 - 2.0 * b2), True
    if bid is BoundId.NEWTON_LOWER:
        b1, b2, _ = charpoly_coeffs(n, a)
        return b1 - 2.0 * b2 / b1, True
    if bid is BoundId.SIMPLE_UPPER:
        value = (n + 1) * math.sqrt(n * (n + 2.0 * (a + 1.0) / 3.0)) / ((a + 1.0) * math.sqrt(2.0 * (a + 3.0)))
        return value, n >= 3
    if bid is BoundId.SIMPLE_LOWER:
        if a < 0.0:
            value = n * (n + 7.0 / 8.0) / ((a + 1.0) * (a + 3.0))
        elif a < 1.0:
            value = n * (n + 1.0) / ((a + 1.0) * (a + 3.0))
        else:
            value = n * (n + (2.0 * a + 1.0) / 3.0) / ((a + 1.0) * (a + 3.0))
        return value, n >= 3
    raise ValueError(f"unknown bound id {bound_id!r}")  # pragma: no cover


@dataclass(frozen=True)
class BoundEntry:
    value: float
    applicable: bool
    hypothesis: str


@dataclass(frozen=True)
class BoundsReport:
    """All bound values for one (n, alpha), with the computed square optional."""

    n: int
    alpha: float
    values: dict
    computed_c_sq: float | None


def bounds_report(n: int, alpha, include_computed: bool = False, tol: float = 1e-12) -> BoundsReport:
    """Evaluate every bound id; optionally attach and sanity-check the computed value.

    With the computed square present, every applicable lower bound must sit
    below it and every applicable upper bound above it; a violation is an
    implementation bug and raises RuntimeError.
    """
    a = as_alpha(alpha)
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    entries = {}
    for bid in BoundId:
        value, applicable = evaluate_bound(bid, n, a)
        entries[bid] = BoundEntry(value=value, applicable=applicable, hypothesis=HYPOTHESES[bid])
    computed = None
    if include_computed:
        computed = mu_max_power(build_a(n, a), tol=tol).mu_max
        _check_sandwich(entries, computed)
    return BoundsReport(n=n, alpha=a, values=entries, computed_c_sq=computed)


def _check_sandwich(entries: dict, c_sq: float) -> None:
    slack = 1e-9 * max(1.0, abs(c_sq))
    for bid in BoundId:
        entry = entries[bid]
        if not entry.applicable:
            continue
        if bid in LOWER_IDS and entry.value > c_sq + slack:
            raise RuntimeError(f"lower bound {bid.value}={entry.value!r} exceeds computed c^2={c_sq!r}")
        if bid in UPPER_IDS and entry.value < c_sq - slack:
            raise RuntimeError(f"upper bound {bid.value}={entry.value!r} is below computed c^2={c_sq!r}")
        if bid in EXACT_IDS and abs(entry.value - c_sq) > 1e-10 * max(1.0, abs(entry.value)):
            raise RuntimeError(f"exact value {bid.value}={entry.value!r} disagrees with computed c^2={c_sq!r}")
