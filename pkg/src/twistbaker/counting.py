"""Closed-form periodic-point counts and twist-residue combinatorics.

The number of period-n points is 2^n - 1 (every word but the all-L one), and
the number with twist congruent to r mod m is a stepped binomial sum: the
multisection of (1+1)^n with step m, minus the excluded all-L word when
r = 0.  The trigonometric closed form of the multisection gives the
explicit deviation bound from the uniform share 1/m.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import InvariantViolationError
from .rational import rat_str

TRIG_CHECK_MAX_N = 50
TRIG_REL_TOL = 1e-6


def multisection(n: int, m: int, r: int) -> int:
    """Sum of C(n, q*m + r) over q >= 0, exactly.

    For n <= 50 the trigonometric closed form
    (1/m) * sum_k (2 cos(pi k/m))^n cos(pi (n-2r) k/m) is evaluated in
    floating point and must agree to 1e-6 relative tolerance; above that
    the float check is skipped (the powers overwhelm the mantissa).
    """
    if n < 0 or m < 2:
        raise ValueError("need n >= 0 and m >= 2")
    if not 0 <= r < m:
        raise ValueError(f"residue {r} out of range for modulus {m}")
    exact = sum(math.comb(n, k) for k in range(r, n + 1, m))
    if n <= TRIG_CHECK_MAX_N:
        trig = (
            sum(
                (2 * math.cos(math.pi * k / m)) ** n
                * math.cos(math.pi * (n - 2 * r) * k / m)
                for k in range(m)
            )
            / m
        )
        if abs(exact - trig) > TRIG_REL_TOL * max(1.0, abs(exact)):
            raise InvariantViolationError(
                f"multisection mismatch at n={n}, m={m}, r={r}: "
                f"exact {exact}, trig {trig}"
            )
    return exact


def fix_count(n: int) -> int:
    """Number of period-n points: 2^n - 1."""
    if n < 1:
        raise ValueError("period must be >= 1")
    return 2**n - 1


def fix_count_residue(n: int, m: int, r: int) -> int:
    """Number of period-n points with twist congruent to r mod m.

    Only the excluded all-L word (twist 0) is removed, so the correction
    -1 applies at r = 0 alone; the counts then partition 2^n - 1.
    """
    if n < 1:
        raise ValueError("period must be >= 1")
    return multisection(n, m, r) - (1 if r == 0 else 0)


def residue_bound(n: int, m: int) -> float:
    """Explicit deviation bound |count/(2^n-1) - 1/m| <= this value."""
    alpha = math.cos(math.pi / m)
    return (m - 1) / m * alpha**n + 2 / (2**n - 1)


@dataclass(frozen=True)
class ResidueCountReport:
    """Per-residue twist counts at one period, with the deviation bound."""

    period: int
    dim: int
    per_residue: dict[int, int]
    total: int
    bound: float

    def ratios(self) -> dict[int, Fraction]:
        return {r: Fraction(c, self.total) for r, c in self.per_residue.items()}

    def to_json(self) -> dict:
        return {
            "period": self.period,
            "dim": self.dim,
            "total": self.total,
            "per_residue": {str(r): c for r, c in sorted(self.per_residue.items())},
            "ratios": {
                str(r): rat_str(q) for r, q in sorted(self.ratios().items())
            },
            "bound": self.bound,
        }

    def csv_rows(self) -> list[dict]:
        ratios = self.ratios()
        return [
            {
                "n": self.period,
                "m": self.dim,
                "r": r,
                "count": self.per_residue[r],
                "ratio": rat_str(ratios[r]),
                "bound": self.bound,
            }
            for r in sorted(self.per_residue)
        ]


def proportion_report(n: int, m: int) -> ResidueCountReport:
    """Residue counts at period n, checked against the uniform-share bound."""
    counts = {r: fix_count_residue(n, m, r) for r in range(m)}
    total = fix_count(n)
    if sum(counts.values()) != total:
        raise InvariantViolationError(
            f"residue counts at n={n}, m={m} do not partition {total}"
        )
    bound = residue_bound(n, m)
    for r, c in counts.items():
        if abs(float(Fraction(c, total) - Fraction(1, m))) > bound:
            raise InvariantViolationError(
                f"residue {r} share violates the deviation bound at n={n}, m={m}"
            )
    return ResidueCountReport(n, m, counts, total, bound)


def ratio_lower_bounds(m: int) -> tuple[Fraction, Fraction]:
    """Asymptotic lower bounds for the all-real and complex-pair shares
    of the period-n points: (1/m, min(m-1, 2)/m)."""
    if m < 2:
        raise ValueError("dimension must be >= 2")
    return Fraction(1, m), Fraction(min(m - 1, 2), m)
