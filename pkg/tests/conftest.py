"""Shared fixtures: cached enumerations and independent test oracles."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

import numpy as np
import pytest

from twistbaker import mapcore, periodic, spectral, symbolic


@pytest.fixture(scope="session")
def enum():
    """Memoized enumeration shared across the whole run."""

    @lru_cache(maxsize=None)
    def _enum(n: int, dim: int):
        return tuple(periodic.enumerate_fix(n, dim))

    return _enum


@lru_cache(maxsize=None)
def cached_rectangle(word: str, dim: int):
    return symbolic.rectangle(word, dim)


def oracle_rectangle_bounds(word: str, dim: int):
    """Independent cylinder computation from forward branch inequalities.

    The itinerary condition at step k constrains one coordinate of the
    starting point linearly (the k-step matrix has one entry per row), so
    the cylinder is cut out by intersecting half-open bounds with X.
    This never uses the pullback recursion under test.
    """
    lo = [Fraction(-1)] + [Fraction(0)] * (dim - 1)
    hi = [Fraction(1)] * dim
    lo_strict = [False] * dim
    hi_strict = [False] * dim
    mat = [[1 if i == j else 0 for j in range(dim)] for i in range(dim)]
    off = [0] * dim
    for a in word:
        # Row 0 of the current matrix has a single nonzero entry.
        col = next(j for j in range(dim) if mat[0][j])
        v = mat[0][col]
        threshold = Fraction(-off[0], v)
        want_upper = (a == "L") == (v > 0)
        if want_upper:
            # v*x + off < 0 (L, v>0) or v*x + off >= 0 (R, v<0)
            strict = a == "L"
            if threshold < hi[col] or (threshold == hi[col] and strict):
                hi[col], hi_strict[col] = threshold, strict
        else:
            strict = a == "L"
            if threshold > lo[col] or (threshold == lo[col] and strict):
                lo[col], lo_strict[col] = threshold, strict
        if a == "L":
            mat[0] = [2 * x for x in mat[0]]
            off = [2 * off[0] + 1] + off[1:]
        else:
            mat = [[-2 * x for x in mat[dim - 1]]] + mat[: dim - 1]
            off = [-2 * off[dim - 1] + 1] + off[: dim - 1]
    return lo, hi, lo_strict, hi_strict


def assert_rectangle_matches_oracle(word: str, dim: int):
    rect = cached_rectangle(word, dim)
    lo, hi, lo_strict, hi_strict = oracle_rectangle_bounds(word, dim)
    for j, iv in enumerate(rect.intervals):
        assert iv.lo == lo[j] and iv.hi == hi[j], (word, j)
        assert iv.lo_closed == (not lo_strict[j]), (word, j)
        assert iv.hi_closed == (not hi_strict[j]), (word, j)


def numpy_classify(word: str, dim: int, threshold: float = 1e-9) -> str:
    """Float eigensolver oracle for the real/complex decision."""
    dense = np.array(spectral.monomial_of_word(word, dim).dense(), dtype=float)
    eig = np.linalg.eigvals(dense)
    if bool(np.any(np.abs(eig.imag) > threshold)):
        return spectral.COMPLEX
    return spectral.REAL


def orbit_roundtrip_ok(record) -> bool:
    """Re-verify a periodic record by plain map iteration (independent of
    the integer replay inside the solver)."""
    p = record.point
    n = len(record.word)
    if mapcore.kneading_prefix(p, n) != record.word:
        return False
    q = p
    for _ in range(n):
        q = mapcore.apply(q)
    return q == p


def random_point(rng, dim: int, max_den: int = 97) -> tuple[Fraction, ...]:
    """A random rational point of X with moderate denominators."""
    den = rng.randrange(1, max_den)
    first = Fraction(rng.randrange(-den, den + 1), den)
    rest = tuple(
        Fraction(rng.randrange(0, d + 1), d)
        for d in (rng.randrange(1, max_den) for _ in range(dim - 1))
    )
    return (first,) + rest


def pascal_multisection(n: int, m: int, r: int) -> int:
    """Binomial multisection by explicit Pascal-row accumulation."""
    row = [1]
    for _ in range(n):
        row = [a + b for a, b in zip([0] + row, row + [0])]
    return sum(row[k] for k in range(r, n + 1, m))
