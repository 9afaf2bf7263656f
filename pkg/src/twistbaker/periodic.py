"""Exact enumeration of periodic points, one per admissible itinerary word.

Every length-n word other than L^n names exactly one period-n point: the
unique fixed point of the composed affine branch map on that cylinder.
The linear system is solved in exact integer arithmetic (fraction-free
elimination with partial pivoting; entries grow like 2^n, so everything
runs on arbitrary-precision integers), and each solution is verified by
replaying the itinerary exactly before it is accepted.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from . import mapcore, spectral, symbolic
from .errors import (
    InvariantViolationError,
    ResourceCapError,
    SingularWordError,
)
from .rational import rat_str

# Re-exported word utilities; they live with the Word type.
twist_number = symbolic.twist_number
prime_period = symbolic.prime_period

DEFAULT_CAP_LOW_DIM = 18  # dimensions 2 and 3
DEFAULT_CAP_HIGH_DIM = 14  # dimensions 4 and up
ENV_MAX_PERIOD = "TWISTBAKER_MAX_PERIOD"


def period_cap(dim: int, override: int | None = None) -> int:
    """Enumeration cap: explicit override > environment > built-in default."""
    if override is not None:
        return override
    env = os.environ.get(ENV_MAX_PERIOD)
    if env is not None:
        return int(env)
    return DEFAULT_CAP_LOW_DIM if dim <= 3 else DEFAULT_CAP_HIGH_DIM


@dataclass(frozen=True, slots=True)
class PeriodicPointRecord:
    """A solved periodic point together with its word-level data."""

    word: str
    point: mapcore.Point
    twist: int
    prime_period: int
    eigen_class: str
    chi_log2: Fraction

    def to_json(self) -> dict:
        return {
            "word": self.word,
            "point": [rat_str(c) for c in self.point],
            "twist": self.twist,
            "prime_period": self.prime_period,
            "eigen_class": self.eigen_class,
            "chi_log2": rat_str(self.chi_log2),
        }


def compose_affine(word: str, dim: int) -> mapcore.AffineMap:
    """Exact affine form of the n-step map on the cylinder of ``word``.

    The matrix is the product of the branch Jacobians taken along the
    word (latest step leftmost); |det| = 2^n.
    """
    symbolic.check_word(word)
    m = mapcore.check_dim(dim)
    mat = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    off = [0] * m
    for a in word:
        if a == "L":
            mat[0] = [2 * v for v in mat[0]]
            off = [2 * off[0] + 1] + off[1:]
        else:
            mat = [[-2 * v for v in mat[m - 1]]] + mat[: m - 1]
            off = [-2 * off[m - 1] + 1] + off[: m - 1]
    return mapcore.AffineMap(tuple(tuple(r) for r in mat), tuple(off))


def solve_linear_system(matrix, rhs) -> list[Fraction]:
    """Solve an integer square system exactly by fraction-free elimination.

    Partial pivoting by absolute value; Bareiss updates keep all
    intermediate entries integral.  Raises ZeroDivisionError on a
    singular matrix.
    """
    m = len(rhs)
    a = [list(row) + [b] for row, b in zip(matrix, rhs)]
    prev = 1
    for k in range(m):
        piv = max(range(k, m), key=lambda i: abs(a[i][k]))
        if a[piv][k] == 0:
            raise ZeroDivisionError("singular system")
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
        for i in range(k + 1, m):
            for j in range(k + 1, m + 1):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    x: list[Fraction] = [Fraction(0)] * m
    for i in range(m - 1, -1, -1):
        s = Fraction(a[i][m])
        for j in range(i + 1, m):
            s -= a[i][j] * x[j]
        x[i] = s / a[i][i]
    return x


def _solve_word(word: str, dim: int) -> tuple[list[int], int]:
    """Numerators and a common positive denominator of the periodic point."""
    aff = compose_affine(word, dim)
    m = dim
    mat = [
        [(1 if i == j else 0) - aff.matrix[i][j] for j in range(m)] for i in range(m)
    ]
    try:
        x = solve_linear_system(mat, list(aff.offset))
    except ZeroDivisionError:
        if set(word) == {"L"}:
            raise SingularWordError(
                f"word {word!r} is the all-L itinerary; its fixed set is the "
                "face x1 = -1 and it names no isolated periodic point"
            ) from None
        raise InvariantViolationError(
            f"singular periodic system for admissible word {word!r}"
        ) from None
    den = 1
    for f in x:
        den = den * f.denominator // gcd(den, f.denominator)
    nums = [int(f * den) for f in x]
    return nums, den


def _replay_itinerary(word: str, nums: list[int], den: int, dim: int) -> bool:
    """Exact integer replay: the orbit must follow ``word`` and close up."""
    if dim == 2:
        u0, u1 = nums
        for a in word:
            if u0 < 0:
                if a != "L":
                    return False
                u0 = den + 2 * u0
            else:
                if a != "R":
                    return False
                u0, u1 = den - 2 * u1, u0
        return [u0, u1] == nums
    u = list(nums)
    for a in word:
        if u[0] < 0:
            if a != "L":
                return False
            u = [den + 2 * u[0]] + u[1:]
        else:
            if a != "R":
                return False
            u = [den - 2 * u[-1]] + u[:-1]
    return u == nums


def solve_periodic(word: str, dim: int) -> mapcore.Point:
    """The unique period-n point whose itinerary is ``word`` (n = len(word)).

    Exact in every step; the solution is replayed through the map before
    being returned, and any mismatch aborts rather than skipping.
    """
    symbolic.check_word(word)
    mapcore.check_dim(dim)
    nums, den = _solve_word(word, dim)
    _validate_solution(word, nums, den, dim)
    return tuple(Fraction(u, den) for u in nums)


def _validate_solution(word: str, nums: list[int], den: int, dim: int) -> None:
    if den <= 0:
        raise InvariantViolationError(f"nonpositive denominator for {word!r}")
    if nums[0] == 0 or nums[0] == -den:
        raise InvariantViolationError(
            f"periodic point of {word!r} lies on an excluded face"
        )
    if not -den <= nums[0] <= den or any(not 0 <= u <= den for u in nums[1:]):
        raise InvariantViolationError(f"periodic point of {word!r} escapes X")
    if not _replay_itinerary(word, nums, den, dim):
        raise InvariantViolationError(
            f"itinerary replay failed for {word!r}: solved point does not "
            "follow its own word"
        )


def record_for_word(word: str, dim: int) -> PeriodicPointRecord:
    """Solve one word and attach twist, prime period and spectral data."""
    nums, den = _solve_word(word, dim)
    _validate_solution(word, nums, den, dim)
    mm = spectral.monomial_of_word(word, dim)
    report = spectral.eigen_report(mm, len(word))
    return PeriodicPointRecord(
        word=word,
        point=tuple(Fraction(u, den) for u in nums),
        twist=twist_number(word),
        prime_period=prime_period(word),
        eigen_class=spectral.COMPLEX if report.has_complex else spectral.REAL,
        chi_log2=spectral.chi_log2(word, dim),
    )


def _word_of_index(bits: int, n: int) -> str:
    """Lexicographic word order matches integer order with L=0, R=1."""
    return format(bits, f"0{n}b").replace("0", "L").replace("1", "R")


def _records_for_range(args) -> list[PeriodicPointRecord]:
    n, dim, lo, hi = args
    return [record_for_word(_word_of_index(b, n), dim) for b in range(lo, hi)]


def enumerate_fix(
    n: int,
    dim: int,
    workers: int | None = None,
    max_period: int | None = None,
) -> list[PeriodicPointRecord]:
    """All 2^n - 1 period-n points, in lexicographic word order.

    The excluded index 0 is the all-L word.  With ``workers`` > 1 the word
    range is partitioned across processes; output order is identical for
    every worker count.
    """
    if n < 1:
        raise ValueError("period must be >= 1")
    mapcore.check_dim(dim)
    cap = period_cap(dim, max_period)
    if n > cap:
        raise ResourceCapError(
            f"period {n} exceeds the enumeration cap {cap} for dimension {dim} "
            f"(raise via {ENV_MAX_PERIOD} or max_period)"
        )
    total = 1 << n
    if not workers or workers <= 1 or total < 4096:
        return _records_for_range((n, dim, 1, total))
    import multiprocessing

    bounds = [1 + (total - 1) * i // workers for i in range(workers + 1)]
    chunks = [
        (n, dim, bounds[i], bounds[i + 1])
        for i in range(workers)
        if bounds[i] < bounds[i + 1]
    ]
    with multiprocessing.get_context("fork").Pool(workers) as pool:
        parts = pool.map(_records_for_range, chunks)
    out: list[PeriodicPointRecord] = []
    for part in parts:
        out.extend(part)
    return out


def mobius(k: int) -> int:
    """Standard Moebius function by trial division."""
    if k < 1:
        raise ValueError("mobius is defined for k >= 1")
    result = 1
    d = 2
    while d * d <= k:
        if k % d == 0:
            k //= d
            if k % d == 0:
                return 0
            result = -result
        d += 1
    if k > 1:
        result = -result
    return result


def prime_fix_count_formula(n: int) -> int:
    """Inclusion-exclusion count of points of prime period exactly n:
    sum over d | n of mobius(n/d) * (2^d - 1)."""
    return sum(mobius(n // d) * (2**d - 1) for d in range(1, n + 1) if n % d == 0)


def count_prime_fix(
    n: int,
    dim: int,
    class_filter: str = "all",
    records: list[PeriodicPointRecord] | None = None,
) -> int:
    """Number of period-n points of prime period exactly n.

    For ``class_filter="all"`` the direct enumeration count is checked
    against the inclusion-exclusion formula and must agree.  For a single
    eigenvalue class only the direct count is returned: class membership
    depends on the period (the same point can have an all-real spectrum
    over one period and a complex pair over a divisor period), so no
    divisor identity is assumed per class.
    """
    if class_filter not in spectral.CLASS_FILTERS:
        raise ValueError(f"unknown class filter {class_filter!r}")
    if records is None:
        records = enumerate_fix(n, dim)
    primitive = [r for r in records if r.prime_period == n]
    if class_filter == "all":
        direct = len(primitive)
        formula = prime_fix_count_formula(n)
        if direct != formula:
            raise InvariantViolationError(
                f"prime-period count mismatch at n={n}: direct {direct}, "
                f"formula {formula}"
            )
        return direct
    return sum(1 for r in primitive if r.eigen_class == class_filter)
