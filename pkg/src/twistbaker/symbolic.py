"""Words over {L, R}, basic rectangles, cylinder measures and the coding map.

A word of length n names the set of points whose itinerary starts with it;
that set is always a product of intervals (a basic n-rectangle) carrying
normalized Lebesgue measure 2^-n.  Interval endpoints keep open/closed
flags derived from the region convention (x1 < 0 is open at 0 on the L
side, closed on the R side), so membership tests agree exactly with the
itinerary of a point.  Measures ignore the flags, since boundaries are
null sets.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from . import mapcore
from .errors import InvariantViolationError
from .rational import rat_str

ALPHABET = "LR"


def check_word(word: str, nonempty: bool = True) -> str:
    if nonempty and not word:
        raise ValueError("word must be nonempty")
    if any(a not in ALPHABET for a in word):
        raise ValueError(f"word may contain only L and R, got {word!r}")
    return word


def all_words(n: int):
    """All words of length n in lexicographic order (L < R)."""
    for symbols in itertools.product(ALPHABET, repeat=n):
        yield "".join(symbols)


def twist_number(word: str) -> int:
    """Number of R symbols in the word."""
    check_word(word, nonempty=False)
    return word.count("R")


def prime_period(word: str) -> int:
    """Smallest d dividing len(word) with word = (word[:d]) repeated."""
    check_word(word)
    n = len(word)
    for d in range(1, n + 1):
        if n % d == 0 and word == word[:d] * (n // d):
            return d
    raise AssertionError("unreachable")  # d = n always works


@dataclass(frozen=True)
class Interval:
    """A rational interval with open/closed endpoint flags."""

    lo: Fraction
    hi: Fraction
    lo_closed: bool = True
    hi_closed: bool = True

    @property
    def length(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains(self, x) -> bool:
        x = Fraction(x)
        if x < self.lo or x > self.hi:
            return False
        if x == self.lo and not self.lo_closed:
            return False
        if x == self.hi and not self.hi_closed:
            return False
        return True

    def intersect(self, other: "Interval") -> "Interval | None":
        """Intersection, or None when empty (a degenerate point counts as empty)."""
        if self.lo > other.lo or (self.lo == other.lo and not self.lo_closed):
            lo, lo_closed = self.lo, self.lo_closed
        else:
            lo, lo_closed = other.lo, other.lo_closed
        if self.hi < other.hi or (self.hi == other.hi and not self.hi_closed):
            hi, hi_closed = self.hi, self.hi_closed
        else:
            hi, hi_closed = other.hi, other.hi_closed
        if lo >= hi:
            return None
        return Interval(lo, hi, lo_closed, hi_closed)

    def interior_overlaps(self, other: "Interval") -> bool:
        return max(self.lo, other.lo) < min(self.hi, other.hi)

    def covers_interval(self, other: "Interval") -> bool:
        """Containment of other in self, ignoring endpoint flags."""
        return self.lo <= other.lo and other.hi <= self.hi

    def to_json(self) -> dict:
        return {
            "lo": rat_str(self.lo),
            "hi": rat_str(self.hi),
            "lo_closed": self.lo_closed,
            "hi_closed": self.hi_closed,
        }


def _region_intervals(label: str, dim: int) -> tuple[Interval, ...]:
    unit = Interval(Fraction(0), Fraction(1))
    if label == mapcore.LEFT:
        first = Interval(Fraction(-1), Fraction(0), True, False)
    else:
        first = Interval(Fraction(0), Fraction(1))
    return (first,) + (unit,) * (dim - 1)


@dataclass(frozen=True)
class BasicRectangle:
    """The set of points whose itinerary starts with ``word``."""

    word: str
    intervals: tuple[Interval, ...]

    @property
    def dim(self) -> int:
        return len(self.intervals)

    @property
    def measure(self) -> Fraction:
        """Normalized volume: product of side lengths over vol(X) = 2."""
        v = Fraction(1)
        for iv in self.intervals:
            v *= iv.length
        return v / 2

    def side_lengths(self) -> tuple[Fraction, ...]:
        return tuple(iv.length for iv in self.intervals)

    def contains(self, p) -> bool:
        return all(iv.contains(x) for iv, x in zip(self.intervals, p))

    def contains_in_closure(self, p) -> bool:
        return all(iv.lo <= Fraction(x) <= iv.hi for iv, x in zip(self.intervals, p))

    def center(self) -> mapcore.Point:
        return tuple(iv.midpoint for iv in self.intervals)

    def to_json(self) -> dict:
        return {
            "word": self.word,
            "intervals": [iv.to_json() for iv in self.intervals],
            "measure": rat_str(self.measure),
        }


def _pullback(label: str, intervals: tuple[Interval, ...]) -> tuple[Interval, ...]:
    """Preimage of an interval product under one branch, restricted to its region."""
    m = len(intervals)
    if label == mapcore.LEFT:
        i1 = intervals[0]
        # y = 1 + 2x is increasing: flags carry over.
        pre1 = Interval((i1.lo - 1) / 2, (i1.hi - 1) / 2, i1.lo_closed, i1.hi_closed)
        region1 = Interval(Fraction(-1), Fraction(0), True, False)
        new = [pre1.intersect(region1)] + [
            intervals[j].intersect(Interval(Fraction(0), Fraction(1)))
            for j in range(1, m)
        ]
    else:
        i1 = intervals[0]
        # y = 1 - 2x is decreasing: endpoint flags swap.
        prem = Interval((1 - i1.hi) / 2, (1 - i1.lo) / 2, i1.hi_closed, i1.lo_closed)
        unit = Interval(Fraction(0), Fraction(1))
        new = [intervals[j].intersect(unit) for j in range(1, m)]
        new.append(prem.intersect(unit))
    if any(iv is None for iv in new):
        raise InvariantViolationError("cylinder pullback produced an empty interval")
    return tuple(new)


def rectangle(word: str, dim: int) -> BasicRectangle:
    """Exact interval product of the cylinder named by ``word``.

    Built by pulling the terminal region back through the branches of the
    earlier symbols, so the n-step image of the result covers int(X).
    """
    check_word(word)
    mapcore.check_dim(dim)
    intervals = _region_intervals(word[-1], dim)
    for a in reversed(word[:-1]):
        intervals = _pullback(a, intervals)
    return BasicRectangle(word, intervals)


def cylinder_measure(word: str, dim: int = 2) -> Fraction:
    """Normalized measure of the cylinder: exactly 2^-len(word).

    Cross-checked against the geometric volume of the rectangle.
    """
    check_word(word)
    value = Fraction(1, 2 ** len(word))
    if rectangle(word, dim).measure != value:
        raise InvariantViolationError(f"cylinder measure mismatch for {word!r}")
    return value


def refine(word: str, dim: int) -> tuple[BasicRectangle, BasicRectangle]:
    """The two cylinders refining ``word`` by one more symbol."""
    return rectangle(word + "L", dim), rectangle(word + "R", dim)


def _forward_intervals(label: str, intervals: tuple[Interval, ...]):
    """Image of an interval product under one branch (no region restriction)."""
    m = len(intervals)
    if label == mapcore.LEFT:
        i1 = intervals[0]
        new1 = Interval(1 + 2 * i1.lo, 1 + 2 * i1.hi, i1.lo_closed, i1.hi_closed)
        return (new1,) + intervals[1:]
    last = intervals[-1]
    new1 = Interval(1 - 2 * last.hi, 1 - 2 * last.lo, last.hi_closed, last.lo_closed)
    return (new1,) + intervals[: m - 1]


def image_shift_check(word: str, n: int, dim: int) -> bool:
    """Whether the n-step affine image of [word] has the interior of [word[n:]]."""
    check_word(word)
    if not 0 <= n < len(word):
        raise ValueError("shift count must satisfy 0 <= n < len(word)")
    intervals = rectangle(word, dim).intervals
    for a in word[:n]:
        intervals = _forward_intervals(a, intervals)
    target = rectangle(word[n:], dim).intervals
    return all(
        iv.lo == tv.lo and iv.hi == tv.hi for iv, tv in zip(intervals, target)
    )


def intersection_measure(u: str, n: int, v: str) -> Fraction:
    """Exact normalized measure of [u] intersected with the n-step preimage of [v].

    Symbolic rule: for n >= len(u) the events are independent and the
    measure is 2^-(len(u)+len(v)); for n < len(u) the windows overlap and
    the measure is 2^-max(len(u), n+len(v)) when the shared symbols agree,
    else 0.  The same value holds in every dimension.
    """
    check_word(u)
    check_word(v)
    if n < 0:
        raise ValueError("shift must be nonnegative")
    if n >= len(u):
        return Fraction(1, 2 ** (len(u) + len(v)))
    for k in range(min(len(u) - n, len(v))):
        if u[n + k] != v[k]:
            return Fraction(0)
    return Fraction(1, 2 ** max(len(u), n + len(v)))


def intersection_measure_geometric(u: str, n: int, v: str, dim: int) -> Fraction:
    """Independent geometric route: sum rectangle intersections over all
    length-n prefixes prepended to v.  Exponential in n; for cross-checks only."""
    ru = rectangle(u, dim)
    total = Fraction(0)
    for w in all_words(n):
        rv = rectangle(w + v, dim)
        vol = Fraction(1)
        for a, b in zip(ru.intervals, rv.intervals):
            inter = a.intersect(b)
            if inter is None:
                vol = Fraction(0)
                break
            vol *= inter.length
        total += vol / 2
    return total


def point_from_prefix(word: str, dim: int) -> mapcore.Point:
    """Center of the cylinder: the canonical finite-depth value of the coding map.

    The center maximizes distance to the cylinder boundary, where the
    coding would be ambiguous; its itinerary starts with ``word`` exactly.
    """
    rect = rectangle(word, dim)
    p = rect.center()
    if mapcore.kneading_prefix(p, len(word)) != word:
        raise InvariantViolationError(f"coding round-trip failed for {word!r}")
    return p


def diameter_profile(word: str, dim: int) -> list[tuple[Fraction, ...]]:
    """Side lengths of the rectangles of every prefix, in increasing depth."""
    check_word(word)
    return [rectangle(word[:k], dim).side_lengths() for k in range(1, len(word) + 1)]


def nested_or_disjoint(u: str, v: str, dim: int) -> bool:
    """Two cylinders are nested when one word extends the other, else their
    interiors are disjoint.  Checked geometrically."""
    ru, rv = rectangle(u, dim), rectangle(v, dim)
    overlap = all(a.interior_overlaps(b) for a, b in zip(ru.intervals, rv.intervals))
    if u.startswith(v):
        return all(b.covers_interval(a) for a, b in zip(ru.intervals, rv.intervals))
    if v.startswith(u):
        return all(a.covers_interval(b) for a, b in zip(ru.intervals, rv.intervals))
    return not overlap
