"""Exact spectra of itinerary Jacobian products via their monomial structure.

The Jacobian of every composed branch map has exactly one nonzero entry
per row and column: a signed power of two sitting on the cyclic rotation
by (twist mod m).  Splitting that rotation into cycles gives the whole
spectrum in closed form -- the eigenvalues contributed by a cycle of
length l with entry product s*2^e are the l-th roots of s*2^e -- so the
real/complex decision and all eigenvalue moduli are exact dyadic data.
No floating-point eigensolver is ever consulted outside test oracles.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from . import mapcore, symbolic

REAL = "real"
COMPLEX = "complex"
CLASS_FILTERS = ("all", REAL, COMPLEX)


@dataclass(frozen=True)
class MonomialMatrix:
    """A signed power-of-two scaled cyclic rotation.

    Row j holds the value signs[j] * 2**exps[j] in column (j - shift) % dim.
    """

    dim: int
    shift: int
    signs: tuple[int, ...]
    exps: tuple[int, ...]

    @property
    def steps(self) -> int:
        """Number of composed branch steps; the exponent sum, so |det| = 2**steps."""
        return sum(self.exps)

    def dense(self) -> tuple[tuple[int, ...], ...]:
        m = self.dim
        rows = [[0] * m for _ in range(m)]
        for j in range(m):
            rows[j][(j - self.shift) % m] = self.signs[j] * (1 << self.exps[j])
        return tuple(tuple(r) for r in rows)


@dataclass(frozen=True)
class CycleData:
    """One rotation cycle: its length and the signed dyadic entry product."""

    length: int
    sign: int
    exponent: int


@dataclass(frozen=True)
class EigenReport:
    """Exact spectral summary of a monomial matrix over a given period."""

    moduli_log2: tuple[Fraction, ...]
    has_complex: bool
    chi_log2: Fraction


def monomial_of_word(word: str, dim: int) -> MonomialMatrix:
    """Structured product of the branch Jacobians along a word.

    An L step doubles the current first-row entry; an R step rotates the
    rows down one slot and scales the entry wrapping into the first row
    by -2.  The dense form equals the composed Jacobian entry-for-entry.
    """
    symbolic.check_word(word)
    m = mapcore.check_dim(dim)
    signs = [1] * m
    exps = [0] * m
    shift = 0
    for a in word:
        if a == "L":
            exps[0] += 1
        else:
            signs = [-signs[-1]] + signs[:-1]
            exps = [exps[-1] + 1] + exps[:-1]
            shift = (shift + 1) % m
    return MonomialMatrix(m, shift, tuple(signs), tuple(exps))


def cycle_decomposition(mm: MonomialMatrix) -> tuple[CycleData, ...]:
    """Cycles of the rotation, each with its signed entry product.

    A rotation by shift s on m slots has gcd(m, s) cycles of length
    m / gcd(m, s); the exponents over all cycles sum to the step count
    and the signs multiply to (-1)^twist.
    """
    m, s = mm.dim, mm.shift
    seen = [False] * m
    cycles = []
    for j0 in range(m):
        if seen[j0]:
            continue
        sign, exponent, length = 1, 0, 0
        j = j0
        while not seen[j]:
            seen[j] = True
            sign *= mm.signs[j]
            exponent += mm.exps[j]
            length += 1
            j = (j + s) % m
        cycles.append(CycleData(length, sign, exponent))
    expected = gcd(m, s) if s else m
    assert len(cycles) == expected and all(c.length == m // expected for c in cycles)
    return tuple(cycles)


def eigen_report(mm: MonomialMatrix, period: int) -> EigenReport:
    """Exact eigenvalue moduli, complexity flag, and per-step expansion rate.

    A cycle (l, s, e) contributes the l-th roots of s*2^e: all of modulus
    2^(e/l), non-real as soon as l >= 3, or l = 2 with negative product.
    chi_log2 is the smallest modulus exponent normalized by the period.
    """
    if period < 1:
        raise ValueError("period must be positive")
    moduli: list[Fraction] = []
    has_complex = False
    for c in cycle_decomposition(mm):
        moduli.extend([Fraction(c.exponent, c.length)] * c.length)
        if c.length >= 3 or (c.length == 2 and c.sign < 0):
            has_complex = True
    return EigenReport(
        moduli_log2=tuple(sorted(moduli)),
        has_complex=has_complex,
        chi_log2=min(moduli) / period,
    )


def classify(word: str, dim: int) -> str:
    """Eigenvalue class of the composed Jacobian along a word."""
    if set(word) == {"L"}:
        raise ValueError("the all-L word has no periodic point to classify")
    mm = monomial_of_word(word, dim)
    return COMPLEX if eigen_report(mm, len(word)).has_complex else REAL


def chi_log2(word: str, dim: int) -> Fraction:
    """log2 of the expansion rate chi of the periodic point named by ``word``.

    chi is the smallest eigenvalue modulus of the return Jacobian over
    the prime period, taken to the 1/(prime period) power; it is strictly
    greater than 1 for every admissible word.
    """
    if set(word) == {"L"}:
        raise ValueError("the all-L word has no periodic point")
    d = symbolic.prime_period(word)
    mm = monomial_of_word(word[:d], dim)
    return eigen_report(mm, d).chi_log2
