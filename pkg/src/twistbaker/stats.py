"""Desk-scale statistics: equidistribution, mixing, biased chi decay, orbits.

Everything structural stays exact (counts, cylinder frequencies, mixing
correlations, orbit coordinate sums over a common denominator); only the
convenience averages over large enumerations are reported as floats and
tagged as approximate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial, gcd

from . import mapcore, periodic, spectral, symbolic
from .errors import (
    DegenerateSeedError,
    EmptyClassError,
    InvariantViolationError,
    ResourceCapError,
)
from .rational import rat_str


@dataclass(frozen=True)
class Observable:
    """A function on the phase space, with its exact mean when known."""

    name: str
    evaluator: object  # Point -> value
    exact_mean: Fraction | None = None
    kind: str = "custom"
    index: int | None = None
    word: str | None = None

    def __call__(self, p):
        return self.evaluator(p)


def coordinate(j: int, dim: int) -> Observable:
    """The j-th coordinate (0-based).  Mean 0 for x1, 1/2 for the others."""
    if not 0 <= j < dim:
        raise ValueError("coordinate index out of range")
    mean = Fraction(0) if j == 0 else Fraction(1, 2)
    return Observable(
        name=f"x{j + 1}",
        evaluator=lambda p, j=j: p[j],
        exact_mean=mean,
        kind="coordinate",
        index=j,
    )


def coordinate_square(dim: int) -> Observable:
    """The square of the first coordinate; mean 1/3."""
    return Observable(
        name="x1^2",
        evaluator=lambda p: p[0] * p[0],
        exact_mean=Fraction(1, 3),
        kind="coordinate_square",
        index=0,
    )


def cylinder_indicator(word: str, dim: int) -> Observable:
    """Indicator of the cylinder [word]; mean 2^-len(word)."""
    rect = symbolic.rectangle(word, dim)
    return Observable(
        name=f"1[{word}]",
        evaluator=lambda p, rect=rect: Fraction(1 if rect.contains(p) else 0),
        exact_mean=Fraction(1, 2 ** len(word)),
        kind="indicator",
        word=word,
    )


def default_observables(dim: int) -> list[Observable]:
    obs = [coordinate(j, dim) for j in range(dim)]
    obs.append(coordinate_square(dim))
    return obs


def density_witness(
    prefix: str, dim: int, target_class: str
) -> periodic.PeriodicPointRecord:
    """A periodic point of the requested eigenvalue class inside [prefix].

    Appends the fewest R symbols that steer the twist to a residue forcing
    the class: 0 mod m (with at least one R overall) gives an all-real
    spectrum, 1 mod m gives a complex pair.  The extension refines the
    cylinder, so the returned point's itinerary starts with ``prefix``.
    """
    symbolic.check_word(prefix)
    mapcore.check_dim(dim)
    if target_class not in (spectral.REAL, spectral.COMPLEX):
        raise ValueError(f"target class must be real or complex, got {target_class!r}")
    t = symbolic.twist_number(prefix)
    target_residue = 0 if target_class == spectral.REAL else 1
    extra = (target_residue - t) % dim
    if t + extra == 0:
        extra += dim  # an all-L word names no periodic point
    word = prefix + "R" * extra
    record = periodic.record_for_word(word, dim)
    if record.eigen_class != target_class:
        raise InvariantViolationError(
            f"witness for {prefix!r} landed in class {record.eigen_class}"
        )
    if not record.word.startswith(prefix):
        raise InvariantViolationError("witness escaped the requested cylinder")
    return record


@dataclass(frozen=True)
class TheoremBConfig:
    """Block-length sequence for the biased-twist chi construction.

    Partial sums must be multiples of the dimension (that keeps the
    composed Jacobian diagonal at the sampled indices).
    """

    dim: int
    p_sequence: tuple[int, ...]

    def __post_init__(self):
        mapcore.check_dim(self.dim)
        if not self.p_sequence or any(p < 1 for p in self.p_sequence):
            raise ValueError("block lengths must be positive")
        partial = 0
        for p in self.p_sequence:
            partial += p
            if partial % self.dim:
                raise ValueError(
                    "every partial sum of the block sequence must be a "
                    "multiple of the dimension"
                )

    @classmethod
    def default(cls, dim: int, count: int) -> "TheoremBConfig":
        """Factorial blocks p_k = dim * k!: partial sums are multiples of
        dim and earlier blocks are negligible against the last."""
        return cls(dim, tuple(dim * factorial(k) for k in range(1, count + 1)))


@dataclass(frozen=True)
class ChiSequenceTerm:
    j: int
    word_length: int
    word: str
    chi_log2: Fraction
    bound_log2: Fraction

    def to_json(self) -> dict:
        return {
            "j": self.j,
            "word_length": self.word_length,
            "chi_log2": rat_str(self.chi_log2),
            "chi": 2.0 ** float(self.chi_log2),
            "bound_log2": rat_str(self.bound_log2),
            "bound": 2.0 ** float(self.bound_log2),
        }


MAX_CHI_WORD_SYMBOLS = 5000


def theorem_b_sequence(
    cfg: TheoremBConfig, count: int, max_symbols: int = MAX_CHI_WORD_SYMBOLS
) -> list[ChiSequenceTerm]:
    """Chi values and upper bounds along the biased-twist periodic words.

    The j-th word is L^(p1-1) R ... L^(pj-1) R, evaluated only at j a
    multiple of the dimension (where the composed Jacobian is diagonal).
    Each term satisfies 0 < chi_log2 <= (sum of earlier blocks + 1) /
    (total length), and the bounds strictly decrease: the expansion rate
    is squeezed toward 1 while staying above it.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    if count > len(cfg.p_sequence):
        raise ValueError("count exceeds the configured block sequence")
    total = sum(cfg.p_sequence[:count])
    if total > max_symbols:
        raise ResourceCapError(
            f"chi sequence needs {total} symbols, over the cap {max_symbols}"
        )
    terms: list[ChiSequenceTerm] = []
    word = ""
    partial = 0
    prev_bound: Fraction | None = None
    for j, p in enumerate(cfg.p_sequence[:count], start=1):
        word += "L" * (p - 1) + "R"
        earlier = partial
        partial += p
        if j % cfg.dim:
            continue
        if symbolic.prime_period(word) != len(word):
            raise InvariantViolationError(
                "biased word unexpectedly has a shorter repetition"
            )
        chi = spectral.chi_log2(word, cfg.dim)
        bound = Fraction(earlier + 1, partial)
        if not 0 < chi <= bound:
            raise InvariantViolationError(
                f"chi bound violated at j={j}: chi_log2={chi}, bound={bound}"
            )
        if prev_bound is not None and bound >= prev_bound:
            raise InvariantViolationError(f"chi bound failed to decrease at j={j}")
        prev_bound = bound
        terms.append(ChiSequenceTerm(j, len(word), word, chi, bound))
    return terms


@dataclass(frozen=True)
class ObservableStat:
    name: str
    average: float
    exact_mean: Fraction | None
    deviation: float | None

    def to_json(self) -> dict:
        return {
            "observable": self.name,
            "average": self.average,
            "exact_mean": None if self.exact_mean is None else rat_str(self.exact_mean),
            "deviation": self.deviation,
        }


@dataclass(frozen=True)
class EquidistReport:
    """Averages over one eigenvalue class of period-n points, plus the
    worst cylinder-frequency discrepancy up to a given depth."""

    period: int
    dim: int
    class_filter: str
    count: int
    stats: tuple[ObservableStat, ...]
    cylinder_depth: int
    discrepancy: Fraction
    worst_word: str

    def to_json(self) -> dict:
        return {
            "period": self.period,
            "dim": self.dim,
            "class": self.class_filter,
            "count": self.count,
            "observables": [s.to_json() for s in self.stats],
            "cylinder_depth": self.cylinder_depth,
            "discrepancy": float(self.discrepancy),
            "discrepancy_exact": rat_str(self.discrepancy),
            "worst_word": self.worst_word,
        }


def cylinder_discrepancy(
    words: list[str], depth: int
) -> tuple[Fraction, str]:
    """Worst |empirical cylinder frequency - 2^-k| over prefixes of length <= k.

    Exact: frequencies are counted, never rounded.
    """
    n_sel = len(words)
    if n_sel == 0:
        raise ValueError("no words to histogram")
    counts: dict[str, int] = {}
    for w in words:
        for k in range(1, depth + 1):
            if k > len(w):
                break
            key = w[:k]
            counts[key] = counts.get(key, 0) + 1
    worst = Fraction(0)
    worst_word = ""
    for k in range(1, depth + 1):
        ideal = Fraction(1, 2**k)
        for prefix in symbolic.all_words(k):
            dev = abs(Fraction(counts.get(prefix, 0), n_sel) - ideal)
            if dev > worst:
                worst, worst_word = dev, prefix
    return worst, worst_word


def equidistribution_report(
    n: int,
    dim: int,
    class_filter: str = "all",
    observables: list[Observable] | None = None,
    cylinder_depth: int = 3,
    records: list[periodic.PeriodicPointRecord] | None = None,
) -> EquidistReport:
    """Empirical means over the period-n points of one eigenvalue class.

    Averages are reported as floats (approximate); cylinder frequencies
    and their discrepancy are exact.  An empty class raises rather than
    returning silent zeros.
    """
    if class_filter not in spectral.CLASS_FILTERS:
        raise ValueError(f"unknown class filter {class_filter!r}")
    if records is None:
        records = periodic.enumerate_fix(n, dim)
    if class_filter == "all":
        selected = records
    else:
        selected = [r for r in records if r.eigen_class == class_filter]
    if not selected:
        raise EmptyClassError(
            f"fix_{class_filter}({n}) is empty in dimension {dim}: "
            "undefined at this period"
        )
    if observables is None:
        observables = default_observables(dim)
    stats = []
    for obs in observables:
        if obs.kind == "indicator":
            hits = sum(1 for r in selected if r.word.startswith(obs.word))
            avg = hits / len(selected)
        else:
            avg = sum(float(obs(r.point)) for r in selected) / len(selected)
        dev = None if obs.exact_mean is None else abs(avg - float(obs.exact_mean))
        stats.append(ObservableStat(obs.name, avg, obs.exact_mean, dev))
    disc, worst_word = cylinder_discrepancy(
        [r.word for r in selected], min(cylinder_depth, n)
    )
    return EquidistReport(
        period=n,
        dim=dim,
        class_filter=class_filter,
        count=len(selected),
        stats=tuple(stats),
        cylinder_depth=min(cylinder_depth, n),
        discrepancy=disc,
        worst_word=worst_word,
    )


def mixing_correlation(u: str, v: str, n_max: int) -> list[tuple[int, Fraction]]:
    """Exact correlations m([u] & F^-n [v]) - m([u]) m([v]) for n = 0..n_max.

    Identically zero once n reaches len(u): the symbol windows decouple.
    """
    symbolic.check_word(u)
    symbolic.check_word(v)
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    product = Fraction(1, 2 ** (len(u) + len(v)))
    return [
        (n, symbolic.intersection_measure(u, n, v) - product)
        for n in range(n_max + 1)
    ]


@dataclass(frozen=True)
class BirkhoffReport:
    """Exact time averages along one orbit."""

    seed: mapcore.Point
    steps: int
    stats: tuple[ObservableStat, ...]
    r_frequency: Fraction

    def to_json(self) -> dict:
        return {
            "seed": [rat_str(c) for c in self.seed],
            "steps": self.steps,
            "observables": [s.to_json() for s in self.stats],
            "r_frequency": float(self.r_frequency),
            "r_frequency_exact": rat_str(self.r_frequency),
        }


def birkhoff_average(
    seed,
    steps: int,
    observables: list[Observable] | None = None,
    dim: int | None = None,
) -> BirkhoffReport:
    """Average observables along an exact orbit of ``steps`` map iterations.

    The seed must have odd coordinate denominators: doubling then keeps
    the whole orbit over one fixed odd denominator, so the iteration runs
    on integer numerators and every average is an exact rational.  Seeds
    on the fixed face x1 = -1 are rejected; an orbit that reaches that
    face later stops with an explicit error.
    """
    p = mapcore.as_point(seed, dim)
    m = len(p)
    if steps < 1:
        raise ValueError("steps must be >= 1")
    den = 1
    for c in p:
        if c.denominator % 2 == 0:
            raise DegenerateSeedError(
                f"coordinate {c} has an even denominator; the orbit would "
                "hit a dyadic boundary"
            )
        den = den * c.denominator // gcd(den, c.denominator)
    if p[0] == -1:
        raise DegenerateSeedError("seed lies on the fixed face x1 = -1")
    if observables is None:
        observables = default_observables(m)
    u = [int(c * den) for c in p]
    coord_sums = [0] * m
    square_sum = 0
    custom: list[tuple[int, Observable]] = []
    needs_point = False
    for i, obs in enumerate(observables):
        if obs.kind not in ("coordinate", "coordinate_square"):
            custom.append((i, obs))
            needs_point = True
    custom_sums = [Fraction(0)] * len(observables)
    r_count = 0
    for step in range(steps):
        if u[0] < 0:
            u = [den + 2 * u[0]] + u[1:]
        else:
            u = [den - 2 * u[-1]] + u[:-1]
            r_count += 1
        if u[0] == -den:
            raise DegenerateSeedError(
                f"orbit reached the fixed face x1 = -1 at step {step + 1}; "
                "the seed lies in its preimage tree"
            )
        for j in range(m):
            coord_sums[j] += u[j]
        square_sum += u[0] * u[0]
        if needs_point:
            pt = tuple(Fraction(x, den) for x in u)
            for i, obs in custom:
                custom_sums[i] += Fraction(obs(pt))
    stats = []
    for i, obs in enumerate(observables):
        if obs.kind == "coordinate":
            avg_exact = Fraction(coord_sums[obs.index], steps * den)
        elif obs.kind == "coordinate_square":
            avg_exact = Fraction(square_sum, steps * den * den)
        else:
            avg_exact = custom_sums[i] / steps
        avg = float(avg_exact)
        dev = None if obs.exact_mean is None else abs(avg - float(obs.exact_mean))
        stats.append(ObservableStat(obs.name, avg, obs.exact_mean, dev))
    return BirkhoffReport(
        seed=p,
        steps=steps,
        stats=tuple(stats),
        r_frequency=Fraction(r_count, steps),
    )
