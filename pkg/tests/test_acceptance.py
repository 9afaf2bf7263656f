"""Acceptance suite: one test per criterion, one printed line per criterion.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the line per
criterion as it completes.  Every tolerance is pinned here; nothing is
deferred to later calibration.
"""

import itertools
import time
from fractions import Fraction
from random import Random

import pytest

from twistbaker import counting, mapcore, periodic, spectral, stats, symbolic

from conftest import (
    cached_rectangle,
    numpy_classify,
    orbit_roundtrip_ok,
    pascal_multisection,
)

F = Fraction

ENUM_SWEEPS = {2: 16, 3: 12, 4: 12}


def _report(num: int, description: str, failure: str | None = None):
    status = "FAIL" if failure else "PASS"
    print(f"CRITERION {num:02d} {status}  {description}")
    if failure:
        pytest.fail(f"criterion {num}: {failure}", pytrace=False)


def test_c01_cardinality_and_roundtrip(enum):
    start = time.perf_counter()
    for dim, n_max in ENUM_SWEEPS.items():
        for n in range(1, n_max + 1):
            records = enum(n, dim)
            assert len(records) == 2**n - 1, (dim, n)
            assert len({r.point for r in records}) == len(records), (dim, n)
            stride = 1 if n <= 10 else 101
            for rec in records[::stride]:
                assert orbit_roundtrip_ok(rec), rec.word
    elapsed = time.perf_counter() - start
    failure = None
    if elapsed > 300:
        failure = f"sweep took {elapsed:.0f}s, over the 5-minute budget"
    _report(
        1,
        "2^n - 1 distinct exact periodic points, closing up under iteration "
        f"(m=2 n<=16, m=3,4 n<=12; {elapsed:.0f}s)",
        failure,
    )


def test_c02_hyperbolic_repelling(enum):
    exceptions = 0
    for dim, n_max in ENUM_SWEEPS.items():
        for n in range(1, n_max + 1):
            for rec in enum(n, dim):
                mm = spectral.monomial_of_word(rec.word, dim)
                cycles = spectral.cycle_decomposition(mm)
                if any(c.exponent < 1 for c in cycles):
                    exceptions += 1
                rep = spectral.eigen_report(mm, n)
                if min(rep.moduli_log2) <= 0:
                    exceptions += 1
    _report(
        2,
        "every enumerated point is hyperbolic repelling (all cycle "
        "exponents >= 1, hence all eigenvalue moduli > 1)",
        None if exceptions == 0 else f"{exceptions} exceptions",
    )


def test_c03_twist_residue_laws():
    bad = []
    for dim in (2, 3, 4, 5):
        for n in range(1, 13):
            for word in symbolic.all_words(n):
                t = word.count("R")
                if t == 0:
                    continue
                r = t % dim
                mm = spectral.monomial_of_word(word, dim)
                if r == 0:
                    expected = -1 if (t // dim) % 2 else 1
                    if mm.shift != 0 or any(s != expected for s in mm.signs):
                        bad.append((dim, word))
                elif r in (1, dim - 1):
                    if spectral.classify(word, dim) != spectral.COMPLEX:
                        bad.append((dim, word))
    _report(
        3,
        "twist residue 0 mod m gives a uniform-sign diagonal; residues 1 "
        "and m-1 force a complex pair (words <= 12, m = 2..5)",
        None if not bad else f"{len(bad)} violations, first {bad[0]}",
    )


def test_c04_classifier_matches_float_eigensolver():
    disagreements = 0
    for dim in (2, 3, 4):
        for n in range(1, 13):
            for word in symbolic.all_words(n):
                if set(word) == {"L"}:
                    continue
                if numpy_classify(word, dim) != spectral.classify(word, dim):
                    disagreements += 1
    _report(
        4,
        "exact classification agrees with the float eigensolver "
        "(threshold 1e-9; words <= 12, m <= 4)",
        None if disagreements == 0 else f"{disagreements} disagreements",
    )


def test_c05_multisection_identity_and_histograms(enum):
    bad = None
    for m in range(2, 8):
        for n in range(0, 51):
            for r in range(m):
                # multisection() itself asserts the trig agreement at 1e-6.
                if counting.multisection(n, m, r) != pascal_multisection(n, m, r):
                    bad = f"binomial mismatch at {(n, m, r)}"
    sweeps = [(2, n) for n in list(range(1, 17)) + [18]]
    sweeps += [(3, n) for n in range(1, 15)]
    sweeps += [(4, n) for n in range(1, 13)]
    for dim, n in sweeps:
        hist = {}
        for rec in enum(n, dim):
            hist[rec.twist % dim] = hist.get(rec.twist % dim, 0) + 1
        for r in range(dim):
            if hist.get(r, 0) != counting.fix_count_residue(n, dim, r):
                bad = f"histogram mismatch at n={n}, m={dim}, r={r}"
    _report(
        5,
        "binomial multisection equals the trig closed form (n <= 50, "
        "m <= 7) and the twist histograms of full enumerations",
        bad,
    )


def test_c06_proportion_bound():
    bad = None
    for m in range(2, 8):
        for n in range(1, 41):
            total = 2**n - 1
            bound = counting.residue_bound(n, m)
            for r in range(m):
                share = F(counting.fix_count_residue(n, m, r), total)
                if abs(float(share - F(1, m))) > bound:
                    bad = f"bound violated at n={n}, m={m}, r={r}"
    _report(
        6,
        "every twist-residue share is within (m-1)/m cos(pi/m)^n + "
        "2/(2^n - 1) of 1/m (n <= 40, m <= 7)",
        bad,
    )


def test_c07_exact_class_counts(enum):
    bad = None
    for dim in (2, 3):
        for n in range(1, 15):
            records = enum(n, dim)
            real = sum(1 for r in records if r.eigen_class == spectral.REAL)
            cplx = len(records) - real
            if real != counting.multisection(n, dim, 0) - 1:
                bad = f"real count off at n={n}, m={dim}"
            if cplx != 2**n - counting.multisection(n, dim, 0):
                bad = f"complex count off at n={n}, m={dim}"
            if dim == 2 and (real != 2 ** (n - 1) - 1 or cplx != 2 ** (n - 1)):
                bad = f"dim-2 closed form off at n={n}"
    _report(
        7,
        "class counts match the residue-0 multisection exactly "
        "(m = 2, 3; n <= 14)",
        bad,
    )


def test_c08_equidistribution_at_period_18(enum):
    failures = []
    for cls in (spectral.REAL, spectral.COMPLEX):
        report = stats.equidistribution_report(
            18, 2, cls, cylinder_depth=4, records=list(enum(18, 2))
        )
        by_name = {s.name: s for s in report.stats}
        if abs(by_name["x1"].average) > 0.01:
            failures.append(f"{cls}: |mean x1| = {abs(by_name['x1'].average):.2e}")
        if abs(by_name["x2"].average - 0.5) > 0.01:
            failures.append(f"{cls}: mean x2 off by {by_name['x2'].deviation:.2e}")
        if float(report.discrepancy) > 0.02:
            failures.append(
                f"{cls}: depth-4 discrepancy {float(report.discrepancy):.2e}"
            )
        # Backup trend: the depth-3 discrepancy shrinks through the periods
        # 8, 12, 16, 18 (non-strict, 1e-3 slack).
        trend = [
            float(
                stats.equidistribution_report(
                    n, 2, cls, cylinder_depth=3, records=list(enum(n, 2))
                ).discrepancy
            )
            for n in (8, 12, 16, 18)
        ]
        if any(b > a + 1e-3 for a, b in zip(trend, trend[1:])):
            failures.append(f"{cls}: discrepancy trend not decreasing {trend}")
    _report(
        8,
        "period-18 class averages within 0.01, depth-4 cylinder "
        "discrepancy within 0.02, and a decreasing depth-3 trend over "
        "n = 8, 12, 16, 18 (m = 2)",
        "; ".join(failures) if failures else None,
    )


def test_c09_chi_decay_on_biased_words():
    cfg = stats.TheoremBConfig.default(2, 6)
    terms = stats.theorem_b_sequence(cfg, 6)
    failures = []
    if [t.j for t in terms] != [2, 4, 6]:
        failures.append(f"sampled indices {[t.j for t in terms]}")
    for t in terms:
        if not 0 < t.chi_log2 <= t.bound_log2:
            failures.append(f"j={t.j}: chi {t.chi_log2} vs bound {t.bound_log2}")
    bounds = [t.bound_log2 for t in terms]
    if not all(a > b for a, b in zip(bounds, bounds[1:])):
        failures.append(f"bounds not strictly decreasing: {bounds}")
    final = bounds[-1]
    if final > F(3, 100):
        failures.append(
            f"final bound {final} = {float(final):.4f} exceeds 0.03 "
            "(factorial blocks give exactly 307/1746 at j=6)"
        )
    _report(
        9,
        "chi bounds positive, decreasing, and finally <= 0.03 on the "
        "factorial-block words (j = 2, 4, 6)",
        "; ".join(failures) if failures else None,
    )


def test_c10_mixing_exact():
    words = [w for n in range(1, 7) for w in symbolic.all_words(n)]
    bad = None
    for u in words:
        for v in words:
            for n, corr in stats.mixing_correlation(u, v, len(u)):
                if n >= len(u) and corr != 0:
                    bad = f"nonzero tail at u={u}, v={v}, n={n}"
    small = [w for n in range(1, 5) for w in symbolic.all_words(n)]
    product = lambda u, v: F(1, 2 ** (len(u) + len(v)))
    for u in small:
        for v in small:
            for n in range(0, len(u) + 1):
                sym = symbolic.intersection_measure(u, n, v)
                geo = symbolic.intersection_measure_geometric(u, n, v, 2)
                if sym != geo:
                    bad = f"geometry mismatch at u={u}, v={v}, n={n}"
    _report(
        10,
        "cylinder correlations vanish exactly for n >= len(u) (words <= 6) "
        "and match rectangle geometry (words <= 4)",
        bad,
    )


def test_c11_rectangle_properties():
    bad = None
    rng = Random(2024)
    for dim in (2, 3):
        for n in range(1, 11):
            for word in symbolic.all_words(n):
                rect = cached_rectangle(word, dim)
                if rect.measure != F(1, 2**n):
                    bad = f"measure off for {word}, m={dim}"
                if n < 10:
                    left = cached_rectangle(word + "L", dim)
                    right = cached_rectangle(word + "R", dim)
                    if left.measure + right.measure != rect.measure:
                        bad = f"refinement measure off for {word}"
                    iv, il, ir = rect.intervals, left.intervals, right.intervals
                    for j in range(dim):
                        lo = min(il[j].lo, ir[j].lo)
                        hi = max(il[j].hi, ir[j].hi)
                        if (lo, hi) != (iv[j].lo, iv[j].hi):
                            bad = f"refinement union off for {word}"
                for k in range(n):
                    if not symbolic.image_shift_check(word, k, dim):
                        bad = f"shift image off for {word} at {k}"
        short = [w for n in range(1, 7) for w in symbolic.all_words(n)]
        for u in short:
            for v in short:
                if not symbolic.nested_or_disjoint(u, v, dim):
                    bad = f"nesting violated for {u}, {v}, m={dim}"
        long_words = [w for n in range(7, 11) for w in symbolic.all_words(n)]
        for _ in range(3000):
            u, v = rng.choice(long_words), rng.choice(long_words)
            if not symbolic.nested_or_disjoint(u, v, dim):
                bad = f"nesting violated for {u}, {v}, m={dim}"
    _report(
        11,
        "refinement, shift images, nesting/disjointness, and 2^-n measures "
        "hold exactly (words <= 10, m = 2, 3)",
        bad,
    )


def test_c12_prime_period_counts(enum):
    bad = None
    for dim in (2, 3):
        for n in range(1, 15):
            records = list(enum(n, dim))
            direct = sum(1 for r in records if r.prime_period == n)
            if direct != periodic.prime_fix_count_formula(n):
                bad = f"inclusion-exclusion mismatch at n={n}, m={dim}"
    for n in range(4, 15):
        records = list(enum(n, 2))
        for cls in (spectral.REAL, spectral.COMPLEX):
            count = periodic.count_prime_fix(n, 2, cls, records=records)
            if count <= 0:
                bad = f"no primitive {cls} points at n={n}"
    _report(
        12,
        "prime-period counts match inclusion-exclusion (n <= 14, m = 2, 3); "
        "both classes keep primitive points for 4 <= n <= 14 (m = 2)",
        bad,
    )


def test_c13_exact_orbit_averages():
    seeds = [
        (F(357913941, 10**9 + 7), F(715827882, 10**9 + 7)),
        (F(123456789012, 10**12 + 39), F(987654321098, 10**12 + 39)),
        (F(3**31 * 2 // 7, 3**31), F(3**31 * 3 // 11, 3**31)),
        (F(5**19 * 5 // 13, 5**19), F(5**19 * 4 // 9, 5**19)),
        (F(7**17 * 3 // 8, 7**17), F(7**17 * 5 // 12, 7**17)),
    ]
    failures = []
    start = time.perf_counter()
    for seed in seeds:
        report = stats.birkhoff_average(seed, 100000)
        by_name = {s.name: s for s in report.stats}
        freq = float(report.r_frequency)
        if abs(by_name["x1"].average) > 0.02:
            failures.append(f"{seed[0].denominator}: x1 {by_name['x1'].average:.4f}")
        if abs(by_name["x2"].average - 0.5) > 0.02:
            failures.append(f"{seed[0].denominator}: x2 {by_name['x2'].average:.4f}")
        if not 0.48 <= freq <= 0.52:
            failures.append(f"{seed[0].denominator}: freq(R) {freq:.4f}")
    elapsed = time.perf_counter() - start
    if elapsed > 60:
        failures.append(f"runtime {elapsed:.0f}s over the 1-minute budget")
    _report(
        13,
        "five exact 1e5-step orbits: |mean x1| <= 0.02, |mean x2 - 1/2| "
        f"<= 0.02, R-frequency in [0.48, 0.52] ({elapsed:.0f}s)",
        "; ".join(failures) if failures else None,
    )
