"""Named check suites: every computable claim, runnable from the CLI.

Each suite returns a list of named pass/fail results.  The checks are
exact wherever the underlying quantity is exact; the few float
comparisons (trig closed forms, empirical averages) carry the explicit
tolerances stated in their check names.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import counting, mapcore, periodic, spectral, stats, symbolic

SUITES = ("lemmas", "theoremA", "theoremB", "theoremC", "theoremD", "all")


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def _check(name: str, passed: bool, detail: str = "") -> CheckResult:
    return CheckResult(name, bool(passed), detail)


def _words_up_to(max_len: int):
    for n in range(1, max_len + 1):
        yield from symbolic.all_words(n)


def suite_lemmas(dim: int, max_period: int) -> list[CheckResult]:
    """Structural word-level laws: twist residues, rectangles, counts."""
    out = []
    word_len = min(max_period, 10)

    diag_ok = sign_ok = complex_ok = True
    for w in _words_up_to(word_len):
        t = symbolic.twist_number(w)
        if t == 0:
            continue
        mm = spectral.monomial_of_word(w, dim)
        r = t % dim
        if r == 0:
            if mm.shift != 0:
                diag_ok = False
            expected_sign = -1 if (t // dim) % 2 else 1
            if any(s != expected_sign for s in mm.signs):
                sign_ok = False
        elif r in (1, dim - 1):
            if spectral.classify(w, dim) != spectral.COMPLEX:
                complex_ok = False
    out.append(
        _check(
            f"twist multiple of m gives a diagonal Jacobian (words <= {word_len})",
            diag_ok,
        )
    )
    out.append(
        _check(
            "diagonal sign is (-1)^(twist/m) uniformly",
            sign_ok,
        )
    )
    out.append(
        _check(
            "twist residue 1 or m-1 forces a complex pair",
            complex_ok,
        )
    )

    rect_len = min(max_period, 8)
    p14_ok = all(
        symbolic.rectangle(w, dim).measure == Fraction(1, 2 ** len(w))
        for w in _words_up_to(rect_len)
    )
    out.append(
        _check(f"cylinder measure is 2^-n exactly (words <= {rect_len})", p14_ok)
    )
    refine_ok = True
    for w in _words_up_to(rect_len - 1):
        left, right = symbolic.refine(w, dim)
        if left.measure + right.measure != symbolic.rectangle(w, dim).measure:
            refine_ok = False
    out.append(_check("one-symbol refinement splits the measure in half", refine_ok))
    shift_ok = all(
        symbolic.image_shift_check(w, n, dim)
        for w in _words_up_to(min(rect_len, 6))
        for n in range(len(w))
    )
    out.append(_check("n-step images are the shifted cylinders", shift_ok))

    tri_ok = True
    bound_ok = True
    for n in range(1, min(max_period * 2, 30) + 1):
        try:
            counting.proportion_report(n, dim)
        except Exception:
            tri_ok = False
            bound_ok = False
    out.append(_check("multisection trig closed form agrees (rel 1e-6)", tri_ok))
    out.append(
        _check("residue shares within the explicit deviation bound", bound_ok)
    )
    out.append(classification_oracle_check(dim, min(word_len, 8)))
    return out


def suite_theorem_a(dim: int, max_period: int) -> list[CheckResult]:
    """Enumeration: cardinality, exactness, hyperbolicity, class density."""
    out = []
    count_ok = distinct_ok = True
    moduli_ok = True
    containment_ok = True
    for n in range(1, max_period + 1):
        records = periodic.enumerate_fix(n, dim)
        if len(records) != 2**n - 1:
            count_ok = False
        if len({r.point for r in records}) != len(records):
            distinct_ok = False
        for r in records:
            mm = spectral.monomial_of_word(r.word, dim)
            if any(c.exponent < 1 for c in spectral.cycle_decomposition(mm)):
                moduli_ok = False
        for r in records[:: max(1, len(records) // 16)]:
            rect = symbolic.rectangle(r.word, dim)
            if not rect.contains_in_closure(r.point):
                containment_ok = False
    out.append(
        _check(
            f"exactly 2^n - 1 periodic points for n <= {max_period}", count_ok
        )
    )
    out.append(_check("solved periodic points are pairwise distinct", distinct_ok))
    out.append(
        _check(
            "every return Jacobian cycle carries exponent >= 1 "
            "(all eigenvalue moduli > 1)",
            moduli_ok,
        )
    )
    out.append(_check("each point lies in its own cylinder", containment_ok))

    witness_ok = True
    for prefix in ("LR", "RL", "RRL", "LLRL"):
        for target in (spectral.REAL, spectral.COMPLEX):
            rec = stats.density_witness(prefix, dim, target)
            if rec.eigen_class != target or not rec.word.startswith(prefix):
                witness_ok = False
    out.append(
        _check("both eigenvalue classes reachable inside any cylinder", witness_ok)
    )
    return out


def suite_theorem_b(dim: int, max_period: int) -> list[CheckResult]:
    """Biased words squeeze the expansion rate toward 1 from above."""
    # Factorial blocks explode quickly; sample fewer indices as the
    # dimension grows so the words stay materializable.
    if dim == 2:
        count = 6
    elif dim <= 4:
        count = 2 * dim
    else:
        count = dim
    cfg = stats.TheoremBConfig.default(dim, count)
    terms = stats.theorem_b_sequence(cfg, count, max_symbols=2_000_000)
    return [
        _check(
            "chi bounds positive, bounding, and strictly decreasing",
            len(terms) == count // dim,
            "; ".join(
                f"j={t.j}: log2(chi)={t.chi_log2} <= {t.bound_log2}" for t in terms
            ),
        )
    ]


def suite_theorem_c(dim: int, max_period: int) -> list[CheckResult]:
    """Both eigenvalue classes equidistribute; class counts match closed forms."""
    out = []
    n = max_period
    records = periodic.enumerate_fix(n, dim)
    if dim <= 3:
        real_direct = sum(1 for r in records if r.eigen_class == spectral.REAL)
        real_formula = counting.multisection(n, dim, 0) - 1
        out.append(
            _check(
                f"all-real count at n={n} equals the residue-0 multisection - 1",
                real_direct == real_formula,
                f"{real_direct} points",
            )
        )
    for cls in (spectral.REAL, spectral.COMPLEX):
        report = stats.equidistribution_report(
            n, dim, cls, cylinder_depth=3, records=records
        )
        dev = max(s.deviation for s in report.stats if s.deviation is not None)
        tol = 0.05 if n >= 10 else 0.35
        out.append(
            _check(
                f"class {cls} at n={n}: averages within {tol} of the space means",
                dev <= tol,
                f"worst deviation {dev:.2e}",
            )
        )
        out.append(
            _check(
                f"class {cls} at n={n}: depth-3 cylinder discrepancy <= {tol}",
                float(report.discrepancy) <= tol,
                f"discrepancy {float(report.discrepancy):.2e}",
            )
        )
    direct = periodic.count_prime_fix(n, dim, records=records)
    out.append(
        _check(
            f"prime-period count at n={n} matches inclusion-exclusion",
            direct == periodic.prime_fix_count_formula(n),
            f"{direct} primitive points",
        )
    )
    return out


def suite_theorem_d(dim: int, max_period: int) -> list[CheckResult]:
    """Cylinder correlations vanish exactly once the windows decouple."""
    out = []
    tail_ok = True
    value_ok = True
    max_len = 4
    for u, v in itertools.product(list(_words_up_to(max_len)), repeat=2):
        series = stats.mixing_correlation(u, v, len(u) + 2)
        for n, corr in series:
            if n >= len(u) and corr != 0:
                tail_ok = False
            if n <= 3 and len(u) <= 3 and len(v) <= 3:
                geo = symbolic.intersection_measure_geometric(u, n, v, dim)
                if geo - Fraction(1, 2 ** (len(u) + len(v))) != corr:
                    value_ok = False
    out.append(
        _check(
            f"correlations are exactly 0 for n >= len(u) (words <= {max_len})",
            tail_ok,
        )
    )
    out.append(
        _check("symbolic correlations match rectangle geometry", value_ok)
    )
    q = 10**9 + 7
    seed = tuple(
        Fraction((357913941 + 119304647 * j) % q, q) for j in range(dim)
    )
    report = stats.birkhoff_average(seed, 20000)
    dev = max(s.deviation for s in report.stats if s.deviation is not None)
    freq_ok = dev <= 0.05 and abs(float(report.r_frequency) - 0.5) <= 0.05
    out.append(
        _check(
            "exact orbit averages near the space means (2e4 steps, tol 0.05)",
            freq_ok,
            f"worst deviation {dev:.2e}, R-frequency {float(report.r_frequency):.4f}",
        )
    )
    return out


def run_suite(suite: str, dim: int, max_period: int = 10) -> list[CheckResult]:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {SUITES}")
    mapcore.check_dim(dim)
    runners = {
        "lemmas": suite_lemmas,
        "theoremA": suite_theorem_a,
        "theoremB": suite_theorem_b,
        "theoremC": suite_theorem_c,
        "theoremD": suite_theorem_d,
    }
    if suite == "all":
        out = []
        for name in SUITES[:-1]:
            out.extend(runners[name](dim, max_period))
        return out
    return runners[suite](dim, max_period)


def classification_oracle_check(dim: int, max_len: int) -> CheckResult:
    """Cross-check the exact classification against a float eigensolver."""
    disagreements = 0
    total = 0
    for w in _words_up_to(max_len):
        if set(w) == {"L"}:
            continue
        dense = np.array(spectral.monomial_of_word(w, dim).dense(), dtype=float)
        eig = np.linalg.eigvals(dense)
        numeric = (
            spectral.COMPLEX
            if bool(np.any(np.abs(eig.imag) > 1e-9))
            else spectral.REAL
        )
        total += 1
        if numeric != spectral.classify(w, dim):
            disagreements += 1
    return _check(
        f"exact classification matches the float eigensolver "
        f"({total} words, threshold 1e-9)",
        disagreements == 0,
        f"{disagreements} disagreements",
    )
