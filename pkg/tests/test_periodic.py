"""Periodic-point solving and enumeration: exactness end to end."""

from fractions import Fraction

import pytest

from twistbaker import mapcore, periodic, spectral, symbolic
from twistbaker.errors import ResourceCapError, SingularWordError

from conftest import cached_rectangle, orbit_roundtrip_ok

F = Fraction


def test_compose_affine_examples():
    lr = periodic.compose_affine("LR", 2)
    assert lr.matrix == ((0, -2), (2, 0))
    assert lr.offset == (1, 1)

    rr = periodic.compose_affine("RR", 2)
    assert rr.matrix == ((-2, 0), (0, -2))
    assert rr.offset == (1, 1)

    rrr = periodic.compose_affine("RRR", 3)
    assert rrr.matrix == ((-2, 0, 0), (0, -2, 0), (0, 0, -2))
    assert rrr.offset == (1, 1, 1)


@pytest.mark.parametrize("dim", [2, 3])
def test_composition_determinant_is_two_to_the_n(dim):
    for n in range(1, 7):
        for word in symbolic.all_words(n):
            assert abs(periodic.compose_affine(word, dim).determinant()) == 2**n


@pytest.mark.parametrize("dim", [2, 3])
def test_composition_acts_like_iterated_map(dim):
    for word in symbolic.all_words(5):
        aff = periodic.compose_affine(word, dim)
        p = symbolic.point_from_prefix(word, dim)
        q = p
        for _ in range(len(word)):
            q = mapcore.apply(q)
        assert aff(p) == q


def test_solve_periodic_examples():
    assert periodic.solve_periodic("R", 2) == (F(1, 3), F(1, 3))
    assert periodic.solve_periodic("LR", 2) == (F(-1, 5), F(3, 5))
    with pytest.raises(SingularWordError):
        periodic.solve_periodic("LL", 2)


@pytest.mark.parametrize("dim,max_len", [(2, 9), (3, 6)])
def test_solved_points_close_up_under_iteration(dim, max_len):
    for n in range(1, max_len + 1):
        for word in symbolic.all_words(n):
            if set(word) == {"L"}:
                continue
            p = periodic.solve_periodic(word, dim)
            assert mapcore.kneading_prefix(p, n) == word
            q = p
            for _ in range(n):
                q = mapcore.apply(q)
            assert q == p


def test_enumerate_small_periods():
    recs1 = periodic.enumerate_fix(1, 2)
    assert [(r.word, r.point) for r in recs1] == [("R", (F(1, 3), F(1, 3)))]

    recs2 = periodic.enumerate_fix(2, 2)
    assert [(r.word, r.point) for r in recs2] == [
        ("LR", (F(-1, 5), F(3, 5))),
        ("RL", (F(3, 5), F(3, 5))),
        ("RR", (F(1, 3), F(1, 3))),
    ]

    recs3 = periodic.enumerate_fix(3, 2)
    assert len(recs3) == 7
    assert len({r.point for r in recs3}) == 7


@pytest.mark.parametrize("dim", [2, 3])
def test_enumeration_counts_and_distinctness(dim):
    for n in range(1, 11):
        records = periodic.enumerate_fix(n, dim)
        assert len(records) == 2**n - 1
        assert len({r.point for r in records}) == len(records)
        assert all(r.twist >= 1 for r in records)
        assert all(r.point[0] not in (0, -1) for r in records)


def test_enumeration_is_lexicographic():
    records = periodic.enumerate_fix(4, 2)
    words = [r.word for r in records]
    assert words == sorted(words)
    assert "LLLL" not in words


def test_records_verified_by_independent_iteration():
    for r in periodic.enumerate_fix(7, 2):
        assert orbit_roundtrip_ok(r)


def test_divisor_periods_nest():
    points6 = {r.point for r in periodic.enumerate_fix(6, 2)}
    for d in (1, 2, 3):
        assert {r.point for r in periodic.enumerate_fix(d, 2)} <= points6


def test_points_sit_in_their_cylinders():
    for r in periodic.enumerate_fix(6, 2):
        assert cached_rectangle(r.word, 2).contains_in_closure(r.point)
    for r in periodic.enumerate_fix(4, 3):
        assert cached_rectangle(r.word, 3).contains_in_closure(r.point)


def test_record_fields():
    rec = next(r for r in periodic.enumerate_fix(2, 2) if r.word == "RR")
    assert rec.twist == 2
    assert rec.prime_period == 1
    assert rec.eigen_class == spectral.REAL  # -2I over two steps
    assert rec.chi_log2 == F(1, 2)  # from the one-step return map
    data = rec.to_json()
    assert data == {
        "word": "RR",
        "point": ["1/3", "1/3"],
        "twist": 2,
        "prime_period": 1,
        "eigen_class": "real",
        "chi_log2": "1/2",
    }


def test_parallel_enumeration_is_bit_identical():
    sequential = periodic.enumerate_fix(12, 2)
    parallel = periodic.enumerate_fix(12, 2, workers=2)
    assert sequential == parallel


def test_enumeration_cap_and_override(monkeypatch):
    with pytest.raises(ResourceCapError):
        periodic.enumerate_fix(19, 2)
    monkeypatch.setenv(periodic.ENV_MAX_PERIOD, "3")
    with pytest.raises(ResourceCapError):
        periodic.enumerate_fix(4, 2)
    # Explicit argument outranks the environment.
    assert len(periodic.enumerate_fix(4, 2, max_period=5)) == 15


def test_mobius():
    values = {1: 1, 2: -1, 3: -1, 4: 0, 5: -1, 6: 1, 12: 0, 30: -1}
    for k, v in values.items():
        assert periodic.mobius(k) == v


def test_prime_fix_counts():
    assert periodic.count_prime_fix(1, 2) == 1
    assert periodic.count_prime_fix(2, 2) == 2  # the two-cycle LR / RL
    assert periodic.count_prime_fix(4, 2) == 12
    assert periodic.prime_fix_count_formula(4) == (2**4 - 1) - (2**2 - 1)


def test_prime_fix_class_counts_depend_on_period():
    # The period-2 primitive points both carry a complex pair.
    assert periodic.count_prime_fix(2, 2, spectral.REAL) == 0
    assert periodic.count_prime_fix(2, 2, spectral.COMPLEX) == 2
    # At period 3 both classes appear among primitive points.
    assert periodic.count_prime_fix(3, 2, spectral.REAL) == 3
    assert periodic.count_prime_fix(3, 2, spectral.COMPLEX) == 3
