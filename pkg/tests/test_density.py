import math
from fractions import Fraction

import pytest

from polytot import Polynomial, density_trace, scan_densities
from polytot.density import report_rows

from conftest import corpus, oracle_multiplicity_roots, oracle_primes

X2P1 = Polynomial((1, 0, 1))
X3M2 = Polynomial((-2, 0, 0, 1))
X4P1 = Polynomial((1, 0, 0, 0, 1))

# frozen after a first run; the hand value 22/24 below pins the same scan
ALPHA0_SEQUENCE = {
    100: 0.54166666666666663,
    10**4: 0.50407166123778502,
    10**6: 0.50093634151623634,
}


def test_quadratic_at_100_by_hand():
    # primes 3 mod 4 vs 1 mod 4 up to 100; p=2 excluded (p <= d)
    rep = scan_densities(X2P1, 100)
    assert rep.counts == (13, 0, 11)
    assert rep.total == 24
    assert rep.excluded == (2,)
    assert rep.weighted_sum_exact() == Fraction(22, 24)
    assert abs(rep.weighted_sum - 22 / 24) < 1e-15


def test_classes_match_independent_enumeration():
    rep = scan_densities(X2P1, 1000)
    g_by_hand = [oracle_multiplicity_roots(X2P1.coeffs, p) for p in oracle_primes(1000)[1:]]
    assert rep.counts[0] == sum(1 for g in g_by_hand if g == 0)
    assert rep.counts[2] == sum(1 for g in g_by_hand if g == 2)
    assert rep.total == len(g_by_hand)


def test_linear_polynomial_is_all_ones():
    rep = scan_densities(Polynomial((0, 1)), 100)
    assert rep.counts == (0, 25)
    assert rep.alpha_hat == (0.0, 1.0)
    assert rep.excluded == ()
    assert rep.weighted_sum == 1.0


def test_alpha_fractions_sum_to_one(corpus_poly):
    rep = scan_densities(corpus_poly, 2000)
    assert sum(rep.alpha_exact()) == 1
    assert abs(math.fsum(rep.alpha_hat) - 1.0) < 1e-12
    assert sum(rep.counts) == rep.total


def test_reciprocal_sums_account_for_exclusions(corpus_poly):
    rep = scan_densities(corpus_poly, 5000)
    class_part = math.fsum(rep.recip_sums)
    excluded_part = math.fsum(1.0 / p for p in rep.excluded)
    assert rep.recip_total == pytest.approx(class_part + excluded_part, rel=1e-12)
    assert all(s >= 0.0 for s in rep.recip_sums)


def test_trace_checkpoints_and_empty_list():
    assert density_trace(X2P1, []) == []
    reps = density_trace(X2P1, [100, 10**4])
    assert [r.X for r in reps] == [100, 10**4]
    # a trace entry is identical to a direct scan at the same X
    assert reps[0] == scan_densities(X2P1, 100)
    with pytest.raises(ValueError):
        density_trace(X2P1, [100, 100])


def test_alpha0_sequence_frozen():
    reps = density_trace(X2P1, sorted(ALPHA0_SEQUENCE))
    for rep in reps:
        assert rep.alpha_hat[0] == pytest.approx(ALPHA0_SEQUENCE[rep.X], abs=1e-15)


def test_alpha0_approaches_one_half():
    devs = [
        abs(r.alpha_hat[0] - 0.5) for r in density_trace(X2P1, [100, 10**4, 10**6])
    ]
    assert devs[0] > devs[1] > devs[2]
    assert devs[2] < 0.02


def test_cubic_at_one_million():
    # S3 fixed-point census: identity fixes 3, transpositions 1, 3-cycles 0
    rep = scan_densities(X3M2, 10**6)
    assert rep.excluded == (2, 3)
    assert abs(rep.alpha_hat[0] - Fraction(1, 3)) < 0.02
    assert abs(rep.alpha_hat[1] - Fraction(1, 2)) < 0.02
    assert abs(rep.alpha_hat[3] - Fraction(1, 6)) < 0.02
    assert rep.counts[2] == 0  # no shape fixes exactly two of three roots


def test_quartic_at_one_million():
    # (Z/2)^2: identity fixes 4, the three involutions fix 0
    rep = scan_densities(X4P1, 10**6)
    assert abs(rep.alpha_hat[0] - Fraction(3, 4)) < 0.02
    assert abs(rep.alpha_hat[4] - Fraction(1, 4)) < 0.02
    assert rep.counts[1] == rep.counts[2] == rep.counts[3] == 0


def test_weighted_sum_near_one_for_irreducible(corpus_poly):
    rep = scan_densities(corpus_poly, 10**5)
    assert abs(rep.weighted_sum - 1.0) < 0.02


def test_report_rows_schema():
    rows = report_rows(scan_densities(X2P1, 100))
    assert [r["k"] for r in rows] == [0, 1, 2]
    assert list(rows[0].keys()) == ["k", "count", "alpha_hat", "recip_sum"]
    assert rows[0]["count"] == 13


def test_thread_invariance():
    a = density_trace(X2P1, [10**5], threads=1)[0]
    b = density_trace(X2P1, [10**5], threads=8)[0]
    assert a == b
