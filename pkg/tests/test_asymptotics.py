import math
from fractions import Fraction

import pytest

from polytot import (
    EULER_GAMMA,
    Polynomial,
    gd_constant,
    gdk_constant,
    generalized_product,
    mertens_product,
)
from polytot.asymptotics import _validate_gamma

from conftest import oracle_primes

X2P1 = Polynomial((1, 0, 1))

# frozen from the first verified run; regressions thereafter
MERTENS_1E6_VALUE = 0.040638210171648384
MERTENS_1E6_NORMALIZED = 0.99996106240192639
GD_PARTIALS = {
    # d: (partial at 1e5, partial at 1e6)
    2: (0.66016234546673658, 0.66016186058984083),
    3: (0.63516788331198115, 0.63516648375097873),
    4: (0.30749635891223798, 0.30749500380263561),
}
GDK_X2P1_K2 = (0.92306150156002709, 0.92306116351602829)


def test_gamma_constant_against_harmonic_series():
    _validate_gamma()  # raises if the constant drifts
    n = 10**5
    h = math.fsum(1.0 / k for k in range(1, n + 1))
    assert abs((h - math.log(n) - 1 / (2 * n)) - EULER_GAMMA) < 1e-9


def test_mertens_small_values():
    assert mertens_product(2).value == 0.5
    m = mertens_product(10)
    assert m.value == pytest.approx(8 / 35, abs=1e-15)  # (1/2)(2/3)(4/5)(6/7)
    assert m.terms == 4
    assert m.normalized == pytest.approx(8 / 35 * math.exp(EULER_GAMMA) * math.log(10), abs=1e-15)


def test_mertens_matches_direct_product():
    direct = 1.0
    for p in oracle_primes(1000):
        direct *= 1.0 - 1.0 / p
    assert mertens_product(1000).value == pytest.approx(direct, rel=1e-13)


def test_mertens_regression_at_one_million():
    m = mertens_product(10**6)
    assert 0.995 <= m.normalized <= 1.005
    assert m.value == pytest.approx(MERTENS_1E6_VALUE, rel=1e-14)
    assert m.normalized == pytest.approx(MERTENS_1E6_NORMALIZED, rel=1e-14)


def test_mertens_value_in_unit_interval():
    for x in (2, 3, 100, 10**4):
        v = mertens_product(x).value
        assert 0.0 < v <= 1.0


def test_generalized_product_examples():
    g = generalized_product(2, 10)
    assert g.value == pytest.approx(1 / 7, abs=1e-15)  # (1/3)(3/5)(5/7)
    assert generalized_product(1, 10).value == pytest.approx(
        mertens_product(10).value, abs=1e-15
    )
    with pytest.raises(ValueError):
        generalized_product(3, 3)  # needs x > d


def test_generalized_normalization_is_mertens_power():
    # the d-th power of the normalized Mertens ratio, up to the G_d factor
    d, x = 2, 10**5
    g = generalized_product(d, x)
    m = mertens_product(x)
    assert g.normalized == pytest.approx(m.normalized**d, rel=1e-10)


def test_gd_exact_identities():
    assert gd_constant(1, 10).value == 1.0  # every factor is 1, exactly
    assert gd_constant(1, 10**4).value == 1.0
    g = gd_constant(2, 3)
    assert g.value == pytest.approx(0.75, abs=1e-15)  # (1/3)(9/4), single factor
    assert g.terms == 1


def test_gd_convergence_regressions():
    for d, (v5, v6) in GD_PARTIALS.items():
        g5 = gd_constant(d, 10**5)
        g6 = gd_constant(d, 10**6)
        assert abs(g6.value - g5.value) < 0.01
        assert g5.value == pytest.approx(v5, rel=1e-14)
        assert g6.value == pytest.approx(v6, rel=1e-14)


def test_gdk_exact_classes():
    assert gdk_constant(X2P1, 0, 10**4).value == 1.0  # (1-0/p)(...)^0
    assert gdk_constant(X2P1, 1, 10**4).value == 1.0  # empty class
    assert gdk_constant(Polynomial((-2, 0, 0, 1)), 1, 10**4).value == 1.0


def test_gdk_convergence_regression():
    v5 = gdk_constant(X2P1, 2, 10**5)
    v6 = gdk_constant(X2P1, 2, 10**6)
    assert abs(v6.value - v5.value) < 0.01
    assert v5.value == pytest.approx(GDK_X2P1_K2[0], rel=1e-14)
    assert v6.value == pytest.approx(GDK_X2P1_K2[1], rel=1e-14)


def test_gdk_matches_direct_fraction_product():
    from conftest import oracle_multiplicity_roots

    direct = Fraction(1)
    for p in oracle_primes(500):
        if p <= 2:
            continue
        if oracle_multiplicity_roots(X2P1.coeffs, p) == 2:
            direct *= Fraction(p - 2, p) / Fraction(p - 1, p) ** 2
    assert gdk_constant(X2P1, 2, 500).value == pytest.approx(float(direct), rel=1e-13)


def test_trace_fields():
    t = mertens_product(100)
    assert t.x == 100
    assert t.terms == 25
    assert 0 < t.value < 1
