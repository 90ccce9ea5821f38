import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polytot import (
    BudgetExceededError,
    FactoredInteger,
    factorize,
    is_prime,
    primes_up_to,
    smallest_prime_factor_table,
)

from conftest import oracle_factor, oracle_primes


def test_primes_small():
    assert list(primes_up_to(10)) == [2, 3, 5, 7]
    assert list(primes_up_to(2)) == [2]
    assert list(primes_up_to(3)) == [2, 3]


def test_prime_count_at_one_million():
    ps = primes_up_to(10**6)
    assert len(ps) == 78498  # classic pi(1e6)
    # cross-check the whole list against an independent simple sieve
    assert np.array_equal(ps[: 9592], np.asarray(oracle_primes(10**5)))
    assert int(ps[-1]) == 999983


def test_primes_are_sorted_unique():
    ps = primes_up_to(10**5)
    assert np.all(np.diff(ps) > 0)


def test_sieve_budget():
    with pytest.raises(BudgetExceededError):
        primes_up_to(10**7, budget=10**6)


def test_primes_rejects_tiny_limit():
    with pytest.raises(ValueError):
        primes_up_to(1)


def test_factorize_examples():
    f = factorize(60)
    assert f.factors == ((2, 2), (3, 1), (5, 1))
    assert f.n == 60
    assert f.radical() == 30
    assert factorize((1 << 61) - 1).factors == (((1 << 61) - 1, 1),)
    assert factorize(10**9 + 7).factors == ((10**9 + 7, 1),)


def test_is_prime_known_values():
    assert is_prime((1 << 61) - 1)
    assert is_prime(10**9 + 7)
    assert not is_prime(1)
    assert not is_prime((1 << 61) - 3)
    # strong-pseudoprime trap for weak bases
    assert not is_prime(3215031751)


def test_trial_division_oracle_on_a_standard_prime():
    n = 10**9 + 7
    assert all(n % d for d in range(2, int(n**0.5) + 1))


@settings(max_examples=200)
@given(st.integers(2, 10**9))
def test_factorize_roundtrip(n):
    f = factorize(n)
    prod = 1
    for p, e in f.factors:
        assert is_prime(p)
        assert e >= 1
        prod *= p**e
    assert prod == n
    assert [p for p, _ in f.factors] == sorted({p for p, _ in f.factors})


@given(st.integers(2, 10**5))
def test_factorize_matches_trial_division(n):
    assert factorize(n).factors == tuple(oracle_factor(n))


def test_factorize_large_semiprime():
    p, q = 1000003, 1000033
    assert factorize(p * q).factors == ((p, 1), (q, 1))


def test_spf_table_examples():
    t = smallest_prime_factor_table(100)
    assert t[9] == 3
    assert t[97] == 97
    assert t[91] == 7
    assert t[4] == 2
    # factoring through the table matches direct factorization
    for n in range(2, 101):
        m, fs = n, []
        while m > 1:
            p = int(t[m])
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            fs.append((p, e))
        assert tuple(fs) == factorize(n).factors


def test_factored_integer_from_parts():
    f = FactoredInteger(12, ((2, 2), (3, 1)))
    assert f.primes == (2, 3)
    assert f.radical() == 6
    with pytest.raises(ValueError):
        FactoredInteger(12, ((3, 1), (2, 2)))  # primes must ascend
    with pytest.raises(ValueError):
        FactoredInteger(10, ((2, 1), (3, 1)))  # product mismatch
