import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polytot import (
    Polynomial,
    f_table,
    factorize,
    phi_p_batch,
    phi_p_bruteforce,
    phi_p_lemma,
    phi_table,
)

from conftest import CORPUS, corpus, oracle_classic_phi, oracle_phi, oracle_radical

X2P1 = Polynomial((1, 0, 1))
X = Polynomial((0, 1))


def test_bruteforce_examples():
    assert phi_p_bruteforce(X2P1, 5).value == 3  # k=0,1,4
    assert phi_p_bruteforce(X2P1, 2).value == 1  # P(0)=1 in, P(1)=2 out
    assert phi_p_bruteforce(X, 10).value == 4


def test_lemma_examples():
    assert phi_p_lemma(X2P1, 5).value == 3  # 5*(1 - 2/5)
    assert phi_p_lemma(X2P1, 2).value == 1  # 2*(1 - 1/2)
    assert phi_p_lemma(X, 60).value == 16


def test_result_fields():
    b = phi_p_bruteforce(X2P1, 5)
    l = phi_p_lemma(X2P1, 5)
    assert (b.n, b.method) == (5, "bruteforce")
    assert (l.n, l.method) == (5, "lemma")
    assert l.per_prime == ((5, 2),)
    assert b.per_prime is None


def test_lemma_accepts_prefactored_input():
    f = factorize(606)
    assert phi_p_lemma(X2P1, f).value == phi_p_lemma(X2P1, 606).value == 297


def test_rejects_small_n():
    with pytest.raises(ValueError):
        phi_p_bruteforce(X2P1, 1)
    with pytest.raises(ValueError):
        phi_p_lemma(X2P1, 0)


def test_phi_table_examples():
    t = phi_table(X, 10)
    assert list(t[2:]) == [1, 2, 2, 4, 2, 6, 4, 6, 4]
    t = phi_table(X2P1, 5)
    assert list(t[2:]) == [1, 3, 2, 3]


def test_prime_beyond_degree_with_no_roots_is_inert():
    # f(q) = 0 makes every residue coprime
    for P, q in ((X2P1, 3), (X2P1, 7), (Polynomial((-2, 0, 0, 1)), 7)):
        assert phi_p_lemma(P, q).value == q
        assert phi_p_bruteforce(P, q).value == q


def test_lemma_equals_bruteforce_on_corpus_slice(corpus_poly):
    # full range to 20000 runs in the acceptance gate; a dense slice here
    tab = phi_table(corpus_poly, 2000)
    for n in range(2, 2001):
        assert phi_p_lemma(corpus_poly, n).value == tab[n]
    for n in (2, 3, 606, 1024, 1999):
        assert phi_p_bruteforce(corpus_poly, n).value == tab[n]


def test_bruteforce_matches_literal_definition(corpus_poly):
    for n in range(2, 80):
        assert phi_p_bruteforce(corpus_poly, n).value == oracle_phi(
            corpus_poly.coeffs, n
        )


def test_classic_specialization_slice():
    t = phi_table(X, 10**4)
    for n in range(2, 10**4 + 1):
        assert t[n] == oracle_classic_phi(n)


def test_zero_value_exactly_when_some_f_equals_p():
    # 2x^2+2 vanishes mod 2, so any even n kills every residue class
    P = Polynomial((2, 0, 2))
    assert phi_p_lemma(P, 8).value == 0
    assert phi_p_bruteforce(P, 8).value == 0
    assert phi_p_lemma(P, 9).value > 0


def test_exact_integer_identity():
    # value * prod(p) = n * prod(p - f(p)) over distinct primes p | n
    for P in corpus():
        for n in (12, 90, 606, 8192, 510510):
            res = phi_p_lemma(P, n)
            lhs = res.value
            rhs = n
            for p, f in res.per_prime:
                lhs *= p
                rhs *= p - f
            assert lhs == rhs


@settings(max_examples=60)
@given(n=st.integers(2, 10**6), poly_i=st.integers(0, len(CORPUS) - 1))
def test_radical_dependence(n, poly_i):
    P = corpus()[poly_i]
    r = oracle_radical(n)
    if r == 1:
        r = n
    # phi_P(n)/n == phi_P(rad n)/rad n, cross-multiplied to stay exact
    assert phi_p_lemma(P, n).value * r == phi_p_lemma(P, max(r, 2)).value * n


def test_f_table_matches_classify():
    from polytot import count_distinct_roots, primes_up_to

    ft = f_table(X2P1, 100)
    for p in (int(q) for q in primes_up_to(100)):
        assert ft[p] == count_distinct_roots(X2P1, p)


def test_batch_stream_matches_table():
    rows = list(phi_p_batch(X2P1, 310))
    tab = phi_table(X2P1, 310)
    assert [r.n for r in rows] == list(range(2, 311))
    assert [r.value for r in rows] == list(tab[2:311])
    # per_prime carries each distinct prime with its root count
    by_n = {r.n: r for r in rows}
    assert by_n[10].per_prime == ((2, 1), (5, 2))
    assert by_n[303].per_prime == ((3, 0), (101, 2))


def test_threaded_evaluation_identical():
    t1 = phi_table(X2P1, 10**5, threads=1)
    t4 = phi_table(X2P1, 10**5, threads=4)
    assert np.array_equal(t1, t4)
    b1 = phi_p_bruteforce(X2P1, 100003, threads=1)
    b4 = phi_p_bruteforce(X2P1, 100003, threads=4)
    assert b1.value == b4.value
