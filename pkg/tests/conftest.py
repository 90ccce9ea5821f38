"""Shared fixtures and independent oracles.

The oracles here deliberately avoid the library's code paths: plain-Python
big-integer evaluation, literal gcd counting, and a list-based sieve.  Tests
compare library results against these, so a bug would have to appear twice,
in different algorithms, to slip through.
"""

from __future__ import annotations

import math

import pytest

from polytot import Polynomial, parse_polynomial

# the corpus used across the suite: name -> coefficients, constant term first
CORPUS = {
    "x": (0, 1),
    "x+3": (3, 1),
    "x^2+1": (1, 0, 1),
    "x^2-2": (-2, 0, 1),
    "x^2+x+2": (2, 1, 1),
    "x^3-2": (-2, 0, 0, 1),
    "x^3+x+1": (1, 1, 0, 1),
    "x^4+1": (1, 0, 0, 0, 1),
}


@pytest.fixture(params=sorted(CORPUS), ids=sorted(CORPUS))
def corpus_poly(request) -> Polynomial:
    return Polynomial(CORPUS[request.param])


def corpus() -> list[Polynomial]:
    return [Polynomial(c) for _, c in sorted(CORPUS.items())]


# ---------------------------------------------------------------- oracles

def oracle_eval(coeffs, k: int) -> int:
    """P(k) over the exact integers, by powers rather than Horner."""
    return sum(c * k**i for i, c in enumerate(coeffs))


def oracle_phi(coeffs, n: int) -> int:
    """Literal definition: count k in [0, n) with gcd(P(k), n) = 1."""
    return sum(1 for k in range(n) if math.gcd(oracle_eval(coeffs, k) % n, n) == 1)


def oracle_distinct_roots(coeffs, p: int) -> int:
    if all(c % p == 0 for c in coeffs):
        return p
    return sum(1 for k in range(p) if oracle_eval(coeffs, k) % p == 0)


def oracle_multiplicity_roots(coeffs, p: int) -> int:
    """Sum of root multiplicities via repeated synthetic division mod p."""
    c = [x % p for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    total = 0
    for r in range(p):
        while True:
            # divide by (x - r): quotient coefficients by Horner from the top
            acc = 0
            out = []
            for x in reversed(c):
                acc = (acc * r + x) % p
                out.append(acc)
            if acc != 0 or len(c) <= 1:
                break
            total += 1
            c = list(reversed(out[:-1]))
    return total


def oracle_primes(x: int) -> list[int]:
    flags = bytearray([1]) * (x + 1)
    flags[0:2] = b"\x00\x00"
    for p in range(2, math.isqrt(x) + 1):
        if flags[p]:
            flags[p * p :: p] = bytearray(len(flags[p * p :: p]))
    return [i for i in range(2, x + 1) if flags[i]]


def oracle_factor(n: int) -> list[tuple[int, int]]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1
    if n > 1:
        out.append((n, 1))
    return out


def oracle_classic_phi(n: int) -> int:
    v = n
    for p, _ in oracle_factor(n):
        v = v // p * (p - 1)
    return v


def oracle_radical(n: int) -> int:
    r = 1
    for p, _ in oracle_factor(n):
        r *= p
    return r


@pytest.fixture
def x2p1() -> Polynomial:
    return parse_polynomial("1,0,1")
