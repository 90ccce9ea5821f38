"""Root counts of an integer polynomial modulo a prime.

Two quantities per prime p: f(p), the number of distinct residues k with
P(k) ≡ 0 mod p, and g(p), the same count with multiplicity.  Small primes
are handled by a direct residue scan; large ones through gcd(x^p - x, P mod p)
in GF(p)[x], which never enumerates residues.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _gfpoly as gf
from ._util import block_ranges, run_blocks
from .errors import DegenerateReductionError
from .polynomial import MODULUS_MAX, Polynomial, discriminant
from .primes import is_prime

# Above this the residue scan loses to the gcd method, whose cost is
# O(log p) multiplications in the quotient ring.
SCAN_THRESHOLD = 4096


@dataclass(frozen=True)
class PrimeRecord:
    """Per-prime root data.

    reduced_degree is the degree of P mod p, -1 when the reduction is the
    zero polynomial (then f = g = p by convention).  ramified marks p <= d,
    p | lc(P), or p | disc(P); density scans exclude such primes.
    """

    p: int
    f: int
    g: int
    reduced_degree: int
    ramified: bool


def _require_prime(p: int) -> int:
    p = int(p)
    if not (2 <= p <= MODULUS_MAX):
        raise ValueError(f"prime {p} is outside the modulus range")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return p


def roots_mod_p(P: Polynomial, p: int) -> list[int]:
    """All residues k in [0, p) with P(k) ≡ 0 mod p, by direct scan.

    Enumerates every residue, so intended for small p; the counting
    functions below switch to gcd arithmetic past SCAN_THRESHOLD.
    """
    p = _require_prime(p)
    c = gf.reduce_mod(P.coeffs, p)
    if not c:
        return list(range(p))
    return [k for k in range(p) if gf.eval_at(c, k, p) == 0]


def _f_gcd(c: list[int], p: int) -> int:
    m = gf.monic(c, p)
    t = gf.sub(gf.powx(p, m, p), [0, 1], p)
    return gf.deg(gf.gcd(t, m, p))


def _g_gcd(c: list[int], p: int) -> int:
    # Peel one multiplicity layer per pass: the gcd with x^p - x is the
    # product of the distinct linear factors still present.  x^p is reduced
    # once modulo the full polynomial and then folded down to each quotient.
    cur = gf.monic(c, p)
    xp = gf.powx(p, cur, p)
    g = 0
    while gf.deg(cur) >= 1:
        t = gf.sub(gf.rem(xp, cur, p), [0, 1], p)
        lin = gf.gcd(t, cur, p)
        if gf.deg(lin) < 1:
            break
        g += gf.deg(lin)
        cur, r = gf.divmod_(cur, lin, p)
        assert not r, "linear part must divide exactly"
    return g


def _g_scan(c: list[int], p: int) -> int:
    g = 0
    for r in range(p):
        if gf.eval_at(c, r, p) != 0:
            continue
        cur = c
        while gf.deg(cur) >= 1:
            q, rem = gf.synthetic_division(cur, r, p)
            if rem != 0:
                break
            g += 1
            cur = gf.trim(q)
    return g


def count_distinct_roots(P: Polynomial, p: int) -> int:
    """f(p).  Returns p itself when P ≡ 0 mod p: every residue is a root,
    which is exactly what makes the product formula yield 0."""
    p = _require_prime(p)
    c = gf.reduce_mod(P.coeffs, p)
    if not c:
        return p
    if gf.deg(c) == 0:
        return 0
    if p <= SCAN_THRESHOLD:
        return sum(1 for k in range(p) if gf.eval_at(c, k, p) == 0)
    return _f_gcd(c, p)


def count_roots_with_multiplicity(P: Polynomial, p: int) -> int:
    """g(p): sum of root multiplicities of P mod p."""
    p = _require_prime(p)
    c = gf.reduce_mod(P.coeffs, p)
    if not c:
        raise DegenerateReductionError(f"polynomial vanishes identically mod {p}")
    if gf.deg(c) == 0:
        return 0
    if p <= SCAN_THRESHOLD:
        return _g_scan(c, p)
    return _g_gcd(c, p)


def batch_root_counts(P: Polynomial, primes, *, threads: int = 1):
    """f(p) and g(p) for every prime in an ascending array, as two int64
    arrays.  Compiled route when the degree and the largest prime allow it;
    otherwise falls back to the per-prime functions above.

    Work is split into fixed-size blocks merged in block order, so the
    output does not depend on the thread count.
    """
    primes = np.asarray(primes, dtype=np.int64)
    n = primes.shape[0]
    if n == 0:
        return np.zeros(0, np.int64), np.zeros(0, np.int64)
    from . import _kernels

    if P.degree > _kernels.MAX_DEGREE or int(primes[-1]) >= 1 << 31:
        f = np.zeros(n, np.int64)
        g = np.zeros(n, np.int64)
        for i in range(n):
            p = int(primes[i])
            f[i] = count_distinct_roots(P, p)
            c = gf.reduce_mod(P.coeffs, p)
            g[i] = p if not c else count_roots_with_multiplicity(P, p)
        return f, g

    coeffs = np.asarray(P.coeffs, dtype=np.int64)

    def work(rng):
        a, b = rng
        chunk = primes[a:b]
        f = np.zeros(b - a, np.int64)
        g = np.zeros(b - a, np.int64)
        _kernels.root_counts_block(coeffs, chunk, f, g)
        return f, g

    parts = run_blocks(work, block_ranges(0, n), threads=threads)
    f_all = np.concatenate([f for f, _ in parts])
    g_all = np.concatenate([g for _, g in parts])
    return f_all, g_all


def classify(P: Polynomial, p: int) -> PrimeRecord:
    """One-pass record of f, g, reduced degree and the ramified flag."""
    p = _require_prime(p)
    c = gf.reduce_mod(P.coeffs, p)
    d = P.degree
    ram = p <= d or P.leading_coefficient % p == 0 or discriminant(P) % p == 0
    if not c:
        return PrimeRecord(p=p, f=p, g=p, reduced_degree=-1, ramified=True)
    if gf.deg(c) == 0:
        return PrimeRecord(p=p, f=0, g=0, reduced_degree=0, ramified=ram)
    if p <= SCAN_THRESHOLD:
        f = sum(1 for k in range(p) if gf.eval_at(c, k, p) == 0)
        g = _g_scan(c, p)
    else:
        f = _f_gcd(c, p)
        g = _g_gcd(c, p)
    return PrimeRecord(p=p, f=f, g=g, reduced_degree=gf.deg(c), ramified=ram)
