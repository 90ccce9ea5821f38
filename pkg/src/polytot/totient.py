"""The generalized totient phi_P(n): the count of k in [0, n) whose value
P(k) is coprime to n.

Three routes with very different costs, all exact:
  - phi_p_bruteforce walks every k and takes a gcd (the oracle);
  - phi_p_lemma multiplies n by (p - f(p))/p over the distinct primes of n;
  - phi_table / phi_p_batch evaluate the product formula for every n up to
    a limit at once, from a least-prime-factor table and one f(p) pass.

gcd(0, n) = n, so residues where P(k) ≡ 0 mod n never count as coprime.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from ._util import block_ranges, run_blocks
from .modular import batch_root_counts, count_distinct_roots
from .polynomial import MODULUS_MAX, Polynomial, eval_mod
from .primes import FactoredInteger, factorize, primes_up_to, smallest_prime_factor_table

# Kernel moduli are capped so that a product of two residues fits int64.
_KERNEL_N_MAX = (1 << 31) - 1


@dataclass(frozen=True)
class TotientResult:
    """One phi_P evaluation.

    per_prime lists (p, f(p)) over the distinct primes of n when the product
    formula produced the value; the brute-force route leaves it None.
    """

    n: int
    value: int
    method: str
    per_prime: tuple[tuple[int, int], ...] | None = None


def _require_n(n: int) -> int:
    n = int(n)
    if not (2 <= n <= MODULUS_MAX):
        raise ValueError(f"n must be in [2, 2^63), got {n}")
    return n


def _phi_brute_py(P: Polynomial, n: int, k0: int, k1: int) -> int:
    return sum(1 for k in range(k0, k1) if math.gcd(eval_mod(P, k, n), n) == 1)


def phi_p_bruteforce(P: Polynomial, n: int, *, threads: int = 1) -> TotientResult:
    """phi_P(n) by direct count over all k in [0, n)."""
    n = _require_n(n)
    from . import _kernels

    if n <= _KERNEL_N_MAX and P.degree <= _kernels.MAX_DEGREE:
        coeffs = np.asarray(P.coeffs, dtype=np.int64)

        def work(rng):
            return _kernels.brute_count_range(coeffs, n, rng[0], rng[1])

        value = int(sum(run_blocks(work, block_ranges(0, n), threads=threads)))
    else:
        value = _phi_brute_py(P, n, 0, n)
    return TotientResult(n=n, value=value, method="bruteforce")


def phi_p_lemma(P: Polynomial, n) -> TotientResult:
    """phi_P(n) = n * prod over p | n of (1 - f(p)/p), evaluated exactly.

    n may be an int or an already-factored integer.  Dividing by p before
    multiplying by (p - f(p)) keeps every intermediate an integer.
    """
    if isinstance(n, FactoredInteger):
        fac = n
    else:
        fac = factorize(_require_n(n))
    _require_n(fac.n)
    per_prime = []
    value = fac.n
    for p in fac.primes:
        f = count_distinct_roots(P, p)
        per_prime.append((p, f))
        q, r = divmod(value, p)
        assert r == 0, "each distinct prime of n divides the running product"
        value = q * (p - f)
    assert 0 <= value <= fac.n
    return TotientResult(n=fac.n, value=value, method="lemma", per_prime=tuple(per_prime))


def f_table(P: Polynomial, X: int, *, threads: int = 1, budget: int | None = None) -> np.ndarray:
    """int64 array t of size X+1 with t[p] = f(p) at prime indices, 0 elsewhere."""
    X = int(X)
    if X < 2:
        raise ValueError("X must be at least 2")
    primes = primes_up_to(X, budget=budget)
    f_arr, _ = batch_root_counts(P, primes, threads=threads)
    tab = np.zeros(X + 1, np.int64)
    tab[primes] = f_arr
    return tab


def _phi_internals(P: Polynomial, X: int, threads: int, budget: int | None):
    """(spf, ftab, table) shared by the batch entry points."""
    from . import _kernels

    if P.degree > _kernels.MAX_DEGREE:
        raise ValueError(f"batch evaluation supports degree <= {_kernels.MAX_DEGREE}")
    spf = smallest_prime_factor_table(X, budget=budget)
    ftab = f_table(P, X, threads=threads, budget=budget)
    out = np.zeros(X + 1, np.int64)

    def work(rng):
        a, b = rng
        buf = np.zeros(b - a, np.int64)
        _kernels.phi_from_spf_range(spf, ftab, a, b, buf)
        return a, buf

    for a, buf in run_blocks(work, block_ranges(2, X + 1), threads=threads):
        out[a : a + buf.shape[0]] = buf
    return spf, ftab, out


def phi_table(P: Polynomial, X: int, *, threads: int = 1, budget: int | None = None) -> np.ndarray:
    """int64 array of phi_P(n) for all n in [2, X] (indices 0 and 1 are 0).

    One f(p) pass over the primes, then a least-prime-factor walk per n.
    Blocks of n are computed independently and written to disjoint slices,
    so the table is identical for any thread count.
    """
    X = int(X)
    if X < 2:
        raise ValueError("X must be at least 2")
    return _phi_internals(P, X, threads, budget)[2]


def phi_p_batch(
    P: Polynomial, X: int, *, threads: int = 1, budget: int | None = None
) -> Iterator[TotientResult]:
    """Stream of lemma-valued TotientResult for n = 2..X, ascending."""
    X = int(X)
    if X < 2:
        raise ValueError("X must be at least 2")
    spf, ftab, table = _phi_internals(P, X, threads, budget)
    for n in range(2, X + 1):
        m = n
        per_prime = []
        while m > 1:
            p = int(spf[m])
            per_prime.append((p, int(ftab[p])))
            while m % p == 0:
                m //= p
        yield TotientResult(n=n, value=int(table[n]), method="lemma", per_prime=tuple(per_prime))
