"""Prime generation and 64-bit integer factorization.

primes_up_to is a segmented sieve over odd numbers with a fixed segment size;
the output does not depend on the segment size.  factorize combines trial
division by cached small primes, deterministic Miller-Rabin certification and
Brent's variant of Pollard rho, which is enough to factor anything below 2^64.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._util import env_int
from .errors import BudgetExceededError

DEFAULT_SIEVE_BUDGET = 10**8
DEFAULT_SEGMENT_SIZE = 1 << 20

# Witnesses proving Miller-Rabin deterministic for every n < 3.3 * 10^24.
_MR_WITNESSES = (2, 325, 9375, 28178, 450775, 9780504, 1795265022)

MAX_FACTOR_INPUT = (1 << 64) - 1

_TRIAL_LIMIT = 10**6
_trial_primes: list[int] | None = None


def _resolve_budget(budget):
    if budget is not None:
        return int(budget)
    return env_int("POLYTOT_BUDGET", DEFAULT_SIEVE_BUDGET)


def _simple_sieve(n: int) -> np.ndarray:
    """Plain full-array sieve, used only for base primes below sqrt(x)."""
    if n < 2:
        return np.empty(0, dtype=np.int64)
    mask = np.ones(n + 1, dtype=bool)
    mask[:2] = False
    for p in range(2, math.isqrt(n) + 1):
        if mask[p]:
            mask[p * p :: p] = False
    return np.flatnonzero(mask).astype(np.int64)


def primes_up_to(x: int, *, segment_size: int = DEFAULT_SEGMENT_SIZE, budget: int | None = None) -> np.ndarray:
    """All primes <= x in ascending order, as an int64 array.

    Sieves odd candidates in segments of `segment_size` odds each.  Requests
    above the budget (default 10^8, override with POLYTOT_BUDGET or the
    budget argument) raise BudgetExceededError instead of thrashing memory.
    """
    x = int(x)
    if x < 2:
        raise ValueError("x must be at least 2")
    b = _resolve_budget(budget)
    if x > b:
        raise BudgetExceededError(f"x={x} exceeds sieve budget {b}")
    segment_size = int(segment_size)
    if segment_size < 8:
        raise ValueError("segment_size must be at least 8")
    odd_base = [int(p) for p in _simple_sieve(math.isqrt(x)) if p > 2]
    chunks = [np.array([2], dtype=np.int64)]
    lo = 3
    while lo <= x:
        count = min(segment_size, (x - lo) // 2 + 1)
        hi = lo + 2 * count  # segment covers odd values in [lo, hi)
        mask = np.ones(count, dtype=bool)
        for p in odd_base:
            start = p * p
            if start >= hi:
                break
            if start < lo:
                start = lo + ((p - lo % p) % p)
                if start % 2 == 0:
                    start += p
            mask[(start - lo) // 2 :: p] = False
        chunks.append(lo + 2 * np.flatnonzero(mask).astype(np.int64))
        lo = hi
    return np.concatenate(chunks)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin primality test for n < 2^64."""
    n = int(n)
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    for a in _MR_WITNESSES:
        a %= n
        if a == 0:
            continue
        v = pow(a, d, n)
        if v == 1 or v == n - 1:
            continue
        for _ in range(s - 1):
            v = v * v % n
            if v == n - 1:
                break
        else:
            return False
    return True


def _brent_rho(n: int) -> int:
    """Nontrivial factor of an odd composite n.  Deterministic: the polynomial
    constant steps through 1, 2, 3, ... until a cycle yields a factor."""
    if n % 2 == 0:
        return 2
    c = 1
    while True:
        y, r, q = 2, 1, 1
        g = 1
        x = y
        ys = y
        m = 128
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r <<= 1
        if g == n:
            g = 1
            y = ys
            while g == 1:
                y = (y * y + c) % n
                g = math.gcd(abs(x - y), n)
        if g != n:
            return g
        c += 1


def _small_primes() -> list[int]:
    global _trial_primes
    if _trial_primes is None:
        _trial_primes = [int(p) for p in primes_up_to(_TRIAL_LIMIT, budget=_TRIAL_LIMIT)]
    return _trial_primes


@dataclass(frozen=True)
class FactoredInteger:
    """An integer together with its prime factorization.

    factors is a tuple of (prime, exponent) pairs with strictly increasing
    primes and exponents >= 1.  Construction checks the product identity and
    the ordering; it does not re-certify primality of the parts.
    """

    n: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        prod = 1
        prev = 1
        for p, e in self.factors:
            if p <= prev:
                raise ValueError("factors must list strictly increasing primes")
            if e < 1:
                raise ValueError("exponents must be at least 1")
            prod *= p**e
            prev = p
        if prod != self.n:
            raise ValueError(f"factor product {prod} does not equal n={self.n}")

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def radical(self) -> int:
        r = 1
        for p in self.primes:
            r *= p
        return r


def factorize(n: int) -> FactoredInteger:
    """Complete prime factorization of 2 <= n < 2^64."""
    n = int(n)
    if n < 2:
        raise ValueError("n must be at least 2")
    if n > MAX_FACTOR_INPUT:
        raise ValueError("n exceeds the 64-bit input range")
    found: dict[int, int] = {}

    def add(p, e=1):
        found[p] = found.get(p, 0) + e

    m = n
    if is_prime(m):
        return FactoredInteger(n, ((m, 1),))
    for p in _small_primes():
        if p * p > m:
            break
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            add(p, e)
            if m == 1:
                break
            if is_prime(m):
                add(m)
                m = 1
                break
    if m > 1:
        # remainder: prime, or a product of at most three primes above 10^6
        stack = [m]
        while stack:
            v = stack.pop()
            if is_prime(v):
                add(v)
                continue
            f = _brent_rho(v)
            stack.append(f)
            stack.append(v // f)
    return FactoredInteger(n, tuple(sorted(found.items())))


def smallest_prime_factor_table(x: int, *, budget: int | None = None) -> np.ndarray:
    """int32 array t of length x+1 with t[n] = smallest prime factor of n.

    t[0] = t[1] = 0.  Memory is about 4 bytes per entry, so keep x within the
    sieve budget.
    """
    x = int(x)
    if x < 2:
        raise ValueError("x must be at least 2")
    b = _resolve_budget(budget)
    if x > b:
        raise BudgetExceededError(f"x={x} exceeds sieve budget {b}")
    t = np.zeros(x + 1, dtype=np.int32)
    for p in range(2, math.isqrt(x) + 1):
        if t[p] == 0:
            sl = t[p * p :: p]
            sl[sl == 0] = p
    idx = np.flatnonzero(t == 0)
    t[idx] = idx.astype(np.int32)
    t[0] = t[1] = 0
    return t
