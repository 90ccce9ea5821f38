"""Dense arithmetic in GF(p)[x].

Polynomials are lists of ints in [0, p), constant term first, no trailing
zeros; [] is the zero polynomial.  p must be prime.
"""

from __future__ import annotations


def trim(c: list) -> list:
    n = len(c)
    while n > 0 and c[n - 1] == 0:
        n -= 1
    return c[:n]


def reduce_mod(coeffs, p: int) -> list:
    return trim([int(v) % p for v in coeffs])


def deg(c) -> int:
    return len(c) - 1


def monic(c, p: int) -> list:
    lc = c[-1]
    if lc == 1:
        return list(c)
    inv = pow(lc, p - 2, p)
    return [v * inv % p for v in c]


def eval_at(c, k: int, p: int) -> int:
    acc = 0
    for v in reversed(c):
        acc = (acc * k + v) % p
    return acc


def rem(a, m, p: int) -> list:
    """Remainder of a modulo a monic m."""
    a = [v % p for v in a]
    dm = len(m) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i]
        if c:
            a[i] = 0
            off = i - dm
            for j in range(dm):
                a[off + j] = (a[off + j] - c * m[j]) % p
    return trim(a)


def mulmod(a, b, m, p: int) -> list:
    if not a or not b:
        return []
    prod = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    return rem(prod, m, p)


def sub(a, b, p: int) -> list:
    n = max(len(a), len(b))
    out = [0] * n
    for i in range(n):
        av = a[i] if i < len(a) else 0
        bv = b[i] if i < len(b) else 0
        out[i] = (av - bv) % p
    return trim(out)


def gcd(a, b, p: int) -> list:
    """Monic greatest common divisor."""
    a, b = trim(list(a)), trim(list(b))
    while b:
        mb = monic(b, p)
        a, b = mb, rem(a, mb, p)
    return monic(a, p) if a else []


def divmod_(a, b, p: int):
    """Quotient and remainder of a by a nonzero b."""
    b = trim(list(b))
    binv = pow(b[-1], p - 2, p)
    a = [v % p for v in a]
    db = len(b) - 1
    q = [0] * max(len(a) - db, 0)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] * binv % p
        if c:
            q[i - db] = c
            for j in range(db + 1):
                a[i - db + j] = (a[i - db + j] - c * b[j]) % p
    return trim(q), trim(a)


def powx(e: int, m, p: int) -> list:
    """x^e reduced modulo a monic m of degree >= 1."""
    r = [1]
    for bit in bin(e)[2:]:
        r = mulmod(r, r, m, p)
        if bit == "1":
            r = rem([0] + r, m, p) if r else []
    return r


def powmod(a, e: int, m, p: int) -> list:
    """a^e modulo a monic m."""
    r = [1]
    base = rem(a, m, p)
    while e > 0:
        if e & 1:
            r = mulmod(r, base, m, p)
        base = mulmod(base, base, m, p)
        e >>= 1
    return r


def synthetic_division(c, r: int, p: int):
    """Divide c (degree >= 1) by (x - r); returns (quotient, remainder)."""
    d = len(c) - 1
    q = [0] * d
    q[d - 1] = c[d] % p
    for i in range(d - 1, 0, -1):
        q[i - 1] = (c[i] + r * q[i]) % p
    return q, (c[0] + r * q[0]) % p
