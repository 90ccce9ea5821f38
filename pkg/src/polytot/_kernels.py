"""Compiled inner loops (numba) for the batch paths.

Everything here is integer-only int64 arithmetic.  Moduli are capped at
2^31 by the callers, so a product of two residues stays below 2^62 and
never wraps.  numba's % has Python sign semantics, which keeps reduced
coefficients in [0, p) even for negative inputs.

Each kernel has a pure-Python twin in modular.py or totient.py; the test
suite holds the two routes equal on overlapping ranges.
"""

from __future__ import annotations

import numpy as np
from numba import njit

MAX_DEGREE = 15

# Kernel-side scan/gcd switchover. Deliberately lower than the pure-Python
# threshold: compiled Horner is cheap, but the gcd route overtakes it early.
_SCAN_T = 256


@njit(cache=True, nogil=True)
def _modpow(a, e, p):
    r = 1
    a %= p
    while e > 0:
        if e & 1:
            r = r * a % p
        a = a * a % p
        e >>= 1
    return r


@njit(cache=True, nogil=True)
def _trim(buf, d):
    while d >= 0 and buf[d] == 0:
        d -= 1
    return d


@njit(cache=True, nogil=True)
def _rem_inplace(a, da, m, dm, p):
    """a mod m for monic m, in place; returns the new degree."""
    for i in range(da, dm - 1, -1):
        c = a[i]
        if c != 0:
            a[i] = 0
            off = i - dm
            for j in range(dm):
                a[off + j] = (a[off + j] - c * m[j]) % p
    top = dm - 1 if dm - 1 < da else da
    return _trim(a, top)


@njit(cache=True, nogil=True)
def _gcd_into(out, a, da, b, db, p):
    """Monic gcd of (a, da) and (b, db) into out; both inputs destroyed."""
    while db >= 0:
        inv = _modpow(b[db], p - 2, p)
        if inv != 1:
            for j in range(db + 1):
                b[j] = b[j] * inv % p
        da = _rem_inplace(a, da, b, db, p)
        t = a
        a = b
        b = t
        td = da
        da = db
        db = td
    for j in range(da + 1):
        out[j] = a[j]
    if da >= 0 and out[da] != 1:
        inv = _modpow(out[da], p - 2, p)
        for j in range(da + 1):
            out[j] = out[j] * inv % p
    return da


@njit(cache=True, nogil=True)
def _sub_x(ta, dta, p):
    """ta -= x in place; returns the new degree."""
    if dta < 0:
        ta[0] = 0
    if dta < 1:
        ta[1] = 0
    ta[1] = (ta[1] - 1) % p
    top = dta if dta > 1 else 1
    return _trim(ta, top)


@njit(cache=True, nogil=True)
def _powx_into(r, e, m, dm, p, tmp):
    """r = x^e mod m (monic, dm >= 1); tmp is a 2*MAX_DEGREE+1 scratch."""
    for j in range(dm):
        r[j] = 0
    r[0] = 1
    dr = 0
    nbits = 0
    t = e
    while t > 0:
        nbits += 1
        t >>= 1
    for i in range(nbits - 1, -1, -1):
        if dr < 0:
            # r is the zero polynomial (m divides a power of x); it stays
            # zero under squaring and shifting, so stop here
            break
        # square r into tmp, reduce back
        for j in range(2 * dr + 1):
            tmp[j] = 0
        for ai in range(dr + 1):
            ri = r[ai]
            if ri != 0:
                for bi in range(dr + 1):
                    tmp[ai + bi] = (tmp[ai + bi] + ri * r[bi]) % p
        dt = _trim(tmp, 2 * dr)
        dt = _rem_inplace(tmp, dt, m, dm, p)
        for j in range(dt + 1):
            r[j] = tmp[j]
        for j in range(dt + 1, dr + 1):
            r[j] = 0
        dr = dt
        if (e >> i) & 1:
            # multiply by x: shift up one, reduce
            tmp[0] = 0
            for j in range(dr + 1):
                tmp[j + 1] = r[j]
            dt = _trim(tmp, dr + 1)
            dt = _rem_inplace(tmp, dt, m, dm, p)
            for j in range(dt + 1):
                r[j] = tmp[j]
            for j in range(dt + 1, dr + 2):
                r[j] = 0
            dr = dt
    return dr


@njit(cache=True, nogil=True)
def _div_monic_into(q, a, da, b, db, p):
    """Quotient of a by monic b into q; a becomes the remainder."""
    dq = da - db
    for i in range(da, db - 1, -1):
        c = a[i]
        q[i - db] = c
        if c != 0:
            a[i] = 0
            off = i - db
            for j in range(db):
                a[off + j] = (a[off + j] - c * b[j]) % p
    return dq


@njit(cache=True, nogil=True)
def _roots_pair(coeffs, p):
    """(f, g) for one prime: distinct roots and roots with multiplicity."""
    nc = coeffs.shape[0]
    cr = np.zeros(MAX_DEGREE + 1, np.int64)
    for i in range(nc):
        cr[i] = coeffs[i] % p
    dr = _trim(cr, nc - 1)
    if dr < 0:
        return p, p
    if dr == 0:
        return 0, 0

    if p <= _SCAN_T:
        f = 0
        g = 0
        work = np.zeros(MAX_DEGREE + 1, np.int64)
        for k in range(p):
            acc = 0
            for i in range(dr, -1, -1):
                acc = (acc * k + cr[i]) % p
            if acc != 0:
                continue
            f += 1
            # peel multiplicity: repeated synthetic division by (x - k)
            dw = dr
            for j in range(dr + 1):
                work[j] = cr[j]
            while dw >= 1:
                b = work[dw]
                for i in range(dw - 1, -1, -1):
                    t = (work[i] + k * b) % p
                    work[i] = b
                    b = t
                if b != 0:
                    break
                g += 1
                dw -= 1
        return f, g

    # gcd route: reduce x^p once, then fold it down to each quotient
    m = np.zeros(MAX_DEGREE + 1, np.int64)
    dm = dr
    inv = _modpow(cr[dr], p - 2, p)
    for j in range(dr + 1):
        m[j] = cr[j] * inv % p
    xp = np.zeros(MAX_DEGREE + 1, np.int64)
    tmp = np.zeros(2 * MAX_DEGREE + 1, np.int64)
    dxp = _powx_into(xp, p, m, dm, p, tmp)

    ta = np.zeros(MAX_DEGREE + 1, np.int64)
    tb = np.zeros(MAX_DEGREE + 1, np.int64)
    lin = np.zeros(MAX_DEGREE + 1, np.int64)
    q = np.zeros(MAX_DEGREE + 1, np.int64)

    # f = deg gcd(x^p - x, m)
    for j in range(dxp + 1):
        ta[j] = xp[j]
    dta = _sub_x(ta, dxp, p)
    for j in range(dm + 1):
        tb[j] = m[j]
    f = _gcd_into(lin, ta, dta, tb, dm, p)
    if f < 0:
        f = 0

    # g: strip one multiplicity layer per pass
    cur = np.zeros(MAX_DEGREE + 1, np.int64)
    for j in range(dm + 1):
        cur[j] = m[j]
    dcur = dm
    g = 0
    while dcur >= 1:
        for j in range(dxp + 1):
            ta[j] = xp[j]
        dta = _rem_inplace(ta, dxp, cur, dcur, p)
        dta = _sub_x(ta, dta, p)
        for j in range(dcur + 1):
            tb[j] = cur[j]
        dlin = _gcd_into(lin, ta, dta, tb, dcur, p)
        if dlin < 1:
            break
        g += dlin
        dq = _div_monic_into(q, cur, dcur, lin, dlin, p)
        for j in range(dq + 1):
            cur[j] = q[j]
        dcur = dq
    return f, g


@njit(cache=True, nogil=True)
def root_counts_block(coeffs, primes, f_out, g_out):
    """Fill f(p), g(p) for each prime in the block."""
    for i in range(primes.shape[0]):
        f, g = _roots_pair(coeffs, primes[i])
        f_out[i] = f
        g_out[i] = g


@njit(cache=True, nogil=True)
def brute_count_range(coeffs, n, k0, k1):
    """Count k in [k0, k1) with gcd(P(k) mod n, n) = 1."""
    nc = coeffs.shape[0]
    cr = np.zeros(MAX_DEGREE + 1, np.int64)
    for i in range(nc):
        cr[i] = coeffs[i] % n
    cnt = 0
    for k in range(k0, k1):
        kr = k % n
        acc = 0
        for i in range(nc - 1, -1, -1):
            acc = (acc * kr + cr[i]) % n
        a = acc
        b = n
        while b != 0:
            t = a % b
            a = b
            b = t
        if a == 1:
            cnt += 1
    return cnt


@njit(cache=True, nogil=True)
def brute_phi_range(coeffs, n0, n1, out):
    """Brute-force phi_P(n) for every n in [n0, n1)."""
    for n in range(n0, n1):
        out[n - n0] = brute_count_range(coeffs, n, 0, n)


@njit(cache=True, nogil=True)
def phi_from_spf_range(spf, ftab, n0, n1, out):
    """Lemma phi_P(n) for n in [n0, n1) from a least-factor table and an
    f(p) table.  Divides by p before multiplying, so every step is exact."""
    for n in range(n0, n1):
        m = n
        phi = n
        while m > 1:
            p = spf[m]
            phi = phi // p * (p - ftab[p])
            while m % p == 0:
                m //= p
        out[n - n0] = phi
