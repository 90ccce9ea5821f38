"""Reduced-scale consistency suites behind the selftest subcommand.

Every suite pits two independent routes against each other (compiled vs
pure, product formula vs brute force, split product vs direct ratio) at a
scale that finishes in seconds.  A passing run means the installed build
reproduces the package's own cross-checks, not that any asymptotic claim
is proven.
"""

from __future__ import annotations

import math
import random
import traceback

import numpy as np

from . import _gfpoly as gf
from ._kernels import brute_phi_range
from .asymptotics import gd_constant, gdk_constant, mertens_product
from .bounds import pi3_inequality_check, pi_decomposition, pi_decomposition_exact
from .density import scan_densities
from .modular import batch_root_counts, count_distinct_roots, count_roots_with_multiplicity
from .polynomial import Polynomial, fixed_divisor
from .primes import primes_up_to
from .totient import phi_p_lemma, phi_table

SCALE = 10_000

CORPUS: tuple[tuple[str, Polynomial], ...] = tuple(
    (name, Polynomial(coeffs))
    for name, coeffs in [
        ("x", (0, 1)),
        ("x+3", (3, 1)),
        ("x^2+1", (1, 0, 1)),
        ("x^2-2", (-2, 0, 1)),
        ("x^2+x+2", (2, 1, 1)),
        ("x^3-2", (-2, 0, 0, 1)),
        ("x^3+x+1", (1, 1, 0, 1)),
        ("x^4+1", (1, 0, 0, 0, 1)),
    ]
)


def _suite_lemma_vs_bruteforce(rng, threads):
    hi = 1500
    for name, P in CORPUS:
        tab = phi_table(P, hi, threads=threads)
        brute = np.zeros(hi - 1, np.int64)
        brute_phi_range(np.asarray(P.coeffs, np.int64), 2, hi + 1, brute)
        if not (tab[2:] == brute).all():
            n = int(np.flatnonzero(tab[2:] != brute)[0]) + 2
            return False, f"{name}: mismatch at n={n}"
    return True, f"8 polynomials, n 2..{hi}"


def _suite_classic_totient(rng, threads):
    x = Polynomial((0, 1))
    tab = phi_table(x, SCALE, threads=threads)
    sieve = np.arange(SCALE + 1, dtype=np.int64)
    for p in primes_up_to(SCALE):
        sieve[p::p] -= sieve[p::p] // int(p)
    if not (tab[2:] == sieve[2:]).all():
        n = int(np.flatnonzero(tab[2:] != sieve[2:])[0]) + 2
        return False, f"classic phi mismatch at n={n}"
    return True, f"P=x equals classic phi, n 2..{SCALE}"


def _suite_root_count_routes(rng, threads):
    small = primes_up_to(2000)
    large = primes_up_to(6000)
    large = large[large > 4096]
    ps = np.concatenate([small, large])
    for name, P in CORPUS:
        f_arr, g_arr = batch_root_counts(P, ps, threads=threads)
        for i, p in enumerate(ps):
            p = int(p)
            if f_arr[i] != count_distinct_roots(P, p):
                return False, f"{name}: f mismatch at p={p}"
            cred = gf.reduce_mod(P.coeffs, p)
            gp = p if not cred else count_roots_with_multiplicity(P, p)
            if g_arr[i] != gp:
                return False, f"{name}: g mismatch at p={p}"
    return True, f"compiled = pure on {len(ps)} primes, both sides of the scan threshold"


def _suite_product_split(rng, threads):
    checked = 0
    for name, P in CORPUS:
        delta = fixed_divisor(P)
        lo = int(math.exp(P.degree + 1)) + 1
        ns = []
        while len(ns) < 25:
            n = rng.randrange(lo, SCALE)
            if math.gcd(n, delta) == 1:
                ns.append(n)
        for j, n in enumerate(ns):
            dec = pi_decomposition(P, n)
            lem = phi_p_lemma(P, n)
            ratio = lem.value / n
            if not math.isclose(dec.product, ratio, rel_tol=1e-12, abs_tol=1e-300):
                return False, f"{name}: split product off at n={n}"
            if j < 3:
                f1, f2, f3 = pi_decomposition_exact(P, n)
                if f1 * f2 * f3 * n != lem.value:
                    return False, f"{name}: exact split mismatch at n={n}"
            chk = pi3_inequality_check(P, n)
            if not chk.holds:
                return False, f"{name}: tail inequality failed at n={n}"
            checked += 1
    return True, f"{checked} random admissible n, float and exact routes"


def _suite_mertens(rng, threads):
    tr = mertens_product(SCALE)
    if not (0.99 < tr.normalized < 1.01):
        return False, f"normalized={tr.normalized:.6f} outside [0.99, 1.01]"
    return True, f"normalized={tr.normalized:.6f} at x={SCALE}"


def _suite_density(rng, threads):
    for name in ("x^2+1", "x^3-2"):
        P = dict(CORPUS)[name]
        rep = scan_densities(P, SCALE, threads=threads)
        if abs(rep.weighted_sum - 1.0) >= 0.1:
            return False, f"{name}: weighted sum {rep.weighted_sum:.4f} far from 1"
    return True, "weighted class sums within 0.1 of 1"


def _suite_exact_products(rng, threads):
    if gd_constant(1, SCALE).value != 1.0:
        return False, "G_1 partial product is not exactly 1"
    P = dict(CORPUS)["x^2+1"]
    for k in (0, 1):
        if gdk_constant(P, k, SCALE, threads=threads).value != 1.0:
            return False, f"G_d,{k} partial product is not exactly 1"
    return True, "G_1 and the k=0,1 class products are exactly 1"


def _suite_determinism(rng, threads):
    P = dict(CORPUS)["x^3-2"]
    t1 = phi_table(P, SCALE, threads=1)
    t4 = phi_table(P, SCALE, threads=4)
    if not (t1 == t4).all():
        return False, "phi table differs across thread counts"
    Q = dict(CORPUS)["x^2+1"]
    if scan_densities(Q, SCALE, threads=1) != scan_densities(Q, SCALE, threads=4):
        return False, "density report differs across thread counts"
    return True, "tables and reports identical at 1 and 4 threads"


_SUITES = [
    ("lemma-vs-bruteforce", _suite_lemma_vs_bruteforce),
    ("classic-totient", _suite_classic_totient),
    ("root-count-routes", _suite_root_count_routes),
    ("product-split", _suite_product_split),
    ("mertens-normalization", _suite_mertens),
    ("density-weighted-sum", _suite_density),
    ("exact-products", _suite_exact_products),
    ("thread-determinism", _suite_determinism),
]


def run_selftest(seed: int = 42, threads: int = 1) -> tuple[bool, list[str]]:
    """Run all suites; returns overall success and one table line per suite."""
    lines = []
    ok_all = True
    for name, fn in _SUITES:
        rng = random.Random(seed)
        try:
            ok, detail = fn(rng, threads)
        except Exception:
            ok, detail = False, traceback.format_exc().strip().splitlines()[-1]
        ok_all &= ok
        lines.append(f"{'PASS' if ok else 'FAIL'}  {name:24s} {detail}")
    return ok_all, lines
