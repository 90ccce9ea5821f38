"""Mertens-type prime products and their convergent corrections.

The classic product ∏_{p<=x}(1 - 1/p) falls like e^(-gamma)/log x.  Putting
d in the numerator over p > d gives a product that falls like the classic
one to the d-th power, up to a convergent correction factor G_d; the same
shape appears class-by-class (G_{d,k}) when primes are restricted to those
where P has exactly k roots.

Everything accumulates in log space with exact float summation over
ascending primes, converting back to linear scale only for the report, so
results do not depend on thread count or partitioning.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .polynomial import Polynomial
from .primes import primes_up_to

# Euler-Mascheroni constant, hardcoded and re-derived below at import time
# from the defining limit of H_n - log n.
EULER_GAMMA = 0.5772156649015329


def _validate_gamma() -> None:
    n = 1_000_000
    h = math.fsum(np.reciprocal(np.arange(1, n + 1, dtype=np.float64)))
    # H_n - log n - 1/(2n) converges at O(1/n^2); at n = 10^6 that is ~1e-13
    approx = h - math.log(n) - 1.0 / (2 * n)
    if abs(approx - EULER_GAMMA) >= 1e-9:
        raise AssertionError(f"gamma constant failed its defining-limit check: {approx}")


_validate_gamma()


@dataclass(frozen=True)
class ProductTrace:
    """A prime product at limit x.

    normalized is the product divided by its predicted asymptote; for the
    correction products G_d and G_{d,k} there is no external asymptote and
    normalized simply repeats the value.
    """

    x: int
    value: float
    normalized: float
    terms: int


def mertens_product(x: int, *, budget: int | None = None) -> ProductTrace:
    """∏_{p<=x}(1 - 1/p), with normalized = value * e^gamma * log x."""
    x = int(x)
    if x < 2:
        raise ValueError("x must be at least 2")
    pa = primes_up_to(x, budget=budget).astype(np.float64)
    logv = math.fsum(np.log1p(-1.0 / pa))
    value = math.exp(logv)
    normalized = value * math.exp(EULER_GAMMA) * math.log(x)
    return ProductTrace(x=x, value=value, normalized=normalized, terms=pa.shape[0])


def generalized_product(d: int, x: int, *, budget: int | None = None) -> ProductTrace:
    """∏_{d<p<=x}(1 - d/p), normalized by its full predicted asymptote
    (small-prime correction, e^(-d*gamma)/(log x)^d, and the partial G_d
    at the same x)."""
    d = int(d)
    x = int(x)
    if d < 1:
        raise ValueError("d must be at least 1")
    if x <= d:
        raise ValueError(f"empty product: x must exceed d, got d={d}, x={x}")
    pa = primes_up_to(x, budget=budget).astype(np.float64)
    tail = pa[pa > d]
    logv = math.fsum(np.log1p(-d / tail))
    value = math.exp(logv)
    head = pa[pa <= d]
    log_head = math.fsum(np.log1p(-1.0 / head)) if head.shape[0] else 0.0
    log_gd = _log_gd(d, tail)
    # asymptote: prod_{p<=d}(1-1/p)^(-d) * e^(-d*gamma) / (log x)^d * G_d(x)
    log_asym = -d * log_head - d * EULER_GAMMA - d * math.log(math.log(x)) + log_gd
    normalized = math.exp(logv - log_asym)
    return ProductTrace(x=x, value=value, normalized=normalized, terms=tail.shape[0])


def _log_gd(d: int, tail: np.ndarray) -> float:
    # log of prod (1 - d/p)(1 - 1/p)^(-d) over the given primes (all > d).
    # For d = 1 each term is exactly 0.0, so the product is exactly 1.
    return math.fsum(np.log1p(-d / tail) - d * np.log1p(-1.0 / tail))


def gd_constant(d: int, x: int, *, budget: int | None = None) -> ProductTrace:
    """Partial product of G_d = ∏_{p>d}(1 - d/p)(1 - 1/p)^(-d) over
    d < p <= x.  Convergent: the tail terms are O(1/p^2)."""
    d = int(d)
    x = int(x)
    if d < 1:
        raise ValueError("d must be at least 1")
    if x <= d:
        raise ValueError(f"empty product: x must exceed d, got d={d}, x={x}")
    pa = primes_up_to(x, budget=budget).astype(np.float64)
    tail = pa[pa > d]
    value = math.exp(_log_gd(d, tail))
    return ProductTrace(x=x, value=value, normalized=value, terms=tail.shape[0])


def gdk_constant(
    P: Polynomial,
    k: int,
    x: int,
    *,
    threads: int = 1,
    budget: int | None = None,
) -> ProductTrace:
    """Partial product of G_{d,k} = ∏(1 - k/p)(1 - 1/p)^(-k) over the
    classified primes with exactly k roots of P, d < p <= x.

    k = 0 and k = 1 give exactly 1 (every factor is 1).
    """
    k = int(k)
    x = int(x)
    d = P.degree
    if not (0 <= k <= d):
        raise ValueError(f"k must lie in [0, deg P], got {k}")
    if x <= d:
        raise ValueError(f"x must exceed d, got {x}")
    pa = primes_up_to(x, budget=budget).astype(np.int64)
    from .modular import batch_root_counts

    _, g = batch_root_counts(P, pa, threads=threads)
    sel = (pa > d) & (P.leading_coefficient % pa != 0) & (g == k)
    cls = pa[sel].astype(np.float64)
    if cls.shape[0] == 0:
        return ProductTrace(x=x, value=1.0, normalized=1.0, terms=0)
    logv = math.fsum(np.log1p(-k / cls) - k * np.log1p(-1.0 / cls))
    value = math.exp(logv)
    return ProductTrace(x=x, value=value, normalized=value, terms=cls.shape[0])
