"""Empirical splitting statistics: how often P has k roots mod p.

Primes d < p <= X not dividing the leading coefficient are classified by
k = g(p), the root count with multiplicity.  The class proportions estimate
the densities fixed by the Galois action on the roots; the weighted sum
over k tends to 1 for irreducible P.  Primes p <= d or p | lc(P) go to the
excluded list: finitely many of them, so no density moves.

Counts and proportions are exact rationals internally; floats appear only
in the report.  Reciprocal sums use exact (Shewchuk) float summation over
ascending primes, so reports are identical for any thread count.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .modular import batch_root_counts
from .polynomial import Polynomial
from .primes import primes_up_to


@dataclass(frozen=True)
class DensityReport:
    """Class statistics at one scan limit.

    counts[k] is the number of classified primes with g(p) = k, for
    k = 0..deg P; alpha_hat[k] = counts[k]/total.  recip_sums[k] is the sum
    of 1/p over the class, recip_total over all primes <= X including the
    excluded ones.
    """

    X: int
    counts: tuple[int, ...]
    total: int
    alpha_hat: tuple[float, ...]
    weighted_sum: float
    recip_sums: tuple[float, ...]
    recip_total: float
    excluded: tuple[int, ...]

    def alpha_exact(self) -> tuple[Fraction, ...]:
        """The class proportions as exact fractions."""
        return tuple(Fraction(c, self.total) for c in self.counts)

    def weighted_sum_exact(self) -> Fraction:
        return Fraction(sum(k * c for k, c in enumerate(self.counts)), self.total)


def _report_at(d, pa, g, incl, idx, X) -> DensityReport:
    g_c = g[:idx][incl[:idx]]
    p_c = pa[:idx][incl[:idx]]
    total = int(g_c.shape[0])
    if total == 0:
        raise ValueError(f"no classifiable primes up to {X}")
    assert int(g_c.max()) <= d, "classified primes have at most d roots"
    counts = np.bincount(g_c, minlength=d + 1)
    alpha = tuple(float(Fraction(int(c), total)) for c in counts)
    wsum = float(Fraction(int(sum(k * int(c) for k, c in enumerate(counts))), total))
    recip = tuple(
        math.fsum(1.0 / p for p in p_c[g_c == k]) for k in range(d + 1)
    )
    recip_total = math.fsum(1.0 / p for p in pa[:idx])
    excluded = tuple(int(p) for p in pa[:idx][~incl[:idx]])
    return DensityReport(
        X=X,
        counts=tuple(int(c) for c in counts),
        total=total,
        alpha_hat=alpha,
        weighted_sum=wsum,
        recip_sums=recip,
        recip_total=recip_total,
        excluded=excluded,
    )


def density_trace(
    P: Polynomial,
    checkpoints,
    *,
    threads: int = 1,
    budget: int | None = None,
) -> list[DensityReport]:
    """One DensityReport per checkpoint, from a single sieve pass.

    Checkpoints must be ascending.  An empty list is allowed and yields [].
    """
    cps = [int(x) for x in checkpoints]
    if not cps:
        return []
    if any(b <= a for a, b in zip(cps, cps[1:])):
        raise ValueError("checkpoints must be strictly ascending")
    if P.degree < 1 or P.is_zero:
        raise ValueError("nonconstant polynomial required")
    d = P.degree
    primes = primes_up_to(cps[-1], budget=budget)
    pa = primes.astype(np.int64)
    _, g = batch_root_counts(P, pa, threads=threads)
    incl = (pa > d) & (P.leading_coefficient % pa != 0)
    out = []
    for X in cps:
        idx = int(np.searchsorted(pa, X, side="right"))
        out.append(_report_at(d, pa, g, incl, idx, X))
    return out


def scan_densities(
    P: Polynomial, X: int, *, threads: int = 1, budget: int | None = None
) -> DensityReport:
    """Classify every prime d < p <= X with p not dividing lc(P)."""
    return density_trace(P, [int(X)], threads=threads, budget=budget)[0]


def report_rows(r: DensityReport) -> list[dict]:
    """Per-class rows in the serialization schema: k, count, alpha_hat,
    recip_sum."""
    return [
        {
            "k": k,
            "count": r.counts[k],
            "alpha_hat": r.alpha_hat[k],
            "recip_sum": r.recip_sums[k],
        }
        for k in range(len(r.counts))
    ]
