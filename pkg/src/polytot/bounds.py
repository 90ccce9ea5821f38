"""Lower-bound harness for phi_P(n)/n.

The product over p | n of (1 - f(p)/p) splits into three ranges: p <= d,
d < p < log n, and p >= log n.  The first two ranges have few factors and
explicit floors; the tail obeys

    pi3 >= (1 - d/log n)^(log n / log log n)

because n has fewer than log n/log log n prime factors above log n, each
factor at least (1 - d/log n).  The scan harness sweeps n, weighing
phi_P(n)/n by a power of log log n, and records the running infimum; for n
coprime to the fixed divisor the infimum stays positive.

Everything is reported from exact integer tables plus single-pass float
vector math, so reports are identical for any thread count.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .asymptotics import EULER_GAMMA
from .density import scan_densities
from .modular import count_distinct_roots
from .polynomial import Polynomial, fixed_divisor, require_irreducible
from .primes import FactoredInteger, factorize
from .totient import phi_table

# Scans start here so that log log n > 1: below 16 the weight is zero,
# negative or undefined and ratios are meaningless.
SCAN_START = 16


@dataclass(frozen=True)
class PiDecomposition:
    """The three partial products over p | n, and their product.

    Float fields; the exact rational triple is available from
    pi_decomposition_exact.
    """

    n: int
    pi1: float
    pi2: float
    pi3: float
    product: float


@dataclass(frozen=True)
class Pi3Check:
    """Both sides of the tail inequality at one n."""

    n: int
    pi3: float
    envelope: float
    holds: bool


@dataclass(frozen=True)
class BoundReport:
    """Result of one ratio scan.

    exponent is the full tested power of log log n (epsilon already
    included); zeros counts admissible n where phi_P(n) = 0, which can only
    happen when some p | n has f(p) = p.  The per-n curve rides along for
    serialization but stays out of comparisons.
    """

    polynomial: Polynomial
    exponent: float
    epsilon: float
    exponent_mode: str
    range: tuple[int, int]
    skipped: int
    zeros: int
    min_ratio: float
    argmin: int
    ns: np.ndarray = field(repr=False, compare=False, default=None)
    phis: np.ndarray = field(repr=False, compare=False, default=None)
    ratios: np.ndarray = field(repr=False, compare=False, default=None)


def _factored(n) -> FactoredInteger:
    return n if isinstance(n, FactoredInteger) else factorize(int(n))


def _require_tail_scale(P: Polynomial, n: int) -> float:
    logn = math.log(n)
    if logn <= P.degree + 1:
        raise ValueError(f"n must exceed e^(d+1) = e^{P.degree + 1}, got {n}")
    return logn


def pi_decomposition_exact(P: Polynomial, n) -> tuple[Fraction, Fraction, Fraction]:
    """The three partial products as exact fractions."""
    fac = _factored(n)
    logn = _require_tail_scale(P, fac.n)
    d = P.degree
    parts = [Fraction(1), Fraction(1), Fraction(1)]
    for p in fac.primes:
        f = count_distinct_roots(P, p)
        which = 0 if p <= d else (1 if p < logn else 2)
        parts[which] *= Fraction(p - f, p)
    return parts[0], parts[1], parts[2]


def pi_decomposition(P: Polynomial, n) -> PiDecomposition:
    """Float report of the three-range split of phi_P(n)/n."""
    fac = _factored(n)
    f1, f2, f3 = pi_decomposition_exact(P, fac)
    return PiDecomposition(
        n=fac.n,
        pi1=float(f1),
        pi2=float(f2),
        pi3=float(f3),
        product=float(f1 * f2 * f3),
    )


def pi3_inequality_check(P: Polynomial, n) -> Pi3Check:
    """Tail factor against its proven envelope, both sides reported.

    The envelope is evaluated in float64 and the comparison is done in
    exact rationals against that evaluation.
    """
    fac = _factored(n)
    logn = _require_tail_scale(P, fac.n)
    d = P.degree
    _, _, f3 = pi_decomposition_exact(P, fac)
    envelope = (1.0 - d / logn) ** (logn / math.log(logn))
    return Pi3Check(
        n=fac.n,
        pi3=float(f3),
        envelope=envelope,
        holds=f3 >= Fraction(envelope),
    )


def envelope_crossing(d: int, target: float = 0.99) -> float:
    """log10 of the n where the tail envelope first reaches target.

    The crossing sits astronomically far out (log n grows like
    d/(1 - target)), which is why the harness verifies the inequality
    chain rather than the asymptotic constant.
    """
    d = int(d)
    if d < 1 or not (0.0 < target < 1.0):
        raise ValueError("need d >= 1 and target in (0, 1)")
    logt = math.log(target)

    def h(y: float) -> float:
        return (y / math.log(y)) * math.log1p(-d / y) - logt

    lo, hi = d + 1.5, 1e300
    if h(hi) <= 0.0:
        raise ValueError("target not reached within float range")
    while h(lo) > 0.0:
        lo += 0.25
    for _ in range(200):
        mid = math.sqrt(lo * hi)
        if h(mid) > 0.0:
            hi = mid
        else:
            lo = mid
    return hi / math.log(10.0)


def _scan(P, X, exponent, epsilon, mode, delta, threads, budget) -> BoundReport:
    X = int(X)
    if X < SCAN_START:
        raise ValueError(f"X must be at least {SCAN_START}")
    phis_all = phi_table(P, X, threads=threads, budget=budget)
    ns_all = np.arange(SCAN_START, X + 1, dtype=np.int64)
    adm = np.gcd(ns_all, delta) == 1
    ns = ns_all[adm]
    skipped = int(ns_all.shape[0] - ns.shape[0])
    if ns.shape[0] == 0:
        raise ValueError("no admissible n in range")
    phis = phis_all[SCAN_START:][adm]
    weights = np.log(np.log(ns.astype(np.float64))) ** exponent
    ratios = phis * weights / ns
    zeros = int((phis == 0).sum())
    i = int(np.argmin(ratios))
    min_ratio = float(ratios[i])
    argmin = int(ns[i])
    if zeros == 0:
        assert min_ratio > 0.0, "positive phi values give positive ratios"
    return BoundReport(
        polynomial=P,
        exponent=float(exponent),
        epsilon=float(epsilon),
        exponent_mode=mode,
        range=(SCAN_START, X),
        skipped=skipped,
        zeros=zeros,
        min_ratio=min_ratio,
        argmin=argmin,
        ns=ns,
        phis=phis,
        ratios=ratios,
    )


def classic_phi_diagnostic(X: int, *, threads: int = 1, budget: int | None = None) -> BoundReport:
    """The degree-1 specialization: min of phi(n) * log log n / n over
    [16, X].  The natural reference level is e^(-gamma) ~ 0.5615, which the
    scan dips below at primorial-rich n; reported, never asserted."""
    P = Polynomial((0, 1))
    return _scan(P, X, 1.0, 0.0, "classic", 1, threads, budget)


CLASSIC_REFERENCE = math.exp(-EULER_GAMMA)


def bound_scan(
    P: Polynomial,
    X: int,
    epsilon: float = 0.0,
    exponent_mode: str = "qd-empirical",
    *,
    custom_exponent: float | None = None,
    threads: int = 1,
    budget: int | None = None,
    force: bool = False,
) -> BoundReport:
    """Ratio scan of phi_P(n) * (log log n)^e / n over admissible n in
    [16, X], n coprime to the fixed divisor (others counted as skipped).

    exponent_mode picks e: "qd-empirical" uses the weighted class sum from
    a density scan at X (close to 1 for irreducible P) plus epsilon;
    "safe-d" uses deg P exactly, no epsilon; "custom" uses custom_exponent
    as given.  The screen for irreducibility runs first; unknown verdicts
    need force=True, a reducible input is always an error.
    """
    if float(epsilon) < 0.0:
        raise ValueError("epsilon must be non-negative")
    require_irreducible(P, force=force)
    delta = fixed_divisor(P)
    if exponent_mode == "qd-empirical":
        wsum = scan_densities(P, int(X), threads=threads, budget=budget).weighted_sum
        exponent = wsum + float(epsilon)
        eps = float(epsilon)
    elif exponent_mode == "safe-d":
        exponent = float(P.degree)
        eps = 0.0
    elif exponent_mode == "custom":
        if custom_exponent is None:
            raise ValueError("custom mode needs custom_exponent")
        exponent = float(custom_exponent)
        eps = 0.0
    else:
        raise ValueError(f"unknown exponent_mode {exponent_mode!r}")
    return _scan(P, X, exponent, eps, exponent_mode, delta, threads, budget)


def curve_rows(report: BoundReport, stride: int = 1) -> list[dict]:
    """Per-n rows (n, phi_p, ratio) for serialization, downsampled by
    stride but always keeping the minimizing n."""
    stride = max(1, int(stride))
    rows = []
    seen_argmin = False
    for j in range(0, report.ns.shape[0], stride):
        n = int(report.ns[j])
        if n == report.argmin:
            seen_argmin = True
        rows.append({"n": n, "phi_p": int(report.phis[j]), "ratio": float(report.ratios[j])})
    if not seen_argmin:
        i = int(np.argmin(report.ratios))
        rows.append(
            {
                "n": report.argmin,
                "phi_p": int(report.phis[i]),
                "ratio": float(report.ratios[i]),
            }
        )
        rows.sort(key=lambda r: r["n"])
    return rows
