"""Integer polynomials: evaluation, fixed divisor, discriminant, and a
layered irreducibility screen.

Coefficients are stored constant term first.  The text form mirrors that
order: "1,0,1" is x^2 + 1.  Coefficients and moduli must fit a signed 64-bit
word; construction outside that range fails loudly.  Internal arithmetic is
exact, so evaluation and discriminants never wrap around.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product as _iproduct

from . import _gfpoly as gf
from .errors import CoefficientRangeError, IrreducibilityUnknownError, ModulusRangeError
from .primes import factorize, is_prime, primes_up_to

COEFF_MIN = -(1 << 63)
COEFF_MAX = (1 << 63) - 1
MODULUS_MAX = (1 << 63) - 1

# Divisor-triple budget for the quartic factor search; above it the screen
# reports unknown rather than stalling.
_KRONECKER_BUDGET = 200_000


@dataclass(frozen=True)
class Polynomial:
    """Immutable integer polynomial, coefficients ascending.

    Trailing zero coefficients are trimmed, so the degree always equals the
    index of the last nonzero coefficient.  The zero polynomial is stored as
    (0,) with degree 0; it only arises as a derivative of a constant.
    """

    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = tuple(int(v) for v in self.coeffs)
        if not c:
            raise ValueError("at least one coefficient is required")
        for v in c:
            if not (COEFF_MIN <= v <= COEFF_MAX):
                raise CoefficientRangeError(f"coefficient {v} is outside the signed 64-bit range")
        while len(c) > 1 and c[-1] == 0:
            c = c[:-1]
        object.__setattr__(self, "coeffs", c)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading_coefficient(self) -> int:
        return self.coeffs[-1]

    @property
    def is_zero(self) -> bool:
        return self.coeffs == (0,)

    def eval_exact(self, k: int) -> int:
        acc = 0
        for v in reversed(self.coeffs):
            acc = acc * k + v
        return acc

    __call__ = eval_exact

    def __str__(self) -> str:
        terms = []
        for i in range(self.degree, -1, -1):
            v = self.coeffs[i]
            if v == 0 and not (i == 0 and not terms):
                continue
            sign = "-" if v < 0 else "+"
            mag = abs(v)
            if i == 0:
                body = str(mag)
            else:
                xpow = "x" if i == 1 else f"x^{i}"
                body = xpow if mag == 1 else f"{mag}{xpow}"
            terms.append((sign, body))
        head_sign, head = terms[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def parse_polynomial(text: str) -> Polynomial:
    """Parse the comma-separated text form, constant term first."""
    tokens = [t.strip() for t in text.split(",")]
    if tokens == [""]:
        raise ValueError("empty polynomial text")
    coeffs = []
    for tok in tokens:
        try:
            coeffs.append(int(tok))
        except ValueError:
            raise ValueError(f"invalid coefficient token {tok!r}") from None
    if len(coeffs) > 1 and coeffs[-1] == 0:
        raise ValueError("leading zero at the top coefficient")
    return Polynomial(tuple(coeffs))


def to_text(P: Polynomial) -> str:
    """Inverse of parse_polynomial."""
    return ",".join(str(v) for v in P.coeffs)


def eval_mod(P: Polynomial, k: int, m: int) -> int:
    """P(k) mod m by Horner, reducing every intermediate."""
    k = int(k)
    m = int(m)
    if k < 0:
        raise ValueError("k must be non-negative")
    if not (2 <= m <= MODULUS_MAX):
        raise ModulusRangeError(f"modulus {m} is outside [2, 2^63)")
    kr = k % m
    acc = 0
    for v in reversed(P.coeffs):
        acc = (acc * kr + v) % m
    return acc


@lru_cache(maxsize=1024)
def fixed_divisor(P: Polynomial) -> int:
    """gcd of all values P(k) over the integers.

    Equals gcd(P(0), ..., P(d)): in the binomial basis the value gcd is the
    coefficient gcd, and the change of basis is unimodular.
    """
    d = P.degree
    if d < 1 or P.is_zero:
        raise ValueError("nonconstant polynomial required")
    return math.gcd(*(P.eval_exact(k) for k in range(d + 1)))


def derivative(P: Polynomial) -> Polynomial:
    """Formal derivative; a constant maps to the zero polynomial."""
    if P.degree == 0:
        return Polynomial((0,))
    return Polynomial(tuple(i * v for i, v in enumerate(P.coeffs) if i >= 1))


def _bareiss_det(mat: list[list[int]]) -> int:
    """Fraction-free determinant of an integer matrix (Bareiss)."""
    n = len(mat)
    if n == 0:
        return 1
    m = [row[:] for row in mat]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            piv = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if piv is None:
                return 0
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def _sylvester(f: list[int], g: list[int]) -> list[list[int]]:
    m, n = len(f) - 1, len(g) - 1
    fd, gd = f[::-1], g[::-1]
    rows = []
    for i in range(n):
        rows.append([0] * i + fd + [0] * (n - 1 - i))
    for i in range(m):
        rows.append([0] * i + gd + [0] * (m - 1 - i))
    return rows


@lru_cache(maxsize=1024)
def discriminant(P: Polynomial) -> int:
    """Exact discriminant via the Sylvester resultant of P and P'."""
    d = P.degree
    if d < 1 or P.is_zero:
        raise ValueError("nonconstant polynomial required")
    f = list(P.coeffs)
    fp = [i * v for i, v in enumerate(f) if i >= 1]
    while len(fp) > 1 and fp[-1] == 0:
        fp.pop()
    res = _bareiss_det(_sylvester(f, fp))
    lc = P.leading_coefficient
    num = res if d % 4 in (0, 1) else -res
    q, r = divmod(num, lc)
    assert r == 0, "leading coefficient must divide the resultant"
    return q


@dataclass(frozen=True)
class IrreducibilityVerdict:
    """Outcome of the layered screen.

    status is proven-irreducible, proven-reducible or unknown; method names
    the deciding layer.  For proven-reducible, factors holds a pair whose
    product is exactly the input.
    """

    status: str
    method: str
    witness: str | None = None
    factors: tuple[Polynomial, Polynomial] | None = None


def _divisors(n: int) -> list[int]:
    out = [1]
    if n > 1:
        for p, e in factorize(n).factors:
            out = [d * p**i for d in out for i in range(e + 1)]
    return sorted(out)


def _divide_exact(num: tuple[int, ...], den: tuple[int, ...]):
    """num / den over the rationals; integer coefficient list on exact
    division, else None."""
    a = [Fraction(v) for v in num]
    db = len(den) - 1
    if len(a) - 1 < db:
        return None
    q = [Fraction(0)] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] / den[db]
        if c:
            q[i - db] = c
            for j in range(db + 1):
                a[i - db + j] -= c * den[j]
    if any(a):
        return None
    if any(v.denominator != 1 for v in q):
        return None
    return [int(v) for v in q]


def _rational_root(P: Polynomial):
    """A rational root u/v in lowest terms with v > 0, or None."""
    if P.coeffs[0] == 0:
        return (0, 1)
    a0, ad = abs(P.coeffs[0]), abs(P.coeffs[-1])
    d = P.degree
    for u_abs in _divisors(a0):
        for v in _divisors(ad):
            if math.gcd(u_abs, v) != 1:
                continue
            for u in (u_abs, -u_abs):
                if sum(c * u**i * v ** (d - i) for i, c in enumerate(P.coeffs)) == 0:
                    return (u, v)
    return None


def _taylor_shift(coeffs: tuple[int, ...], s: int) -> list[int]:
    c = list(coeffs)
    n = len(c)
    for i in range(n - 1):
        for j in range(n - 2, i - 1, -1):
            c[j] += s * c[j + 1]
    return c


def _eisenstein_shift(P: Polynomial):
    primes = [int(p) for p in primes_up_to(100, budget=100)]
    shifts = [0]
    for s in range(1, 11):
        shifts += [s, -s]
    d = P.degree
    for s in shifts:
        c = _taylor_shift(P.coeffs, s)
        for p in primes:
            if c[d] % p == 0:
                continue
            if any(c[i] % p for i in range(d)):
                continue
            if c[0] % (p * p) == 0:
                continue
            return p, s
    return None


def _modp_witness(P: Polynomial):
    d = P.degree
    dps = [int(q) for q in primes_up_to(d, budget=100)] if d >= 2 else []
    for p in (int(q) for q in primes_up_to(50, budget=100)):
        if P.leading_coefficient % p == 0:
            continue
        c = gf.reduce_mod(P.coeffs, p)
        if gf.deg(c) != d:
            continue
        if _gf_irreducible(c, p, dps):
            return p
    return None


def _gf_irreducible(c: list[int], p: int, degree_primes: list[int]) -> bool:
    """Rabin test: c of degree d is irreducible over GF(p) iff x^(p^d) = x
    mod c while x^(p^(d/q)) - x is coprime to c for every prime q | d."""
    d = gf.deg(c)
    if d == 1:
        return True
    m = gf.monic(c, p)
    x = [0, 1]
    for q in degree_primes:
        if d % q:
            continue
        t = x
        for _ in range(d // q):
            t = gf.powmod(t, p, m, p)
        g = gf.gcd(gf.sub(t, x, p), m, p)
        if gf.deg(g) >= 1:
            return False
    t = x
    for _ in range(d):
        t = gf.powmod(t, p, m, p)
    return not gf.sub(t, x, p)


def _kronecker_quadratic(P: Polynomial):
    """Exhaustive search for an integer quadratic factor of a quartic with no
    rational roots.  Returns a factor pair, the string "irreducible", or None
    when the divisor budget is blown."""
    v0, v1, vm1 = P.eval_exact(0), P.eval_exact(1), P.eval_exact(-1)
    if any(abs(v) >= (1 << 63) for v in (v0, v1, vm1)):
        return None
    d0 = _divisors(abs(v0))
    d1 = [w for u in _divisors(abs(v1)) for w in (u, -u)]
    dm1 = [w for u in _divisors(abs(vm1)) for w in (u, -u)]
    if 2 * len(d0) * len(d1) * len(dm1) > _KRONECKER_BUDGET:
        return None
    lc = P.leading_coefficient
    for a_abs, b, cm in _iproduct(d0, d1, dm1):
        if (b - cm) % 2:
            continue
        for a in (a_abs, -a_abs):
            q1 = (b - cm) // 2
            q2 = (b + cm) // 2 - a
            if q2 == 0 or lc % q2:
                continue
            quot = _divide_exact(P.coeffs, (a, q1, q2))
            if quot is not None:
                return Polynomial((a, q1, q2)), Polynomial(tuple(quot))
    return "irreducible"


@lru_cache(maxsize=1024)
def check_irreducible(P: Polynomial) -> IrreducibilityVerdict:
    """Layered screen over the rationals, applied in a fixed order:
    rational-root search (settles degree <= 3), Eisenstein after a shift,
    irreducibility of P mod p, then the quartic factor search.  Constant
    content is ignored; verdicts concern splitting into lower-degree parts.
    """
    d = P.degree
    if d < 1 or P.is_zero:
        raise ValueError("nonconstant polynomial required")
    if d == 1:
        return IrreducibilityVerdict("proven-irreducible", "rational-root", "degree 1")
    root = _rational_root(P)
    if root is not None:
        u, v = root
        factor = Polynomial((-u, v))
        quot = _divide_exact(P.coeffs, factor.coeffs)
        assert quot is not None
        cof = Polynomial(tuple(quot))
        return IrreducibilityVerdict("proven-reducible", "rational-root", f"root {u}/{v}", (factor, cof))
    if d <= 3:
        return IrreducibilityVerdict("proven-irreducible", "rational-root", "no rational roots at degree <= 3")
    eis = _eisenstein_shift(P)
    if eis is not None:
        p, s = eis
        return IrreducibilityVerdict("proven-irreducible", "eisenstein-shift", f"p={p}, shift={s}")
    mp = _modp_witness(P)
    if mp is not None:
        return IrreducibilityVerdict("proven-irreducible", "mod-p", f"p={mp}")
    if d == 4:
        res = _kronecker_quadratic(P)
        if res == "irreducible":
            return IrreducibilityVerdict("proven-irreducible", "kronecker", "no quadratic factor exists")
        if res is not None:
            fac, cof = res
            return IrreducibilityVerdict("proven-reducible", "kronecker", f"factor {to_text(fac)}", (fac, cof))
    return IrreducibilityVerdict("unknown", "none")


def require_irreducible(P: Polynomial, *, force: bool = False) -> IrreducibilityVerdict:
    """Gate for operations that assume an irreducible input.  unknown passes
    only with force=True; proven-reducible always raises."""
    v = check_irreducible(P)
    if v.status == "proven-reducible":
        raise ValueError(f"polynomial {to_text(P)} is reducible ({v.witness})")
    if v.status == "unknown" and not force:
        raise IrreducibilityUnknownError(
            f"irreducibility of {to_text(P)} is unknown; pass force to proceed"
        )
    return v
