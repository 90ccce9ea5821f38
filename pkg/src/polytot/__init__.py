"""Totients of integer polynomials and the analytic machinery around them:
exact phi_P evaluation, root counts mod p, prime splitting densities,
Mertens-type products, and lower-bound scans."""

from .asymptotics import (
    EULER_GAMMA,
    ProductTrace,
    gd_constant,
    gdk_constant,
    generalized_product,
    mertens_product,
)
from .bounds import (
    CLASSIC_REFERENCE,
    BoundReport,
    Pi3Check,
    PiDecomposition,
    bound_scan,
    classic_phi_diagnostic,
    envelope_crossing,
    pi3_inequality_check,
    pi_decomposition,
)
from .density import DensityReport, density_trace, scan_densities
from .errors import (
    BudgetExceededError,
    CoefficientRangeError,
    DegenerateReductionError,
    IrreducibilityUnknownError,
    ModulusRangeError,
    PolytotError,
)
from .modular import (
    PrimeRecord,
    batch_root_counts,
    classify,
    count_distinct_roots,
    count_roots_with_multiplicity,
    roots_mod_p,
)
from .polynomial import (
    IrreducibilityVerdict,
    Polynomial,
    check_irreducible,
    derivative,
    discriminant,
    eval_mod,
    fixed_divisor,
    parse_polynomial,
    require_irreducible,
    to_text,
)
from .primes import (
    FactoredInteger,
    factorize,
    is_prime,
    primes_up_to,
    smallest_prime_factor_table,
)
from .selftest import run_selftest
from .totient import (
    TotientResult,
    f_table,
    phi_p_batch,
    phi_p_bruteforce,
    phi_p_lemma,
    phi_table,
)

__version__ = "0.1.0"

__all__ = [
    "EULER_GAMMA",
    "CLASSIC_REFERENCE",
    "BoundReport",
    "BudgetExceededError",
    "CoefficientRangeError",
    "DegenerateReductionError",
    "DensityReport",
    "FactoredInteger",
    "IrreducibilityUnknownError",
    "IrreducibilityVerdict",
    "ModulusRangeError",
    "Pi3Check",
    "PiDecomposition",
    "Polynomial",
    "PolytotError",
    "PrimeRecord",
    "ProductTrace",
    "TotientResult",
    "batch_root_counts",
    "bound_scan",
    "check_irreducible",
    "classic_phi_diagnostic",
    "classify",
    "count_distinct_roots",
    "count_roots_with_multiplicity",
    "density_trace",
    "derivative",
    "discriminant",
    "envelope_crossing",
    "eval_mod",
    "f_table",
    "factorize",
    "fixed_divisor",
    "gd_constant",
    "gdk_constant",
    "generalized_product",
    "is_prime",
    "mertens_product",
    "parse_polynomial",
    "phi_p_batch",
    "phi_p_bruteforce",
    "phi_p_lemma",
    "phi_table",
    "pi3_inequality_check",
    "pi_decomposition",
    "primes_up_to",
    "require_irreducible",
    "roots_mod_p",
    "run_selftest",
    "scan_densities",
    "smallest_prime_factor_table",
    "to_text",
]
