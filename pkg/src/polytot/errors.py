"""Exception types shared across the package."""


class PolytotError(Exception):
    """Base class for all package-specific errors."""


class CoefficientRangeError(PolytotError, ValueError):
    """A polynomial coefficient falls outside the declared signed 64-bit range."""


class ModulusRangeError(PolytotError, ValueError):
    """A modulus is below 2 or above the declared signed 64-bit range."""


class BudgetExceededError(PolytotError):
    """A sieve or batch request exceeds the configured budget."""


class DegenerateReductionError(PolytotError):
    """P reduces to the zero polynomial mod p, so root multiplicities are undefined."""


class IrreducibilityUnknownError(PolytotError):
    """The irreducibility screen returned unknown and the caller did not force."""
