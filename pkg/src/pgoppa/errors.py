"""Exception types shared across the package."""


class PgoppaError(Exception):
    """Base class for all package-specific errors."""


class NotPrimeError(PgoppaError, ValueError):
    """The requested characteristic is not a prime number."""


class ReducibleModulusError(PgoppaError, ValueError):
    """A supplied field modulus is not irreducible."""


class NotInvertibleError(PgoppaError, ArithmeticError):
    """A residue has no inverse modulo the given polynomial.

    The decoder relies on this as an early-exit signal, so it carries the
    offending gcd when available.
    """

    def __init__(self, msg, gcd=None):
        super().__init__(msg)
        self.gcd = gcd


class NoRootError(PgoppaError, ArithmeticError):
    """No p-th root exists (inconsistent inverse-Frobenius system)."""


class DegreeBoundError(PgoppaError, ValueError):
    """A candidate solution row violates the locator degree bounds."""


class ParamError(PgoppaError, ValueError):
    """Invalid code or experiment parameters."""
