"""Exception types shared across the package."""


class SemigroupForgeError(Exception):
    """Base class for every error raised by this package."""


class EmptyInput(SemigroupForgeError):
    """No generators were supplied."""


class UnitGenerator(SemigroupForgeError):
    """A generator below 2 was supplied."""


class NonCoprime(SemigroupForgeError):
    """The supplied generators have gcd greater than 1."""


class Overflow(SemigroupForgeError):
    """A value left the signed 64-bit envelope."""


class DegenerateFullMonoid(SemigroupForgeError):
    """The operation is undefined for the monoid of all non-negative integers."""


class AnchorZero(SemigroupForgeError):
    """Apery sets require a positive anchor."""


class AnchorNotInSemigroup(SemigroupForgeError):
    """The Apery anchor must be an element of the semigroup."""


class NotAlmostSymmetric(SemigroupForgeError):
    """The requested bound only applies to almost-symmetric semigroups."""


class WitnessViolation(SemigroupForgeError):
    """A provably-true property failed at runtime; this signals a bug."""


class BudgetExceeded(SemigroupForgeError):
    """The requested enumeration exceeds the configured genus cap."""
