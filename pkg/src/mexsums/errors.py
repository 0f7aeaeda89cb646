"""Exception types shared across the package.

Every library-level failure raises a subclass of MexsumsError so the
service layer and CLI can map them to a 400 response / exit code 2
without enumerating causes.
"""


class MexsumsError(Exception):
    """Base class for all library errors."""


class OutOfPrecision(MexsumsError):
    """A coefficient beyond the known precision window was requested.

    Unknown is not zero: a truncated series simply has no information
    past its prec (or below its offset).
    """


class NonUnitLeadingCoefficient(MexsumsError):
    """Series inversion requires an invertible leading coefficient."""


class BadModulus(MexsumsError):
    """Modular reduction needs a modulus of at least 2."""


class RangeTooLarge(MexsumsError):
    """Partition enumeration is capped to keep brute force honest."""


class FractionalExponent(MexsumsError):
    """An eta quotient whose q-expansion does not live on integer powers."""


class HalfIntegralWeight(MexsumsError):
    """Eta quotient with an odd exponent sum; only integer weights are supported."""


class InsufficientPrecision(MexsumsError):
    """The input expansion is too short for the requested computation.

    Raised instead of zero-filling, which would fabricate results.
    """


class BadPrime(MexsumsError):
    """A prime argument fails its residue-class or primality requirement."""


class BadInstance(MexsumsError):
    """Parameters violate the divisibility constraints of a congruence instance."""


class WitnessNotFound(MexsumsError):
    """An interval scan found no witness; would falsify the claim being checked."""
