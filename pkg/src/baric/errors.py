"""Exception types raised by the library.

Everything derives from BaricError so callers can catch library errors
with a single except clause. Errors that correspond to malformed input
also derive from ValueError.
"""


class BaricError(Exception):
    """Base class for all library errors."""


class FieldMismatch(BaricError, ValueError):
    """Operands live over different scalar fields."""


class DivisionByZero(BaricError, ZeroDivisionError):
    """Division by zero, or by a residue that is zero mod p."""


class ParseError(BaricError, ValueError):
    """Malformed scalar text or algebra document."""


class DimensionMismatch(BaricError, ValueError):
    """Vector, matrix or element sizes do not agree."""


class FieldNotFinite(BaricError):
    """An exhaustive enumeration was requested over the rationals."""


class EnumerationTooLarge(BaricError):
    """An exhaustive enumeration would exceed the configured cap."""


class SingularTransform(BaricError):
    """A basis change or inverse was requested for a singular matrix."""


class CharacteristicObstruction(BaricError):
    """A partial weight sum vanishes over F_p, so the weight-one basis
    construction cannot proceed."""


class NotABowtie(BaricError):
    """The operation needs factor provenance, but the algebra does not
    carry a bowtie tag."""


class NotIdempotentInput(BaricError):
    """A supposed idempotent fails e*e = e."""


class WeightNotOne(BaricError):
    """An element required to have weight one does not."""


class NotWeightPreserving(BaricError):
    """A supplied map is not a weight-preserving isomorphism."""


class WeightInvalid(BaricError, ValueError):
    """A weight vector is zero or fails the homomorphism condition."""


class DuplicateTriple(BaricError, ValueError):
    """An algebra document lists the same (i, j, k) index triple twice."""


class FactorsNotCommutativeUnital(BaricError):
    """The kernel ideal bijection needs commutative unital factors."""


class UnknownProposition(BaricError, ValueError):
    """Unrecognized check id."""
