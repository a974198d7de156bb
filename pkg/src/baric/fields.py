"""Exact scalar arithmetic over the rationals and over prime fields.

Rational values are reduced fractions with positive denominator; prime
field values are residues in [0, p). Canonical forms are unique, so
``==`` is exact mathematical equality and no tolerances appear anywhere.
Elements of small prime fields are interned, which keeps the inner loops
of the linear algebra allocation-free.
"""

from __future__ import annotations

import re
from fractions import Fraction
from operator import index as _as_int

from .errors import DivisionByZero, FieldMismatch, FieldNotFinite, ParseError

_INTERN_LIMIT = 1 << 12


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class FieldSpec:
    """The scalar domain: the rationals (p is None) or integers mod a prime.

    Instances are interned, one per domain, so identity comparison is a
    valid equality test.
    """

    __slots__ = ("p", "_table", "_zero", "_one")
    _cache: dict = {}

    def __new__(cls, p: int | None = None) -> "FieldSpec":
        spec = cls._cache.get(p)
        if spec is not None:
            return spec
        if p is not None:
            p = _as_int(p)
            if not _is_prime(p):
                raise ValueError(f"field modulus must be prime, got {p}")
        spec = object.__new__(cls)
        spec.p = p
        spec._table = None
        spec._zero = None
        spec._one = None
        cls._cache[p] = spec
        return spec

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls(None)

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls(p)

    @property
    def is_finite(self) -> bool:
        return self.p is not None

    @property
    def characteristic(self) -> int:
        return 0 if self.p is None else self.p

    @property
    def token(self) -> str:
        """Short form used on the command line: 'q' or 'p<prime>'."""
        return "q" if self.p is None else f"p{self.p}"

    @classmethod
    def from_token(cls, token: str) -> "FieldSpec":
        token = token.strip().lower()
        if token == "q":
            return cls(None)
        if token.startswith("p") and token[1:].isdigit():
            return cls(int(token[1:]))
        raise ValueError(f"bad field token {token!r}: expected 'q' or 'p<prime>'")

    def _interned(self):
        if self._table is None and self.p is not None and self.p <= _INTERN_LIMIT:
            self._table = tuple(
                FieldElement._raw(self, v) for v in range(self.p)
            )
        return self._table

    def _make(self, value) -> "FieldElement":
        # value already canonical for this field
        table = self._interned()
        if table is not None:
            return table[value]
        return FieldElement._raw(self, value)

    def element(self, value) -> "FieldElement":
        """Coerce an int, Fraction, string or FieldElement into this field."""
        if isinstance(value, FieldElement):
            if value.field is not self:
                raise FieldMismatch(f"element of {value.field!r} given to {self!r}")
            return value
        if isinstance(value, str):
            return parse_scalar(value, self)
        if self.p is None:
            return FieldElement._raw(self, Fraction(value))
        return self._make(_as_int(value) % self.p)

    @property
    def zero(self) -> "FieldElement":
        if self._zero is None:
            self._zero = self.element(0)
        return self._zero

    @property
    def one(self) -> "FieldElement":
        if self._one is None:
            self._one = self.element(1)
        return self._one

    def elements(self):
        """Iterate every field element (finite fields only)."""
        if self.p is None:
            raise FieldNotFinite("cannot enumerate the rationals")
        return (self._make(v) for v in range(self.p))

    def __repr__(self) -> str:
        return "FieldSpec.rationals()" if self.p is None else f"FieldSpec.prime({self.p})"


class FieldElement:
    """A scalar in canonical form, tied to its FieldSpec."""

    __slots__ = ("field", "value")

    def __new__(cls, field: FieldSpec, value) -> "FieldElement":
        if field.p is None:
            self = object.__new__(cls)
            self.field = field
            self.value = value if type(value) is Fraction else Fraction(value)
            return self
        return field._make(_as_int(value) % field.p)

    @classmethod
    def _raw(cls, field: FieldSpec, value) -> "FieldElement":
        self = object.__new__(cls)
        self.field = field
        self.value = value
        return self

    def _check(self, other) -> None:
        if not isinstance(other, FieldElement):
            raise TypeError(f"expected FieldElement, got {type(other).__name__}")
        if self.field is not other.field:
            raise FieldMismatch(f"{self.field!r} vs {other.field!r}")

    def __add__(self, other):
        self._check(other)
        f = self.field
        if f.p is None:
            return FieldElement._raw(f, self.value + other.value)
        return f._make((self.value + other.value) % f.p)

    def __sub__(self, other):
        self._check(other)
        f = self.field
        if f.p is None:
            return FieldElement._raw(f, self.value - other.value)
        return f._make((self.value - other.value) % f.p)

    def __mul__(self, other):
        self._check(other)
        f = self.field
        if f.p is None:
            return FieldElement._raw(f, self.value * other.value)
        return f._make((self.value * other.value) % f.p)

    def __truediv__(self, other):
        self._check(other)
        f = self.field
        if f.p is None:
            if not other.value:
                raise DivisionByZero("division by zero")
            return FieldElement._raw(f, self.value / other.value)
        if not other.value:
            raise DivisionByZero("division by zero residue")
        return f._make((self.value * pow(other.value, -1, f.p)) % f.p)

    def __neg__(self):
        f = self.field
        if f.p is None:
            return FieldElement._raw(f, -self.value)
        return f._make((-self.value) % f.p)

    def inverse(self) -> "FieldElement":
        return self.field.one / self

    def __pow__(self, n: int) -> "FieldElement":
        f = self.field
        if n < 0:
            return self.inverse() ** (-n)
        if f.p is None:
            return FieldElement._raw(f, self.value**n)
        return f._make(pow(self.value, n, f.p))

    def __bool__(self) -> bool:
        return bool(self.value)

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.field is other.field and self.value == other.value

    def __hash__(self) -> int:
        return hash((self.field.p, self.value))

    def __str__(self) -> str:
        return str(self.value)

    def __repr__(self) -> str:
        return f"<{self.value} in {self.field.token}>"


_SCALAR_RE = re.compile(r"([+-]?\d+)(?:/(\d+))?")


def parse_scalar(text: str, field: FieldSpec) -> FieldElement:
    """Parse 'a' or 'a/b' into a canonical field element.

    Over a prime field 'a/b' means a * b^-1; a zero denominator (or a
    denominator divisible by p) raises DivisionByZero.
    """
    m = _SCALAR_RE.fullmatch(text)
    if m is None:
        raise ParseError(f"bad scalar literal {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if field.p is None:
        if den == 0:
            raise DivisionByZero(f"zero denominator in {text!r}")
        return FieldElement._raw(field, Fraction(num, den))
    if den % field.p == 0:
        raise DivisionByZero(f"denominator of {text!r} is zero mod {field.p}")
    return field.element(num) / field.element(den)
