"""Exact scalar fields: the rationals and prime fields GF(p).

Hot loops work on *raw* values (``Fraction`` for Q, canonical ``int``
residues for GF(p)) through the methods of :class:`Field`.  The
:class:`Scalar` wrapper is the checked, user-facing value type.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache


class FieldMismatchError(ValueError):
    """Raised when operands from two different fields are combined."""


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class Field:
    """Q when ``characteristic == 0``, otherwise GF(characteristic)."""

    characteristic: int = 0

    def __post_init__(self):
        c = self.characteristic
        if not isinstance(c, int) or (c != 0 and not is_prime(c)):
            raise ValueError(f"characteristic must be 0 or a prime, got {c!r}")

    def __repr__(self):
        return "Q" if self.characteristic == 0 else f"GF({self.characteristic})"

    @property
    def name(self) -> str:
        return repr(self)

    # raw-value interface -------------------------------------------------
    @property
    def zero(self):
        return Fraction(0) if self.characteristic == 0 else 0

    @property
    def one(self):
        return Fraction(1) if self.characteristic == 0 else 1

    def coerce(self, x):
        """Map an int / Fraction / Scalar into a raw value of this field."""
        if isinstance(x, Scalar):
            if x.field != self:
                raise FieldMismatchError(f"{x.field!r} value used in {self!r}")
            return x.value
        p = self.characteristic
        if p == 0:
            return Fraction(x)
        if isinstance(x, Fraction):
            return (x.numerator * pow(x.denominator, -1, p)) % p
        return int(x) % p

    def normalize(self, v):
        return v % self.characteristic if self.characteristic else v

    def add(self, a, b):
        return self.normalize(a + b)

    def sub(self, a, b):
        return self.normalize(a - b)

    def mul(self, a, b):
        return self.normalize(a * b)

    def neg(self, a):
        return self.normalize(-a)

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError(f"inverse of zero in {self!r}")
        p = self.characteristic
        return pow(a, -1, p) if p else 1 / a

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def __call__(self, x) -> "Scalar":
        return Scalar(self, self.coerce(x))


QQ = Field(0)


@lru_cache(maxsize=None)
def GF(p: int) -> Field:
    return Field(p)


@dataclass(frozen=True)
class Scalar:
    """An immutable field element tagged with its field."""

    field: Field
    value: object

    def _other(self, other):
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldMismatchError(f"{self.field!r} vs {other.field!r}")
            return other.value
        return self.field.coerce(other)

    def __add__(self, other):
        return Scalar(self.field, self.field.add(self.value, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return Scalar(self.field, self.field.sub(self.value, self._other(other)))

    def __rsub__(self, other):
        return Scalar(self.field, self.field.sub(self._other(other), self.value))

    def __mul__(self, other):
        return Scalar(self.field, self.field.mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return Scalar(self.field, self.field.div(self.value, self._other(other)))

    def __neg__(self):
        return Scalar(self.field, self.field.neg(self.value))

    def inverse(self) -> "Scalar":
        return Scalar(self.field, self.field.inv(self.value))

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.field == other.field and self.value == other.value
        try:
            return self.value == self.field.coerce(other)
        except (TypeError, ValueError, ZeroDivisionError):
            return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"{self.value}" if self.field.characteristic == 0 else f"{self.value} mod {self.field.characteristic}"


_OPS = {"add", "sub", "mul", "div", "neg", "inv"}


def field_arith(op: str, a: Scalar, b: Scalar | None = None) -> Scalar:
    """Dispatch one field operation by name (``add``, ``sub``, ``mul``, ``div``, ``neg``, ``inv``)."""
    if op not in _OPS:
        raise ValueError(f"unknown operation {op!r}")
    if op == "neg":
        return -a
    if op == "inv":
        return a.inverse()
    if b is None:
        raise ValueError(f"{op} needs two operands")
    if not isinstance(b, Scalar) or b.field != a.field:
        raise FieldMismatchError("operands must be Scalars of the same field")
    return {"add": a.__add__, "sub": a.__sub__, "mul": a.__mul__, "div": a.__truediv__}[op](b)


def divides_two_t_plus_one(field: Field | int, T: int) -> bool:
    """True iff the characteristic is a prime dividing 2T+1."""
    p = field.characteristic if isinstance(field, Field) else int(field)
    return p > 0 and (2 * T + 1) % p == 0


def as_field(x) -> Field:
    if isinstance(x, Field):
        return x
    return QQ if x == 0 else GF(int(x))
