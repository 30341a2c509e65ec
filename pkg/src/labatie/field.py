"""Exact ground fields: the rationals Q and prime fields GF(p).

Polynomials store bare coefficient values (``Fraction`` over Q, ``int`` in
``[0, p)`` over GF(p)) next to a :class:`FieldSpec`, which knows how to
canonicalize and invert them.  :class:`FieldElement` is the boxed form used
at API boundaries (points, roots).
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering

from .errors import FieldMismatch, NotPrime, ZeroDenominator

MAX_MODULUS = 2**31


class FieldKind(enum.Enum):
    RATIONALS = "Rationals"
    PRIME_FIELD = "PrimeField"


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    kind: FieldKind
    modulus: int | None = None

    def __post_init__(self):
        if self.kind is FieldKind.PRIME_FIELD:
            if not isinstance(self.modulus, int) or isinstance(self.modulus, bool):
                raise NotPrime(f"modulus must be an integer, got {self.modulus!r}")
            if self.modulus >= MAX_MODULUS:
                raise NotPrime(f"modulus {self.modulus} exceeds the supported bound 2^31")
            if not is_prime(self.modulus):
                raise NotPrime(f"modulus {self.modulus} is not prime")
        elif self.modulus is not None:
            raise ValueError("the rationals take no modulus")

    @property
    def is_prime_field(self) -> bool:
        return self.kind is FieldKind.PRIME_FIELD

    @property
    def zero(self):
        return 0 if self.is_prime_field else Fraction(0)

    @property
    def one(self):
        return 1 if self.is_prime_field else Fraction(1)

    def __call__(self, value) -> FieldElement:
        return FieldElement(self.convert(value), self)

    def convert(self, value):
        """Map an int, Fraction or FieldElement to the canonical bare value."""
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldMismatch(f"element of {value.field} used in {self}")
            return value.value
        if isinstance(value, bool):
            value = int(value)
        if self.is_prime_field:
            if isinstance(value, Fraction):
                if value.denominator == 1:
                    value = value.numerator
                else:
                    return value.numerator * pow(value.denominator, -1, self.modulus) % self.modulus
            if not isinstance(value, int):
                raise TypeError(f"cannot convert {value!r} to {self}")
            return value % self.modulus
        if isinstance(value, (int, Fraction)):
            return Fraction(value)
        raise TypeError(f"cannot convert {value!r} to {self}")

    def norm(self, c):
        """Canonicalize the result of a raw ``+ - *`` on two bare values."""
        return c % self.modulus if self.is_prime_field else c

    def inv(self, c):
        if not c:
            raise ZeroDivisionError("inverse of zero")
        if self.is_prime_field:
            return pow(c, -1, self.modulus)
        return 1 / c

    def div(self, a, b):
        return self.norm(a * self.inv(b))

    def elements(self):
        """Iterate over all elements of a finite field."""
        if not self.is_prime_field:
            raise FieldMismatch("the rationals cannot be enumerated")
        return range(self.modulus)

    def parse_scalar(self, text: str):
        """Parse ``"3"``, ``"-3"`` or (over Q) ``"3/4"`` into a bare value."""
        m = re.fullmatch(r"\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?", text)
        if not m:
            raise ValueError(f"not a scalar literal: {text!r}")
        num = int(m.group(1))
        if m.group(2) is None:
            return self.convert(num)
        den = int(m.group(2))
        if den == 0:
            raise ZeroDenominator(f"zero denominator in {text!r}")
        if self.is_prime_field:
            raise ValueError(f"fractional literal {text!r} over {self}")
        return Fraction(num, den)

    def format_scalar(self, c) -> str:
        return str(c)

    def json_scalar(self, c):
        """Exact JSON form: ``"num/den"`` over Q, a plain int over GF(p)."""
        if self.is_prime_field:
            return int(c)
        return f"{c.numerator}/{c.denominator}"

    def from_json_scalar(self, obj):
        if self.is_prime_field:
            return self.convert(int(obj))
        return self.parse_scalar(str(obj))

    def sort_key(self, c):
        return c

    def to_json(self) -> dict:
        if self.is_prime_field:
            return {"kind": self.kind.value, "modulus": self.modulus}
        return {"kind": self.kind.value}

    def __str__(self):
        return f"GF({self.modulus})" if self.is_prime_field else "Q"


QQ = FieldSpec(FieldKind.RATIONALS)


def GF(p: int) -> FieldSpec:
    return FieldSpec(FieldKind.PRIME_FIELD, p)


def parse_field(text: str) -> FieldSpec:
    """Parse the ``--field`` syntax: ``q`` or ``gf:7``."""
    t = text.strip().lower()
    if t in ("q", "qq", "rationals"):
        return QQ
    m = re.fullmatch(r"gf[:(]?(\d+)\)?", t)
    if m:
        return GF(int(m.group(1)))
    raise ValueError(f"unknown field {text!r}; use 'q' or 'gf:<prime>'")


@total_ordering
@dataclass(frozen=True)
class FieldElement:
    value: object
    field: FieldSpec

    def _other(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatch(f"cannot combine elements of {self.field} and {other.field}")
            return other.value
        if isinstance(other, (int, Fraction)):
            return self.field.convert(other)
        return NotImplemented

    def _wrap(self, c):
        return FieldElement(self.field.norm(c), self.field)

    def __add__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.value + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.value - o)

    def __rsub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(o - self.value)

    def __mul__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.value * o)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElement(self.field.div(self.value, o), self.field)

    def __neg__(self):
        return self._wrap(-self.value)

    def __bool__(self):
        return bool(self.value)

    def __lt__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return NotImplemented
        return self.value < o

    def __str__(self):
        return self.field.format_scalar(self.value)

    def __repr__(self):
        return f"FieldElement({self}, {self.field})"
