"""Dense univariate polynomials over an exact field (the ring K[x]).

A polynomial is an immutable tuple of bare coefficients, lowest degree
first, with no trailing zeros; the zero polynomial is the empty tuple.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction
from typing import Iterable

from .errors import (
    BothZero,
    DivisionByZeroPoly,
    FieldMismatch,
    InexactDivision,
    ZeroPolynomial,
)
from .field import FieldElement, FieldSpec


def _strip(coeffs: list) -> tuple:
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    return tuple(coeffs[:n])


class UniPoly:
    __slots__ = ("coeffs", "field", "_hash")

    def __init__(self, coeffs: Iterable, field: FieldSpec):
        self.field = field
        self.coeffs = _strip([field.convert(c) for c in coeffs])
        self._hash = None

    @classmethod
    def _raw(cls, coeffs: list, field: FieldSpec) -> UniPoly:
        # coeffs are already canonical bare values
        p = cls.__new__(cls)
        p.field = field
        p.coeffs = _strip(coeffs)
        p._hash = None
        return p

    @classmethod
    def zero(cls, field: FieldSpec) -> UniPoly:
        return cls._raw([], field)

    @classmethod
    def constant(cls, c, field: FieldSpec) -> UniPoly:
        return cls._raw([field.convert(c)], field)

    @classmethod
    def x(cls, field: FieldSpec) -> UniPoly:
        return cls._raw([field.zero, field.one], field)

    @classmethod
    def linear_root(cls, c, field: FieldSpec) -> UniPoly:
        """The monic polynomial x - c."""
        return cls._raw([field.norm(-field.convert(c)), field.one], field)

    # -- basic queries -----------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self):
        if not self.coeffs:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def is_one(self) -> bool:
        return len(self.coeffs) == 1 and self.coeffs[0] == 1

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, j):
        return self.coeffs[j] if 0 <= j < len(self.coeffs) else self.field.zero

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.field == other.field and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == UniPoly.constant(other, self.field).coeffs
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.coeffs, self.field))
        return self._hash

    def __repr__(self):
        return f"UniPoly({list(self.coeffs)!r}, {self.field})"

    def __str__(self):
        from .parser import format_univariate

        return format_univariate(self)

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other) -> UniPoly:
        if isinstance(other, UniPoly):
            if other.field != self.field:
                raise FieldMismatch(f"cannot combine polynomials over {self.field} and {other.field}")
            return other
        if isinstance(other, (int, Fraction, FieldElement)):
            return UniPoly.constant(other, self.field)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        norm = self.field.norm
        out = list(a)
        for j, c in enumerate(b):
            out[j] = norm(out[j] + c)
        return UniPoly._raw(out, self.field)

    __radd__ = __add__

    def __neg__(self):
        norm = self.field.norm
        return UniPoly._raw([norm(-c) for c in self.coeffs], self.field)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly.zero(self.field)
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if not ca:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        norm = self.field.norm
        return UniPoly._raw([norm(c) for c in out], self.field)

    __rmul__ = __mul__

    def scale(self, c) -> UniPoly:
        c = self.field.convert(c)
        norm = self.field.norm
        return UniPoly._raw([norm(c * a) for a in self.coeffs], self.field)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = UniPoly.constant(1, self.field)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __divmod__(self, other):
        return poly_divmod(self, self._coerce(other))

    def __floordiv__(self, other):
        return poly_divmod(self, self._coerce(other))[0]

    def __mod__(self, other):
        return poly_divmod(self, self._coerce(other))[1]

    def exact_div(self, other) -> UniPoly:
        """Quotient of a division known to be exact; raises otherwise."""
        q, r = poly_divmod(self, self._coerce(other))
        if r:
            raise InexactDivision(f"{other} does not divide {self}")
        return q

    def divides(self, other: UniPoly) -> bool:
        return not poly_divmod(other, self)[1]

    def monic(self) -> UniPoly:
        if not self.coeffs:
            return self
        lc = self.coeffs[-1]
        if lc == 1:
            return self
        return self.scale(self.field.inv(lc))

    # -- evaluation --------------------------------------------------------

    def evaluate(self, c):
        """Horner evaluation at a bare field value; returns a bare value."""
        c = self.field.convert(c)
        norm = self.field.norm
        acc = self.field.zero
        for a in reversed(self.coeffs):
            acc = norm(acc * c + a)
        return acc

    def __call__(self, c) -> FieldElement:
        return FieldElement(self.evaluate(c), self.field)

    def shift(self, c) -> UniPoly:
        """The polynomial p(x + c)."""
        c = self.field.convert(c)
        result = UniPoly.zero(self.field)
        step = UniPoly._raw([c, self.field.one], self.field)
        for a in reversed(self.coeffs):
            result = result * step + UniPoly._raw([a], self.field)
        return result


def poly_divmod(a: UniPoly, b: UniPoly) -> tuple[UniPoly, UniPoly]:
    """Euclidean division ``a = q*b + r`` with ``deg r < deg b``."""
    if a.field != b.field:
        raise FieldMismatch(f"cannot divide over {a.field} by a polynomial over {b.field}")
    if not b.coeffs:
        raise DivisionByZeroPoly("division by the zero polynomial")
    field = a.field
    norm = field.norm
    db = b.degree
    rem = list(a.coeffs)
    if len(rem) <= db:
        return UniPoly.zero(field), a
    inv_lc = field.inv(b.coeffs[-1])
    bc = b.coeffs
    quo = [field.zero] * (len(rem) - db)
    for k in range(len(rem) - 1 - db, -1, -1):
        c = rem[k + db]
        if not c:
            continue
        c = norm(c * inv_lc)
        quo[k] = c
        for j in range(db + 1):
            rem[k + j] = norm(rem[k + j] - c * bc[j])
    return UniPoly._raw(quo, field), UniPoly._raw(rem[:db], field)


def gcd_monic(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic greatest common divisor by the Euclidean algorithm."""
    if a.field != b.field:
        raise FieldMismatch(f"gcd over {a.field} and {b.field}")
    if not a and not b:
        raise BothZero("gcd(0, 0) is undefined")
    if not a.field.is_prime_field and a and b:
        return _gcd_rational(a, b)
    while b:
        a, b = b, poly_divmod(a, b)[1]
    return a.monic()


def _primitive_ints(p: UniPoly) -> list[int]:
    den = 1
    for c in p.coeffs:
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c * den) for c in p.coeffs]
    return _strip_content(ints)


def _strip_content(ints: list[int]) -> list[int]:
    g = 0
    for c in ints:
        g = math.gcd(g, c)
        if g == 1:
            return ints
    return [c // g for c in ints]


def _gcd_rational(a: UniPoly, b: UniPoly) -> UniPoly:
    # primitive remainder sequence over Z; Euclid on Fractions blows up
    x, y = _primitive_ints(a), _primitive_ints(b)
    if len(x) < len(y):
        x, y = y, x
    while len(y) > 1:
        r = _int_pseudo_remainder(x, y)
        if not r:
            return UniPoly([Fraction(c) for c in y], a.field).monic()
        x, y = y, _strip_content(r)
    return UniPoly.constant(1, a.field)


def _int_pseudo_remainder(x: list[int], y: list[int]) -> list[int]:
    r = list(x)
    dy = len(y) - 1
    lc = y[-1]
    while len(r) - 1 >= dy and r:
        top = r[-1]
        shift = len(r) - 1 - dy
        r = [c * lc for c in r]
        for j in range(dy + 1):
            r[shift + j] -= top * y[j]
        while r and r[-1] == 0:
            r.pop()
    return r


def ord_at(p: UniPoly, c) -> int:
    """Multiplicity of ``c`` as a root of ``p`` (0 when ``p(c) != 0``)."""
    if not p:
        raise ZeroPolynomial("ord of the zero polynomial is undefined")
    c = p.field.convert(c)
    field = p.field
    norm = field.norm
    coeffs = list(p.coeffs)
    k = 0
    # synthetic division by (x - c) while the remainder vanishes
    while len(coeffs) > 1:
        acc = field.zero
        quo = [field.zero] * (len(coeffs) - 1)
        for j in range(len(coeffs) - 1, 0, -1):
            acc = norm(acc * c + coeffs[j])
            quo[j - 1] = acc
        if norm(acc * c + coeffs[0]):
            break
        coeffs = quo
        k += 1
    return k


def roots_in_field(p: UniPoly) -> list[tuple[FieldElement, int]]:
    """All roots of ``p`` in the ground field with multiplicities, sorted.

    Over GF(p) every field element is tried.  Over Q the candidates are the
    fractions r/s with r dividing the trailing and s the leading coefficient
    of the denominator-cleared polynomial.
    """
    if not p:
        raise ZeroPolynomial("roots of the zero polynomial")
    field = p.field
    if p.degree == 0:
        return []
    if field.is_prime_field:
        found = [c for c in field.elements() if not p.evaluate(c)]
    else:
        found = sorted(_rational_roots(p))
    return [(FieldElement(c, field), ord_at(p, c)) for c in found]


def _rational_roots(p: UniPoly) -> set:
    field = p.field
    lcm = 1
    for c in p.coeffs:
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    ints = [int(c * lcm) for c in p.coeffs]
    roots = set()
    shift = 0
    while ints[shift] == 0:
        shift += 1
    if shift:
        roots.add(Fraction(0))
    ints = ints[shift:]
    if len(ints) == 1:
        return roots
    # squarefree part keeps the candidate search small; roots are unchanged
    q = UniPoly([Fraction(c) for c in ints], field)
    dq = UniPoly._raw([field.norm(j * c) for j, c in enumerate(q.coeffs)][1:], field)
    q = q.exact_div(gcd_monic(q, dq))
    den = 1
    for c in q.coeffs:
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c * den) for c in q.coeffs]
    g = 0
    for c in ints:
        g = math.gcd(g, c)
    ints = [c // g for c in ints]
    if len(ints) == 2:
        roots.add(Fraction(-ints[0], ints[1]))
        return roots
    lead, trail = abs(ints[-1]), abs(ints[0])
    f1 = sum(ints)
    fm1 = sum(c if j % 2 == 0 else -c for j, c in enumerate(ints))
    for s in _divisors(lead):
        for r in _divisors(trail):
            if math.gcd(r, s) != 1:
                continue
            for num in (r, -r):
                # f(1) and f(-1) must be divisible by (s - num) and (s + num)
                if s - num and f1 % (s - num):
                    continue
                if s + num and fm1 % (s + num):
                    continue
                cand = Fraction(num, s)
                if not q.evaluate(cand):
                    roots.add(cand)
    return roots


def supported_part_degree(g: UniPoly, h: UniPoly) -> int:
    """Number of closure roots of ``g`` (weighted by ord in ``g``) shared with ``h``."""
    if not g:
        raise ZeroPolynomial("supported_part_degree of the zero polynomial")
    m = g
    t = gcd_monic(m, h)
    while t.degree > 0:
        m = m.exact_div(t)
        t = gcd_monic(m, h)
    return g.degree - m.degree


# -- integer factorization for the rational root candidates ------------------

_SMALL_PRIMES = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47]


def _is_probable_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in _SMALL_PRIMES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    # deterministic for n < 3.3e24 with these bases
    for a in _SMALL_PRIMES[:13]:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int, rng: random.Random) -> int:
    if n % 2 == 0:
        return 2
    while True:
        c = rng.randrange(1, n)
        y, g, r, q = rng.randrange(n), 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(128, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += 128
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def _factor(n: int, out: dict, rng: random.Random) -> None:
    for q in _SMALL_PRIMES:
        while n % q == 0:
            out[q] = out.get(q, 0) + 1
            n //= q
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if _is_probable_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        d = _pollard_rho(m, rng)
        stack.extend((d, m // d))


def _divisors(n: int) -> list[int]:
    n = abs(n)
    if n == 0:
        raise ValueError("divisors of 0")
    factors: dict = {}
    _factor(n, factors, random.Random(n))
    divs = [1]
    for q, e in factors.items():
        divs = [d * q**k for d in divs for k in range(e + 1)]
    return sorted(divs)
