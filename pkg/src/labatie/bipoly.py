"""Bivariate polynomials in K[x][y], dense in y with UniPoly coefficients."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from .errors import DegreeOrder, FieldMismatch, InexactDivision, ZeroPolynomial
from .field import FieldElement, FieldSpec
from .unipoly import UniPoly, gcd_monic


def _strip(coeffs: list) -> tuple:
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    return tuple(coeffs[:n])


class BiPoly:
    """``coeffs[j]`` is the K[x]-coefficient of ``y**j``."""

    __slots__ = ("coeffs", "field", "_hash")

    def __init__(self, coeffs: Iterable[UniPoly], field: FieldSpec):
        coeffs = list(coeffs)
        for c in coeffs:
            if c.field != field:
                raise FieldMismatch(f"coefficient over {c.field} in a polynomial over {field}")
        self.field = field
        self.coeffs = _strip(coeffs)
        self._hash = None

    @classmethod
    def zero(cls, field: FieldSpec) -> BiPoly:
        return cls([], field)

    @classmethod
    def one(cls, field: FieldSpec) -> BiPoly:
        return cls.from_uni(UniPoly.constant(1, field))

    @classmethod
    def from_uni(cls, p: UniPoly) -> BiPoly:
        """Embed a polynomial in x as a constant in y."""
        return cls([p], p.field)

    @classmethod
    def x(cls, field: FieldSpec) -> BiPoly:
        return cls.from_uni(UniPoly.x(field))

    @classmethod
    def y(cls, field: FieldSpec) -> BiPoly:
        return cls([UniPoly.zero(field), UniPoly.constant(1, field)], field)

    @classmethod
    def from_terms(cls, terms: Mapping[tuple[int, int], object], field: FieldSpec) -> BiPoly:
        """Build from ``{(i, j): c}`` meaning ``c * x**i * y**j``."""
        if not terms:
            return cls.zero(field)
        dy = max(j for _, j in terms)
        rows = [dict() for _ in range(dy + 1)]
        for (i, j), c in terms.items():
            rows[j][i] = field.norm(rows[j].get(i, field.zero) + field.convert(c))
        coeffs = []
        for row in rows:
            dx = max(row) if row else -1
            coeffs.append(UniPoly._raw([row.get(i, field.zero) for i in range(dx + 1)], field))
        return cls(coeffs, field)

    # -- queries -----------------------------------------------------------

    @property
    def deg_y(self) -> int:
        """Degree in y; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def deg_x(self) -> int:
        return max((c.degree for c in self.coeffs), default=-1)

    @property
    def total_degree(self) -> int:
        return max((c.degree + j for j, c in enumerate(self.coeffs) if c), default=-1)

    @property
    def lc_y(self) -> UniPoly:
        if not self.coeffs:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def coeff(self, j: int) -> UniPoly:
        if 0 <= j < len(self.coeffs):
            return self.coeffs[j]
        return UniPoly.zero(self.field)

    def terms(self) -> dict[tuple[int, int], object]:
        """Non-zero coefficients keyed by ``(x-exponent, y-exponent)``."""
        return {
            (i, j): c
            for j, p in enumerate(self.coeffs)
            for i, c in enumerate(p.coeffs)
            if c
        }

    def is_y_primitive(self) -> bool:
        return bool(self) and y_content(self).is_one()

    def __eq__(self, other):
        if isinstance(other, BiPoly):
            return self.field == other.field and self.coeffs == other.coeffs
        if isinstance(other, UniPoly):
            return self == BiPoly.from_uni(other)
        if isinstance(other, (int, Fraction)):
            return self == BiPoly.from_uni(UniPoly.constant(other, self.field))
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.coeffs, self.field))
        return self._hash

    def __repr__(self):
        return f"BiPoly({str(self)!r}, {self.field})"

    def __str__(self):
        from .parser import format_poly

        return format_poly(self)

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, BiPoly):
            if other.field != self.field:
                raise FieldMismatch(f"cannot combine polynomials over {self.field} and {other.field}")
            return other
        if isinstance(other, UniPoly):
            if other.field != self.field:
                raise FieldMismatch(f"cannot combine polynomials over {self.field} and {other.field}")
            return BiPoly.from_uni(other)
        if isinstance(other, (int, Fraction, FieldElement)):
            return BiPoly.from_uni(UniPoly.constant(other, self.field))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for j, c in enumerate(b):
            out[j] = out[j] + c
        return BiPoly(out, self.field)

    __radd__ = __add__

    def __neg__(self):
        return BiPoly([-c for c in self.coeffs], self.field)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, UniPoly):
            if other.field != self.field:
                raise FieldMismatch(f"cannot combine polynomials over {self.field} and {other.field}")
            return BiPoly([c * other for c in self.coeffs], self.field)
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return BiPoly.zero(self.field)
        out = [UniPoly.zero(self.field)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if not ca:
                continue
            for j, cb in enumerate(b):
                if cb:
                    out[i + j] = out[i + j] + ca * cb
        return BiPoly(out, self.field)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = BiPoly.one(self.field)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def mul_y_power(self, k: int) -> BiPoly:
        if not self.coeffs:
            return self
        return BiPoly([UniPoly.zero(self.field)] * k + list(self.coeffs), self.field)

    def exact_div_uni(self, d: UniPoly) -> BiPoly:
        """Divide every y-coefficient by ``d``; the division must be exact."""
        out = []
        for c in self.coeffs:
            try:
                out.append(c.exact_div(d))
            except InexactDivision:
                raise InexactDivision(f"{d} does not divide {self}") from None
        return BiPoly(out, self.field)

    # -- evaluation --------------------------------------------------------

    def section_at(self, a) -> UniPoly:
        return section_at(self, a)

    def evaluate(self, a, b):
        return eval_point(self, a, b).value

    def __call__(self, a, b) -> FieldElement:
        return eval_point(self, a, b)

    def shift(self, a, b) -> BiPoly:
        """The polynomial W(x + a, y + b)."""
        field = self.field
        xs = [c.shift(a) for c in self.coeffs]
        step = BiPoly([UniPoly.constant(b, field), UniPoly.constant(1, field)], field)
        result = BiPoly.zero(field)
        for c in reversed(xs):
            result = result * step + BiPoly.from_uni(c)
        return result

    def swap_xy(self) -> BiPoly:
        return BiPoly.from_terms({(j, i): c for (i, j), c in self.terms().items()}, self.field)


def y_content(w: BiPoly) -> UniPoly:
    """Monic gcd in K[x] of the y-coefficients."""
    if not w:
        raise ZeroPolynomial("y-content of the zero polynomial")
    g = UniPoly.zero(w.field)
    for c in w.coeffs:
        if c:
            g = gcd_monic(g, c)
            if g.is_one():
                break
    return g


def y_primitive_part(w: BiPoly) -> BiPoly:
    content = y_content(w)
    if content.is_one():
        return w
    return w.exact_div_uni(content)


def pseudo_divide(w: BiPoly, v: BiPoly) -> tuple[UniPoly, BiPoly, BiPoly]:
    """Pseudo-division ``u*w = q*v + r`` with ``u = lc_y(v)**(deg_y w - deg_y v + 1)``."""
    if w.field != v.field:
        raise FieldMismatch(f"pseudo-division over {w.field} and {v.field}")
    if v.deg_y <= 0:
        raise DegreeOrder(f"divisor must have positive y-degree, got {v.deg_y}")
    if v.deg_y > w.deg_y:
        raise DegreeOrder(f"deg_y of divisor ({v.deg_y}) exceeds deg_y of dividend ({w.deg_y})")
    field = w.field
    dv = v.deg_y
    delta = w.deg_y - dv
    lc = v.lc_y
    vc = v.coeffs
    rem = list(w.coeffs)
    quo = [UniPoly.zero(field)] * (delta + 1)
    # each pass multiplies everything so far by lc and cancels the top term
    for k in range(delta, -1, -1):
        top = rem[k + dv]
        quo = [q * lc for q in quo]
        quo[k] = top
        rem = [c * lc for c in rem]
        for j in range(dv + 1):
            rem[k + j] = rem[k + j] - top * vc[j]
    u = lc ** (delta + 1)
    return u, BiPoly(quo, field), BiPoly(rem[:dv], field)


def section_at(w: BiPoly, a) -> UniPoly:
    """The univariate polynomial W(a, y) in y."""
    a = w.field.convert(a)
    return UniPoly._raw([c.evaluate(a) for c in w.coeffs], w.field)


def eval_point(w: BiPoly, a, b) -> FieldElement:
    field = w.field
    a, b = field.convert(a), field.convert(b)
    norm = field.norm
    acc = field.zero
    for c in reversed(w.coeffs):
        acc = norm(acc * b + c.evaluate(a))
    return FieldElement(acc, field)


def bivariate_gcd(a: BiPoly, b: BiPoly) -> BiPoly:
    """A gcd of two polynomials in K[x, y] (unique up to a unit of K).

    The content parts are combined with ``gcd_monic``; the primitive parts
    go through a primitive remainder sequence.
    """
    if a.field != b.field:
        raise FieldMismatch(f"gcd over {a.field} and {b.field}")
    if not a:
        return b
    if not b:
        return a
    content = gcd_monic(y_content(a), y_content(b))
    pa, pb = y_primitive_part(a), y_primitive_part(b)
    if pa.deg_y < pb.deg_y:
        pa, pb = pb, pa
    while pb.deg_y > 0:
        _, _, r = pseudo_divide(pa, pb)
        if not r:
            break
        pa, pb = pb, y_primitive_part(r)
    else:
        return BiPoly.from_uni(content)
    return pb * content
