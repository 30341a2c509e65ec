"""Text form of polynomials in x and y.

Grammar (whitespace is insignificant)::

    expr   := ['+'|'-'] term (('+'|'-') ['+'|'-'] term)*
    term   := factor ('*' factor)*
    factor := base ('^' integer)?
    base   := 'x' | 'y' | number | '(' expr ')'
    number := integer | integer '/' integer      (fractions over Q only)

Expressions are expanded to canonical ``BiPoly`` form as they are parsed.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .bipoly import BiPoly
from .errors import ModulusMismatch, NegativeExponent, PolySyntaxError, ZeroDenominator
from .field import FieldSpec
from .unipoly import UniPoly

MAX_EXPONENT = 10_000

_TOKEN = re.compile(r"\s*(?:(\d+)|(.))")


@dataclass(frozen=True)
class PolySource:
    text: str
    field: FieldSpec

    def parse(self) -> BiPoly:
        return parse_poly(self.text, self.field)


@dataclass(frozen=True)
class _Tok:
    kind: str  # 'int', 'x', 'y', an operator character, or 'end'
    text: str
    pos: int


def _tokenize(text: str) -> list[_Tok]:
    toks = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        if text[pos].isdigit():
            end = pos
            while end < n and text[end].isdigit():
                end += 1
            toks.append(_Tok("int", text[pos:end], pos))
            pos = end
            continue
        ch = text[pos]
        if ch in "xy+-*^/()":
            toks.append(_Tok(ch, ch, pos))
        else:
            raise PolySyntaxError(f"unexpected character {ch!r}", pos)
        pos += 1
    toks.append(_Tok("end", "", n))
    return toks


class _Parser:
    def __init__(self, text: str, field: FieldSpec):
        self.field = field
        self.toks = _tokenize(text)
        self.i = 0

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def advance(self) -> _Tok:
        t = self.toks[self.i]
        self.i += 1
        return t

    def fail(self, expected: str):
        t = self.tok
        got = "end of input" if t.kind == "end" else repr(t.text)
        raise PolySyntaxError(f"expected {expected}, got {got}", t.pos)

    def parse(self) -> BiPoly:
        if self.tok.kind == "end":
            self.fail("an expression")
        result = self.expr()
        if self.tok.kind != "end":
            self.fail("'+', '-', '*' or end of input")
        return result

    def signed_term(self) -> BiPoly:
        # at most one unary sign: "--x" is rejected
        negate = False
        if self.tok.kind in ("+", "-"):
            negate = self.advance().kind == "-"
        t = self.term()
        return -t if negate else t

    def expr(self) -> BiPoly:
        result = self.signed_term()
        while self.tok.kind in ("+", "-"):
            op = self.advance().kind
            t = self.signed_term()
            result = result + t if op == "+" else result - t
        return result

    def term(self) -> BiPoly:
        result = self.factor()
        while self.tok.kind == "*":
            self.advance()
            result = result * self.factor()
        return result

    def factor(self) -> BiPoly:
        base = self.base()
        if self.tok.kind != "^":
            return base
        self.advance()
        if self.tok.kind == "-":
            raise NegativeExponent("negative exponents are not allowed", self.tok.pos)
        if self.tok.kind != "int":
            self.fail("a non-negative integer exponent")
        t = self.advance()
        k = int(t.text)
        if k > MAX_EXPONENT:
            raise PolySyntaxError(f"exponent {k} exceeds {MAX_EXPONENT}", t.pos)
        return base**k

    def base(self) -> BiPoly:
        t = self.tok
        field = self.field
        if t.kind == "x":
            self.advance()
            return BiPoly.x(field)
        if t.kind == "y":
            self.advance()
            return BiPoly.y(field)
        if t.kind == "int":
            self.advance()
            num = int(t.text)
            if self.tok.kind != "/":
                return BiPoly.from_uni(UniPoly.constant(num, field))
            slash = self.advance()
            if self.tok.kind != "int":
                self.fail("an integer denominator")
            den = int(self.advance().text)
            if den == 0:
                raise ZeroDenominator("zero denominator", slash.pos)
            if field.is_prime_field:
                raise ModulusMismatch(f"fractional literal {num}/{den} over {field}", t.pos)
            return BiPoly.from_uni(UniPoly.constant(Fraction(num, den), field))
        if t.kind == "(":
            self.advance()
            inner = self.expr()
            if self.tok.kind != ")":
                self.fail("')'")
            self.advance()
            return inner
        self.fail("'x', 'y', a number or '('")


def parse_poly(src: str | PolySource, field: FieldSpec | None = None) -> BiPoly:
    """Parse polynomial text over ``field`` into canonical form."""
    if isinstance(src, PolySource):
        text, field = src.text, src.field
    else:
        text = src
    if field is None:
        raise TypeError("a field is required")
    return _Parser(text, field).parse()


def _monomial(field: FieldSpec, c, i: int, j: int) -> tuple[bool, str]:
    """Return (negative, text) for ``c * x^i * y^j``."""
    neg = not field.is_prime_field and c < 0
    mag = -c if neg else c
    parts = []
    if i:
        parts.append("x" if i == 1 else f"x^{i}")
    if j:
        parts.append("y" if j == 1 else f"y^{j}")
    if mag != 1 or not parts:
        parts.insert(0, field.format_scalar(mag))
    return neg, "*".join(parts)


def _join(pieces: list[tuple[bool, str]]) -> str:
    if not pieces:
        return "0"
    out = []
    for k, (neg, text) in enumerate(pieces):
        if k == 0:
            out.append(f"-{text}" if neg else text)
        else:
            out.append(f" - {text}" if neg else f" + {text}")
    return "".join(out)


def format_poly(w: BiPoly) -> str:
    """Canonical text: decreasing y-power, then decreasing x-power."""
    pieces = []
    for j in range(w.deg_y, -1, -1):
        c = w.coeffs[j]
        for i in range(c.degree, -1, -1):
            if c.coeffs[i]:
                pieces.append(_monomial(w.field, c.coeffs[i], i, j))
    return _join(pieces)


def format_univariate(p: UniPoly, var: str = "x") -> str:
    pieces = []
    for i in range(p.degree, -1, -1):
        if p.coeffs[i]:
            neg, text = _monomial(p.field, p.coeffs[i], i, 0)
            if var != "x":
                text = text.replace("x", var)
            pieces.append((neg, text))
    return _join(pieces)
