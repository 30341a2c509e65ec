import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from labatie import GF, QQ, BiPoly, PolySource, format_poly, parse_poly
from labatie.errors import ModulusMismatch, NegativeExponent, PolySyntaxError, ZeroDenominator

from .strategies import bipolys, fields


def test_parse_example_polynomial():
    assert parse_poly("y^5 - x^3", QQ) == BiPoly.from_terms({(0, 5): 1, (3, 0): -1}, QQ)
    assert PolySource("y^5-x^3", QQ).parse() == parse_poly("  y ^ 5 -  x^3 ", QQ)


def test_zero():
    assert parse_poly("0", QQ) == BiPoly.zero(QQ)
    assert format_poly(BiPoly.zero(QQ)) == "0"


def test_expanded_product():
    # hand expansion: x^11*y - y - x^16 + x^5
    expected = BiPoly.from_terms({(11, 1): 1, (0, 1): -1, (16, 0): -1, (5, 0): 1}, QQ)
    assert parse_poly("(y - x^5)*(x^11 - 1)", QQ) == expected


def test_format_examples():
    assert format_poly(parse_poly("x*y^2 - 1", QQ)) == "x*y^2 - 1"
    assert format_poly(parse_poly("1 + y", QQ)) == "y + 1"
    assert format_poly(parse_poly("-x^3 + y^5", QQ)) == "y^5 - x^3"
    assert format_poly(parse_poly("-3/2*x*y + 1/3", QQ)) == "-3/2*x*y + 1/3"
    assert format_poly(parse_poly("y - 1", GF(7))) == "y + 6"


def test_unary_minus_and_literals():
    assert parse_poly("-x - -y", QQ) == parse_poly("y - x", QQ)
    assert parse_poly("(1/2)^2*x", QQ) == parse_poly("1/4*x", QQ)
    assert parse_poly("10*x", GF(7)) == parse_poly("3*x", GF(7))
    assert parse_poly("+x", QQ) == parse_poly("x", QQ)


@pytest.mark.parametrize(
    "text",
    ["", "x +", "x y", "2x", "x^", "x^y", "(x + 1", "x + 1)", "x ** 2", "x / 2", "z", "x * * y", "--x", "1/"],
)
def test_syntax_errors(text):
    with pytest.raises(PolySyntaxError):
        parse_poly(text, QQ)


def test_syntax_error_reports_position():
    with pytest.raises(PolySyntaxError) as info:
        parse_poly("x + * y", QQ)
    assert info.value.pos == 4
    assert "expected" in str(info.value)


def test_specific_errors():
    with pytest.raises(NegativeExponent):
        parse_poly("x^-2", QQ)
    with pytest.raises(ZeroDenominator):
        parse_poly("3/0*x", QQ)
    with pytest.raises(ModulusMismatch):
        parse_poly("1/2*x", GF(7))


@settings(max_examples=200, deadline=None)
@given(st.data())
def test_round_trip(data):
    field = data.draw(fields)
    w = data.draw(bipolys(field, 5, 5))
    assert parse_poly(format_poly(w), field) == w


@settings(max_examples=200, deadline=None)
@given(st.data())
def test_mutations_never_give_wrong_values(data):
    field = data.draw(fields)
    w = data.draw(bipolys(field, 3, 3))
    text = format_poly(w)
    ops = [i for i, ch in enumerate(text) if ch in "+-*"]
    if ops:
        k = data.draw(st.sampled_from(ops))
        mutated = text[:k] + text[k + 1 :]
        if text[k] == "-" and k == 0:
            return  # dropping a leading sign yields another valid expression
        with pytest.raises(PolySyntaxError):
            parse_poly(mutated, field)
    with pytest.raises(PolySyntaxError):
        parse_poly(text + "^", field)
