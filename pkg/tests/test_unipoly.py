from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from labatie import GF, QQ, UniPoly, gcd_monic, ord_at, poly_divmod, roots_in_field, supported_part_degree
from labatie.errors import BothZero, DivisionByZeroPoly, FieldMismatch, ZeroPolynomial

from .conftest import X
from .strategies import fields, unipolys


def test_divmod_examples():
    assert divmod(X("x^2 - 1"), X("x - 1")) == (X("x + 1"), UniPoly.zero(QQ))
    assert divmod(X("x^3"), X("x")) == (X("x^2"), UniPoly.zero(QQ))


def test_divmod_geometric_series():
    q, r = poly_divmod(X("x^11 - 1"), X("x - 1"))
    assert not r
    assert q == UniPoly([1] * 11, QQ)
    # independent check: multiplying back
    assert q * X("x - 1") == X("x^11 - 1")


def test_divmod_by_zero():
    with pytest.raises(DivisionByZeroPoly):
        poly_divmod(X("x"), UniPoly.zero(QQ))


def test_field_mismatch():
    with pytest.raises(FieldMismatch):
        X("x") + X("x", GF(5))


@settings(max_examples=200, deadline=None)
@given(st.data())
def test_divmod_reconstruction(data):
    field = data.draw(fields)
    a = data.draw(unipolys(field))
    b = data.draw(unipolys(field))
    assume(b)
    q, r = poly_divmod(a, b)
    assert q * b + r == a
    assert not r or r.degree < b.degree


def test_gcd_examples():
    assert gcd_monic(X("1"), X("x^3")) == X("1")
    assert gcd_monic(X("x"), X("x^11 - 1")) == X("1")
    assert gcd_monic(X("x^2 - 1"), X("x - 1")) == X("x - 1")
    assert gcd_monic(X("3*x^2 - 3"), UniPoly.zero(QQ)) == X("x^2 - 1")
    assert gcd_monic(X("5"), X("x^4 + x")) == X("1")
    with pytest.raises(BothZero):
        gcd_monic(UniPoly.zero(QQ), UniPoly.zero(QQ))


@settings(max_examples=150, deadline=None)
@given(st.data())
def test_gcd_properties(data):
    field = data.draw(fields)
    a = data.draw(unipolys(field, 6))
    b = data.draw(unipolys(field, 6))
    c = data.draw(unipolys(field, 4))
    assume(a or b)
    g = gcd_monic(a, b)
    assert g.lc == 1
    assert not poly_divmod(a, g)[1]
    assert not poly_divmod(b, g)[1]
    assume(c)
    assert gcd_monic(a * c, b * c) == c.monic() * g


def test_ord_examples():
    assert ord_at(X("x^3"), 0) == 3
    assert ord_at(X("x^11 - 1"), 1) == 1
    assert ord_at(X("x^3"), 2) == 0
    with pytest.raises(ZeroPolynomial):
        ord_at(UniPoly.zero(QQ), 0)


@settings(max_examples=150, deadline=None)
@given(st.data())
def test_ord_consistency(data):
    field = data.draw(fields)
    p = data.draw(unipolys(field, 8))
    assume(p)
    c = data.draw(st.integers(-3, 3))
    k = data.draw(st.integers(0, 4))
    p = p * UniPoly.linear_root(c, field) ** k
    m = ord_at(p, c)
    assert m >= k
    q = p.exact_div(UniPoly.linear_root(c, field) ** m)
    assert q.evaluate(c) != 0


def test_roots_examples():
    (r0,) = roots_in_field(X("x^3"))
    assert (r0[0].value, r0[1]) == (0, 3)
    assert [(r.value, m) for r, m in roots_in_field(X("x^11 - 1"))] == [(1, 1)]
    F = GF(5)
    # exhaustive scan by hand: 2^2 + 1 = 5, 3^2 + 1 = 10
    expected = [(b, 1) for b in range(5) if (b * b + 1) % 5 == 0]
    assert [(r.value, m) for r, m in roots_in_field(X("x^2 + 1", F))] == expected == [(2, 1), (3, 1)]
    with pytest.raises(ZeroPolynomial):
        roots_in_field(UniPoly.zero(QQ))


def test_rational_roots_with_fractions_and_multiplicity():
    p = X("(2*x - 3)^2 * (3*x + 1) * x^2 * (x^2 + 1)")
    got = {(r.value, m) for r, m in roots_in_field(p)}
    assert got == {(Fraction(3, 2), 2), (Fraction(-1, 3), 1), (Fraction(0), 2)}
    assert roots_in_field(X("7")) == []
    assert roots_in_field(X("1/2*x + 1/3"))[0][0].value == Fraction(-2, 3)


def test_rational_roots_large_coefficients():
    # trailing coefficient with two 10-digit prime factors
    a, b = 1000000007, 998244353
    p = X(f"(x - {a})*(x + {b})*(x^2 + 3)")
    assert {r.value for r, _ in roots_in_field(p)} == {Fraction(a), Fraction(-b)}


@settings(max_examples=100, deadline=None)
@given(st.data())
def test_roots_gfp_match_exhaustive_evaluation(data):
    field = data.draw(st.sampled_from([GF(2), GF(5), GF(7), GF(13)]))
    p = data.draw(unipolys(field, 8))
    assume(p)
    got = {r.value: m for r, m in roots_in_field(p)}
    brute = {c for c in range(field.modulus) if sum(a * c**j for j, a in enumerate(p.coeffs)) % field.modulus == 0}
    assert set(got) == brute
    for c, m in got.items():
        assert m == ord_at(p, c)


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_roots_q_planted(data):
    roots = data.draw(st.lists(st.tuples(st.integers(-6, 6), st.integers(1, 4)), max_size=4))
    extra = data.draw(st.sampled_from(["1", "x^2 + 2", "x^2 - 2", "3*x^2 + x + 1"]))
    p = X(extra)
    expected = {}
    for num, den in roots:
        p = p * UniPoly([Fraction(-num, den), 1], QQ)
        expected[Fraction(num, den)] = expected.get(Fraction(num, den), 0) + 1
    got = {r.value: m for r, m in roots_in_field(p)}
    assert got == expected


def test_supported_part_degree_examples():
    assert supported_part_degree(X("x^3*(x - 1)"), X("x")) == 3
    assert supported_part_degree(X("x^2 - 1"), X("x - 1")) == 1
    assert supported_part_degree(X("x^2 + 1"), X("x^4 - 1")) == 2
    assert supported_part_degree(X("x^2 + 1"), X("x - 5")) == 0
    with pytest.raises(ZeroPolynomial):
        supported_part_degree(UniPoly.zero(QQ), X("x"))


@settings(max_examples=100, deadline=None)
@given(st.data())
def test_supported_part_degree_split_polys(data):
    field = data.draw(st.sampled_from([GF(5), GF(7), GF(11)]))
    p = field.modulus
    g_roots = data.draw(st.lists(st.integers(0, p - 1), min_size=1, max_size=6))
    h_roots = data.draw(st.lists(st.integers(0, p - 1), max_size=4))
    g = UniPoly([data.draw(st.integers(1, p - 1))], field)
    for r in g_roots:
        g = g * UniPoly.linear_root(r, field)
    h = UniPoly([1], field)
    for r in h_roots:
        h = h * UniPoly.linear_root(r, field)
    expected = sum(m for a, m in roots_in_field(g) if a.value in set(h_roots))
    assert supported_part_degree(g, h) == expected == sum(1 for r in g_roots if r in set(h_roots))


def test_shift():
    assert X("x^2").shift(1) == X("x^2 + 2*x + 1")
