from fractions import Fraction

import pytest

from labatie import GF, QQ, FieldElement, FieldMismatch, parse_field
from labatie.errors import NotPrime


def test_rationals_are_reduced():
    e = QQ(Fraction(6, -4))
    assert e.value == Fraction(-3, 2)
    assert e.value.denominator > 0


def test_prime_field_residues():
    F = GF(7)
    assert F(-1).value == 6
    assert F(15).value == 1
    assert (F(3) / F(5)).value * 5 % 7 == 3
    assert F(Fraction(1, 2)).value == 4


@pytest.mark.parametrize("p", [0, 1, 4, 9, 91, 2**31 + 11])
def test_composite_and_out_of_range_moduli_rejected(p):
    with pytest.raises(NotPrime):
        GF(p)


def test_mixed_fields_rejected():
    with pytest.raises(FieldMismatch):
        GF(5)(1) + GF(7)(1)
    with pytest.raises(FieldMismatch):
        QQ(1) * GF(5)(2)


def test_parse_field_syntax():
    assert parse_field("q") == QQ
    assert parse_field("gf:7") == GF(7)
    with pytest.raises(ValueError):
        parse_field("gf:8x")


def test_scalar_json_forms():
    assert QQ.json_scalar(QQ.convert(3)) == "3/1"
    assert QQ.json_scalar(Fraction(-1, 2)) == "-1/2"
    assert QQ.from_json_scalar("-1/2") == Fraction(-1, 2)
    assert GF(7).json_scalar(6) == 6


def test_field_element_ordering_and_equality():
    assert QQ(1) == FieldElement(Fraction(1), QQ)
    assert sorted([QQ(2), QQ(-1), QQ(Fraction(1, 2))]) == [QQ(-1), QQ(Fraction(1, 2)), QQ(2)]
