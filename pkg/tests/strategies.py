"""Hypothesis strategies for polynomials over Q and GF(p)."""

from fractions import Fraction

from hypothesis import strategies as st

from labatie import GF, QQ, BiPoly, UniPoly

fields = st.sampled_from([QQ, GF(2), GF(5), GF(7), GF(13)])

small_rationals = st.builds(Fraction, st.integers(-9, 9), st.integers(1, 4))


def scalars(field):
    if field.is_prime_field:
        return st.integers(0, field.modulus - 1)
    return small_rationals


def unipolys(field, max_degree=12):
    return st.lists(scalars(field), max_size=max_degree + 1).map(lambda cs: UniPoly(cs, field))


def bipolys(field, max_deg_y=4, max_deg_x=4):
    return st.lists(unipolys(field, max_deg_x), max_size=max_deg_y + 1).map(
        lambda cs: BiPoly(cs, field)
    )
