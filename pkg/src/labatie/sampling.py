"""Random polynomials and input pairs for randomized cross-checks."""

from __future__ import annotations

import random
from fractions import Fraction

from .bipoly import BiPoly
from .elimination import EliminationTrace, eliminate
from .errors import DegyZero, NotCoprime
from .field import FieldSpec


def random_scalar(rng: random.Random, field: FieldSpec, bound: int = 5):
    if field.is_prime_field:
        return rng.randrange(field.modulus)
    num = rng.randint(-bound, bound)
    den = rng.choice((1, 1, 1, 2, 3))
    return Fraction(num, den)


def random_bipoly(
    rng: random.Random,
    field: FieldSpec,
    max_deg_y: int,
    max_deg_x: int,
    density: float = 0.6,
) -> BiPoly:
    terms = {}
    for j in range(max_deg_y + 1):
        for i in range(max_deg_x + 1):
            if rng.random() < density:
                terms[(i, j)] = random_scalar(rng, field)
    return BiPoly.from_terms(terms, field)


def plant_zero(W: BiPoly, a, b) -> BiPoly:
    """Subtract the value at (a, b) so that the point becomes a zero."""
    return W - W(a, b)


def random_trace(
    rng: random.Random,
    field: FieldSpec,
    max_deg_y: int,
    max_deg_x: int,
    planted: int = 0,
    max_tries: int = 1000,
) -> tuple[BiPoly, BiPoly, EliminationTrace]:
    """A random pair accepted by the elimination engine, with its trace.

    With ``planted > 0`` both polynomials are forced to vanish at that many
    random points (all at the same first point when the degrees are tiny,
    which is fine: the goal is to get common zeros at all).
    """
    for _ in range(max_tries):
        A = random_bipoly(rng, field, rng.randint(1, max_deg_y), max_deg_x)
        B = random_bipoly(rng, field, rng.randint(1, max_deg_y), max_deg_x)
        for _ in range(planted):
            a = random_scalar(rng, field, 3)
            b = random_scalar(rng, field, 3)
            A, B = plant_zero(A, a, b), plant_zero(B, a, b)
        if not A or not B:
            continue
        try:
            return A, B, eliminate(A, B)
        except (DegyZero, NotCoprime):
            continue
    raise RuntimeError("could not sample an admissible pair")
