"""Solutions and intersection multiplicities from an elimination trace."""

from __future__ import annotations

from dataclasses import dataclass

from .bipoly import BiPoly, section_at
from .elimination import EliminationTrace, TriangularSystem, triangular_systems
from .field import FieldElement, FieldSpec
from .unipoly import UniPoly, gcd_monic, ord_at, roots_in_field, supported_part_degree


@dataclass(frozen=True)
class SolutionPoint:
    a: FieldElement
    b: FieldElement
    multiplicity: int
    contributions: tuple[tuple[int, int], ...]  # (system index i, partial multiplicity)


@dataclass(frozen=True)
class SolutionReport:
    systems: tuple[TriangularSystem, ...]
    points: tuple[SolutionPoint, ...]
    closure_count: int
    field: FieldSpec

    def as_dict(self) -> dict[tuple, int]:
        return {(p.a.value, p.b.value): p.multiplicity for p in self.points}


def triangular_multiplicity(W: BiPoly, g: UniPoly, a, b) -> int:
    """Multiplicity of (a, b) on ``W = 0, g(x) = 0``: ord_a(g) * ord_b(W(a, y))."""
    k = ord_at(g, a)
    if not k:
        return 0
    return k * ord_at(section_at(W, a), b)


def contributions(trace: EliminationTrace, a, b) -> list[tuple[int, int]]:
    out = []
    for i in range(1, trace.n + 1):
        m = triangular_multiplicity(trace.V[i + 1], trace.g(i), a, b)
        if m:
            out.append((i, m))
    return out


def point_multiplicity(trace: EliminationTrace, a, b) -> int:
    """Intersection multiplicity of V_1, V_2 at (a, b) as the sum over the systems."""
    return sum(m for _, m in contributions(trace, a, b))


def solve_in_field(trace: EliminationTrace) -> SolutionReport:
    field = trace.field
    systems = triangular_systems(trace)
    candidates = set()
    for s in systems:
        if s.empty:
            continue
        for a, _ in roots_in_field(s.g):
            for b, _ in roots_in_field(section_at(s.W, a)):
                candidates.add((a.value, b.value))
    points = []
    for a, b in sorted(candidates):
        contrib = contributions(trace, a, b)
        points.append(
            SolutionPoint(
                FieldElement(a, field),
                FieldElement(b, field),
                sum(m for _, m in contrib),
                tuple(contrib),
            )
        )
    return SolutionReport(tuple(systems), tuple(points), closure_count(trace), field)


def closure_count(trace: EliminationTrace) -> int:
    """Number of solutions over the algebraic closure, with multiplicity.

    For a closure root ``a`` of ``g`` the section W(a, y) loses one degree
    for every top y-coefficient of W vanishing at ``a``; ``h_k`` (the gcd of
    the top k coefficients) vanishes at ``a`` exactly when the top k all do.
    """
    total = 0
    for i in range(1, trace.n + 1):
        g = trace.g(i)
        if g.degree <= 0:
            continue
        W = trace.V[i + 1]
        dy = W.deg_y
        correction = 0
        h = UniPoly.zero(trace.field)
        for k in range(1, dy + 1):
            h = gcd_monic(h, W.coeffs[dy - k + 1])
            correction += supported_part_degree(g, h)
        total += g.degree * dy - correction
    return total
