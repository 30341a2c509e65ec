"""Brute-force ground truth, independent of the elimination engine.

``brute_force_zeros`` scans all of GF(p)^2.  ``oracle_multiplicity``
computes the intersection multiplicity straight from its definition, as the
dimension of the local algebra at the point, by exact linear algebra on
truncations modulo powers of the maximal ideal.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bipoly import BiPoly, bivariate_gcd, eval_point
from .errors import CapExceeded, FieldMismatch, InfiniteMultiplicity
from .field import FieldSpec

MAX_ORDER = 64


def brute_force_zeros(V: BiPoly, W: BiPoly, p: int | None = None) -> set[tuple[int, int]]:
    """All common zeros of V and W in GF(p)^2, as pairs of residues."""
    field = V.field
    if W.field != field or not field.is_prime_field:
        raise FieldMismatch("brute-force enumeration needs both polynomials over the same GF(p)")
    if p is not None and p != field.modulus:
        raise FieldMismatch(f"requested GF({p}) but the polynomials are over {field}")
    zeros = set()
    for a in field.elements():
        sv = V.section_at(a)
        sw = W.section_at(a)
        for b in field.elements():
            if not sv.evaluate(b) and not sw.evaluate(b):
                zeros.add((a, b))
    return zeros


@dataclass(frozen=True)
class LocalAlgebraInstance:
    """V and W translated so that the query point sits at the origin."""

    V: BiPoly
    W: BiPoly
    order: int
    shift: tuple = (0, 0)

    @classmethod
    def at(cls, V: BiPoly, W: BiPoly, a, b, order: int) -> LocalAlgebraInstance:
        return cls(V.shift(a, b), W.shift(a, b), order, (a, b))


def _rank(rows: list[dict], field: FieldSpec) -> int:
    """Rank of sparse rows ``{column: value}`` by exact Gaussian elimination."""
    pivots: dict = {}  # pivot column -> row normalized to 1 at that column
    norm = field.norm
    for row in rows:
        row = dict(row)
        while row:
            col = max(row)
            piv = pivots.get(col)
            if piv is None:
                inv = field.inv(row[col])
                pivots[col] = {k: norm(c * inv) for k, c in row.items()}
                break
            f = row[col]
            for k, c in piv.items():
                val = norm(row.get(k, field.zero) - f * c)
                if val:
                    row[k] = val
                else:
                    row.pop(k, None)
    return len(pivots)


def _monomials_below(order: int) -> list[tuple[int, int]]:
    return [(i, t - i) for t in range(order) for i in range(t + 1)]


def local_dimension(inst: LocalAlgebraInstance) -> int:
    """dim K[x, y] / ((V, W) + m^N) where m is the ideal of the origin.

    That ideal contains m^N, so the quotient is supported at the origin only
    and equals its localization there.  Multipliers of total degree >= N
    contribute nothing modulo m^N, so only those below N are used.
    """
    N = inst.order
    field = inst.V.field
    basis = _monomials_below(N)
    rows = []
    for gen in (inst.V, inst.W):
        terms = [((i, j), c) for (i, j), c in gen.terms().items() if i + j < N]
        if not terms:
            continue
        for s, t in basis:
            row = {}
            for (i, j), c in terms:
                if i + j + s + t < N:
                    row[(i + s + j + t, j + t)] = c
            if row:
                rows.append(row)
    return len(basis) - _rank(rows, field)


def oracle_multiplicity(V: BiPoly, W: BiPoly, a, b, cap: int = MAX_ORDER) -> int:
    """Intersection multiplicity of V and W at (a, b) from the definition.

    The truncated dimensions are non-decreasing in N; once two consecutive
    ones agree, m^N lies in the local ideal (Nakayama) and the value is final.
    """
    field = V.field
    if W.field != field:
        raise FieldMismatch(f"oracle over {V.field} and {W.field}")
    a, b = field.convert(a), field.convert(b)
    common = bivariate_gcd(V, W)
    if not eval_point(common, a, b).value:
        raise InfiniteMultiplicity(
            f"({field.format_scalar(a)}, {field.format_scalar(b)}) lies on the common factor {common}"
        )
    sV, sW = V.shift(a, b), W.shift(a, b)
    prev = local_dimension(LocalAlgebraInstance(sV, sW, 1, (a, b)))
    for N in range(2, cap + 1):
        cur = local_dimension(LocalAlgebraInstance(sV, sW, N, (a, b)))
        if cur < prev:
            raise AssertionError(f"local dimension decreased from {prev} to {cur} at N={N}")
        if cur == prev:
            return cur
        prev = cur
    raise CapExceeded(f"local dimension still growing at truncation order {cap}")

