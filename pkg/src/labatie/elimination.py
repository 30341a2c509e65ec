"""Labatie's elimination: remainder sequence, reduction and cofactor sequences.

For a coprime, y-primitive pair ``V1, V2`` with ``0 < deg_y V2 <= deg_y V1``
the Euclidean algorithm in K[x][y] gives

    u_i V_i = Q_i V_{i+1} + v_i V_{i+2}        (i = 1..n, V_{n+2} = 1)

and the system ``V1 = V2 = 0`` splits into the triangular systems
``V_{i+1} = 0, v_i/d_i = 0`` where ``d_i`` strips from ``v_i`` the factors
already accounted for by the multipliers ``u_1..u_i``.

Indices in this module follow the mathematical 1-based numbering; the
sequences are stored in tuples with a leading ``None`` placeholder where
needed so that ``trace.V[1]`` is V_1.  ``G`` and ``H`` start at index 0.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from .bipoly import BiPoly, pseudo_divide, y_content, y_primitive_part
from .errors import DegreeOrder, DegyZero, NotCoprime, ZeroInput
from .unipoly import UniPoly, gcd_monic


@dataclass(frozen=True)
class Normalization:
    swapped: bool
    contents: tuple[UniPoly, UniPoly]  # removed from the two inputs, in input order


@dataclass(frozen=True)
class EliminationTrace:
    V: tuple  # V[1..n+2]; V[0] is None
    Q: tuple  # Q[1..n]
    u: tuple  # u[1..n]
    v: tuple  # v[1..n]
    n: int
    d: tuple = ()  # d[1..n]
    w: tuple = ()  # w[1..n]
    G: tuple = ()  # G[0..n]
    H: tuple = ()  # H[0..n]
    normalization: Normalization | None = None

    @property
    def field(self):
        return self.V[1].field

    def g(self, i: int) -> UniPoly:
        """The reduced factor v_i / d_i."""
        return self.v[i].exact_div(self.d[i])


@dataclass(frozen=True)
class TriangularSystem:
    W: BiPoly
    g: UniPoly
    index: int

    @property
    def empty(self) -> bool:
        # a non-zero constant g has no roots
        return self.g.degree == 0


def normalize_pair(a: BiPoly, b: BiPoly) -> tuple[BiPoly, BiPoly, bool, tuple[UniPoly, UniPoly]]:
    """Strip y-contents and order the pair so that ``deg_y V2 <= deg_y V1``."""
    if not a or not b:
        raise ZeroInput("both polynomials must be non-zero")
    ca, cb = y_content(a), y_content(b)
    pa, pb = y_primitive_part(a), y_primitive_part(b)
    for name, p in (("first", pa), ("second", pb)):
        if p.deg_y == 0:
            raise DegyZero(f"the {name} polynomial has no y-dependent primitive part")
    swapped = pb.deg_y > pa.deg_y
    if swapped:
        pa, pb = pb, pa
    return pa, pb, swapped, (ca, cb)


def remainder_sequence(v1: BiPoly, v2: BiPoly) -> EliminationTrace:
    """Iterated pseudo-division with content extraction (fills V, Q, u, v, n)."""
    if v1.field != v2.field:
        raise DegreeOrder("inputs over different fields")
    if not (0 < v2.deg_y <= v1.deg_y):
        raise DegreeOrder(f"need 0 < deg_y V2 <= deg_y V1, got {v2.deg_y} and {v1.deg_y}")
    for p in (v1, v2):
        if not y_content(p).is_one():
            raise DegreeOrder(f"input {p} is not y-primitive")
    V = [None, v1, v2]
    Q, u, v = [None], [None], [None]
    i = 1
    while True:
        ui, qi, r = pseudo_divide(V[i], V[i + 1])
        if not r:
            raise NotCoprime(
                f"the inputs share the factor {V[i + 1]} of positive y-degree",
                common=V[i + 1],
            )
        u.append(ui)
        Q.append(qi)
        if r.deg_y == 0:
            v.append(r.coeffs[0])
            V.append(BiPoly.one(v1.field))
            return EliminationTrace(V=tuple(V), Q=tuple(Q), u=tuple(u), v=tuple(v), n=i)
        v.append(y_content(r))
        V.append(y_primitive_part(r))
        i += 1


def reduction_sequences(trace: EliminationTrace) -> EliminationTrace:
    """d_i = gcd(w_{i-1} u_i, v_i) and w_i = w_{i-1} u_i / d_i, with w_0 = 1."""
    d, w = [None], [None]
    prev = UniPoly.constant(1, trace.field)
    for i in range(1, trace.n + 1):
        t = prev * trace.u[i]
        di = gcd_monic(t, trace.v[i])
        d.append(di)
        prev = t.exact_div(di)
        w.append(prev)
    return replace(trace, d=tuple(d), w=tuple(w))


def cofactor_sequences(trace: EliminationTrace) -> EliminationTrace:
    """Build G_0..G_n and H_0..H_n.

    G_i = (G_{i-1} Q_i + G_{i-2} u_i v_{i-1}/d_{i-1}) / d_i, likewise for H.
    The two summands need not be divisible by d_i separately, only their sum
    is; the division is checked to be exact.
    """
    field = trace.field
    one = BiPoly.one(field)
    zero = BiPoly.zero(field)
    d, u, Q = trace.d, trace.u, trace.Q
    G = [one, Q[1].exact_div_uni(d[1])]
    H = [zero, BiPoly.from_uni(u[1].exact_div(d[1]))]
    for i in range(2, trace.n + 1):
        mult = u[i] * trace.g(i - 1)
        G.append((G[i - 1] * Q[i] + G[i - 2] * mult).exact_div_uni(d[i]))
        H.append((H[i - 1] * Q[i] + H[i - 2] * mult).exact_div_uni(d[i]))
    return replace(trace, G=tuple(G), H=tuple(H))


def triangular_systems(trace: EliminationTrace) -> list[TriangularSystem]:
    return [TriangularSystem(trace.V[i + 1], trace.g(i), i) for i in range(1, trace.n + 1)]


def eliminate(a: BiPoly, b: BiPoly) -> EliminationTrace:
    """Run the whole pipeline on an arbitrary non-zero pair."""
    v1, v2, swapped, contents = normalize_pair(a, b)
    trace = remainder_sequence(v1, v2)
    trace = cofactor_sequences(reduction_sequences(trace))
    return replace(trace, normalization=Normalization(swapped, contents))


# -- identity verification ---------------------------------------------------


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    index: int
    ok: bool
    witness: object = None  # the non-zero difference when the check fails


@dataclass
class VerificationReport:
    checks: list[IdentityCheck] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def failures(self) -> list[IdentityCheck]:
        return [c for c in self.checks if not c.ok]

    def add(self, name: str, index: int, difference) -> None:
        ok = not difference
        self.checks.append(IdentityCheck(name, index, ok, None if ok else difference))

    def summary(self) -> dict[str, bool]:
        out: dict[str, bool] = {}
        for c in self.checks:
            out[c.name] = out.get(c.name, True) and c.ok
        return out


def _prod(polys, one):
    result = one
    for p in polys:
        result = result * p
    return result


def verify_identities(trace: EliminationTrace) -> VerificationReport:
    """Check every identity of the elimination as an exact polynomial equation.

    Names: ``(1)`` the division steps, ``(2)``/``(3)`` the cofactor
    expansions of V_1/V_2, ``(4)`` the expression of V_{i+1} in terms of the
    inputs, ``D`` the determinant closed form, ``w`` the closed form of w_i and
    ``coprime`` the coprimality of w_i and v_i/d_i.
    """
    report = VerificationReport()
    n = trace.n
    V, Q, u, v, d, w, G, H = trace.V, trace.Q, trace.u, trace.v, trace.d, trace.w, trace.G, trace.H
    field = trace.field
    one = UniPoly.constant(1, field)
    g = [None] + [trace.g(i) for i in range(1, n + 1)]
    w0 = [one] + list(w[1:])  # w_0 = 1

    for i in range(1, n + 1):
        report.add("(1)", i, V[i] * u[i] - Q[i] * V[i + 1] - V[i + 2] * v[i])

    for i in range(2, n + 2):
        report.add("(2)", i, V[1] * w0[i - 1] - G[i - 1] * V[i] - G[i - 2] * V[i + 1] * g[i - 1])
        report.add("(3)", i, V[2] * w0[i - 1] - H[i - 1] * V[i] - H[i - 2] * V[i + 1] * g[i - 1])

    for i in range(2, n + 2):
        coeff = _prod(g[1:i], one)
        if i % 2:
            coeff = -coeff
        report.add("(4)", i, V[i + 1] * coeff - (H[i - 1] * V[1] - G[i - 1] * V[2]))

    for i in range(1, n + 1):
        det = G[i] * H[i - 1] - G[i - 1] * H[i]
        closed = BiPoly.from_uni(w[i] * _prod(g[1:i], one))
        if i % 2:
            closed = -closed
        report.add("D", i, det - closed)

    for i in range(1, n + 1):
        report.add("w", i, w[i] * _prod(d[1 : i + 1], one) - _prod(u[1 : i + 1], one))

    for i in range(1, n + 1):
        common = gcd_monic(w[i], g[i])
        report.add("coprime", i, UniPoly.zero(field) if common.is_one() else common)

    return report
