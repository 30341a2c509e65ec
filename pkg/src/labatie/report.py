"""JSON documents and text rendering for traces, solutions and verifications.

Top-level JSON keys: ``command``, ``field`` (``{kind, modulus?}``), ``inputs``
and, depending on the command, ``trace``, ``systems``, ``points``,
``closure_count``, ``multiplicity``, ``verification``.  Polynomials are
written in the parser's canonical text form; rational scalars as
``"num/den"`` strings and GF(p) scalars as integers.
"""

from __future__ import annotations

from .elimination import EliminationTrace, TriangularSystem, VerificationReport
from .field import FieldSpec
from .parser import format_poly, format_univariate
from .solver import SolutionPoint, SolutionReport


def trace_to_json(trace: EliminationTrace) -> dict:
    doc = {
        "n": trace.n,
        "V": [format_poly(p) for p in trace.V[1:]],
        "Q": [format_poly(p) for p in trace.Q[1:]],
        "u": [format_univariate(p) for p in trace.u[1:]],
        "v": [format_univariate(p) for p in trace.v[1:]],
        "d": [format_univariate(p) for p in trace.d[1:]],
        "w": [format_univariate(p) for p in trace.w[1:]],
        "G": [format_poly(p) for p in trace.G],
        "H": [format_poly(p) for p in trace.H],
    }
    if trace.normalization is not None:
        doc["swapped"] = trace.normalization.swapped
        doc["contents"] = [format_univariate(c) for c in trace.normalization.contents]
    return doc


def systems_to_json(systems) -> list[dict]:
    return [
        {"index": s.index, "W": format_poly(s.W), "g": format_univariate(s.g), "empty": s.empty}
        for s in systems
    ]


def point_to_json(p: SolutionPoint, field: FieldSpec) -> dict:
    return {
        "a": field.json_scalar(p.a.value),
        "b": field.json_scalar(p.b.value),
        "multiplicity": p.multiplicity,
        "contributions": [list(c) for c in p.contributions],
    }


def solution_to_json(report: SolutionReport) -> dict:
    return {
        "systems": systems_to_json(report.systems),
        "points": [point_to_json(p, report.field) for p in report.points],
        "closure_count": report.closure_count,
    }


def verification_to_json(report: VerificationReport) -> dict:
    return {
        "ok": report.ok,
        "identities": report.summary(),
        "failures": [
            {"identity": c.name, "index": c.index, "witness": str(c.witness)}
            for c in report.failures
        ],
    }


# -- text --------------------------------------------------------------------


def render_trace(trace: EliminationTrace) -> list[str]:
    lines = [f"steps n = {trace.n}"]
    for i in range(1, trace.n + 1):
        lines.append(
            f"  ({i})  u={format_univariate(trace.u[i])}  Q={format_poly(trace.Q[i])}"
            f"  v={format_univariate(trace.v[i])}  d={format_univariate(trace.d[i])}"
            f"  w={format_univariate(trace.w[i])}"
        )
    lines.append("remainder chain:")
    for i, p in enumerate(trace.V[1:], start=1):
        lines.append(f"  V{i} = {format_poly(p)}")
    return lines


def render_systems(systems: list[TriangularSystem]) -> list[str]:
    lines = ["triangular systems:"]
    for s in systems:
        tag = "  (empty)" if s.empty else ""
        lines.append(f"  [{s.index}] {format_poly(s.W)} = 0, {format_univariate(s.g)} = 0{tag}")
    return lines


def render_points(report: SolutionReport) -> list[str]:
    lines = [f"solutions in {report.field}:"]
    if not report.points:
        lines.append("  none")
    for p in report.points:
        parts = ", ".join(f"system {i}: {m}" for i, m in p.contributions)
        lines.append(f"  ({p.a}, {p.b})  multiplicity {p.multiplicity}  [{parts}]")
    lines.append(f"closure count: {report.closure_count}")
    return lines
