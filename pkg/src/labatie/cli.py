"""Command-line entry point: ``labatie {decompose,solve,multiplicity,count,verify}``."""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass

from . import report as rep
from .elimination import EliminationTrace, eliminate, triangular_systems, verify_identities
from .errors import LabatieError
from .field import FieldSpec, parse_field
from .oracle import brute_force_zeros, oracle_multiplicity
from .parser import PolySource
from .sampling import random_trace
from .solver import contributions, closure_count, point_multiplicity, solve_in_field

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2

COMMANDS = ("decompose", "solve", "multiplicity", "count", "verify")


@dataclass(frozen=True)
class RunConfig:
    command: str
    field: FieldSpec
    inputs: tuple[PolySource, PolySource]
    point: tuple[str, str] | None = None
    output: str = "text"
    seed: int | None = None
    trials: int = 50
    oracle: bool = False
    out: str | None = None

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ValueError(f"unknown command {self.command!r}")
        if (self.point is not None) != (self.command == "multiplicity"):
            raise ValueError("a point is required for, and only for, the multiplicity command")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="labatie",
        description="Solve two polynomial equations in x, y by Labatie's elimination.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in (
        ("decompose", "print the elimination trace and triangular systems"),
        ("solve", "solutions in the ground field with multiplicities"),
        ("multiplicity", "intersection multiplicity at one point"),
        ("count", "number of solutions over the algebraic closure"),
        ("verify", "check all identities and run randomized oracle cross-checks"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("first", help="first polynomial, e.g. 'y^5 - x^3'")
        p.add_argument("second", help="second polynomial")
        p.add_argument("--field", default="q", help="'q' (default) or 'gf:<prime>'")
        p.add_argument("--json", dest="output", action="store_const", const="json", default="text")
        p.add_argument("--out", help="also write the JSON document to this file")
        if name == "multiplicity":
            p.add_argument("--point", required=True, help="point as 'a,b'")
            p.add_argument("--oracle", action="store_true", help="also compute the brute-force value")
        if name == "verify":
            p.add_argument("--trials", type=int, default=50)
            p.add_argument("--seed", type=int, default=None)
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    field = parse_field(args.field)
    point = None
    if args.command == "multiplicity":
        parts = args.point.split(",")
        if len(parts) != 2:
            raise ValueError(f"point must look like 'a,b', got {args.point!r}")
        point = (parts[0], parts[1])
    return RunConfig(
        command=args.command,
        field=field,
        inputs=(PolySource(args.first, field), PolySource(args.second, field)),
        point=point,
        output=args.output,
        seed=getattr(args, "seed", None),
        trials=getattr(args, "trials", 50),
        oracle=getattr(args, "oracle", False),
        out=args.out,
    )


def _content_warnings(trace: EliminationTrace) -> list[str]:
    warnings = []
    for label, c in zip(("first", "second"), trace.normalization.contents):
        if c.degree > 0:
            warnings.append(
                f"warning: removed non-constant y-content {c} from the {label} input; "
                "its roots give vertical lines that are not part of the reported solutions"
            )
    return warnings


def _random_trials(config: RunConfig, seed: int) -> dict:
    """Randomized identity, solution-set and multiplicity cross-checks."""
    rng = random.Random(seed)
    field = config.field
    failures = []
    for t in range(config.trials):
        if field.is_prime_field:
            A, B, trace = random_trace(rng, field, 4, 3)
        else:
            A, B, trace = random_trace(rng, field, 3, 2, planted=1)
        if not verify_identities(trace).ok:
            failures.append({"trial": t, "check": "identities"})
            continue
        V1, V2 = trace.V[1], trace.V[2]
        solved = solve_in_field(trace)
        if field.is_prime_field:
            got = {(p.a.value, p.b.value) for p in solved.points}
            if got != brute_force_zeros(V1, V2):
                failures.append({"trial": t, "check": "solution set"})
                continue
        for p in solved.points:
            if oracle_multiplicity(V1, V2, p.a, p.b) != p.multiplicity:
                failures.append({"trial": t, "check": "multiplicity"})
                break
    return {"trials": config.trials, "seed": seed, "failures": failures}


def run(config: RunConfig, stdout=None) -> int:
    stdout = stdout or sys.stdout
    field = config.field
    A, B = (src.parse() for src in config.inputs)
    trace = eliminate(A, B)
    doc: dict = {
        "command": config.command,
        "field": field.to_json(),
        "inputs": [src.text for src in config.inputs],
    }
    for warning in _content_warnings(trace):
        print(warning, file=sys.stderr)
    lines: list[str] = []
    status = EXIT_OK

    if config.command == "decompose":
        systems = triangular_systems(trace)
        doc["trace"] = rep.trace_to_json(trace)
        doc["systems"] = rep.systems_to_json(systems)
        lines += rep.render_trace(trace) + rep.render_systems(systems)
    elif config.command == "solve":
        solution = solve_in_field(trace)
        doc.update(rep.solution_to_json(solution))
        lines += rep.render_systems(list(solution.systems)) + rep.render_points(solution)
    elif config.command == "multiplicity":
        a, b = (field.parse_scalar(s) for s in config.point)
        contrib = contributions(trace, a, b)
        m = point_multiplicity(trace, a, b)
        doc["point"] = [field.json_scalar(a), field.json_scalar(b)]
        doc["multiplicity"] = m
        doc["contributions"] = [list(c) for c in contrib]
        pt = f"({field.format_scalar(a)}, {field.format_scalar(b)})"
        lines.append(f"multiplicity at {pt}: {m}")
        for i, mi in contrib:
            lines.append(f"  system {i}: {mi}")
        if config.oracle:
            value = oracle_multiplicity(trace.V[1], trace.V[2], a, b)
            doc["oracle"] = value
            lines.append(f"oracle (local algebra dimension): {value}")
            if value != m:
                status = EXIT_VERIFY_FAILED
    elif config.command == "count":
        doc["closure_count"] = closure_count(trace)
        lines.append(f"closure count: {doc['closure_count']}")
    elif config.command == "verify":
        seed = config.seed if config.seed is not None else random.SystemRandom().randrange(2**32)
        ident = verify_identities(trace)
        trials = _random_trials(config, seed)
        doc["verification"] = rep.verification_to_json(ident)
        doc["verification"]["random"] = trials
        for name, ok in ident.summary().items():
            lines.append(f"identity {name}: {'pass' if ok else 'FAIL'}")
        for c in ident.failures:
            lines.append(f"  {c.name} at i={c.index}: difference {c.witness}")
        lines.append(
            f"random trials: {trials['trials']} (seed {seed}), failures: {len(trials['failures'])}"
        )
        if not ident.ok or trials["failures"]:
            status = EXIT_VERIFY_FAILED

    if config.out:
        with open(config.out, "w", encoding="utf-8") as fh:
            json.dump(doc, fh, indent=2)
            fh.write("\n")
    if config.output == "json":
        print(json.dumps(doc, indent=2), file=stdout)
    else:
        print("\n".join(lines), file=stdout)
    return status


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = config_from_args(args)
        return run(config)
    except (LabatieError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
