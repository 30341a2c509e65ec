"""Exact solving of two polynomial equations in two unknowns by Labatie's elimination."""

from .bipoly import BiPoly, bivariate_gcd, eval_point, pseudo_divide, section_at, y_content, y_primitive_part
from .elimination import (
    EliminationTrace,
    TriangularSystem,
    VerificationReport,
    cofactor_sequences,
    eliminate,
    normalize_pair,
    reduction_sequences,
    remainder_sequence,
    triangular_systems,
    verify_identities,
)
from .errors import *  # noqa: F401,F403
from .field import GF, QQ, FieldElement, FieldKind, FieldSpec, parse_field
from .oracle import LocalAlgebraInstance, brute_force_zeros, local_dimension, oracle_multiplicity
from .parser import PolySource, format_poly, parse_poly
from .solver import (
    SolutionPoint,
    SolutionReport,
    closure_count,
    point_multiplicity,
    solve_in_field,
    triangular_multiplicity,
)
from .unipoly import UniPoly, gcd_monic, ord_at, poly_divmod, roots_in_field, supported_part_degree

__version__ = "0.1.0"
